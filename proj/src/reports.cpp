#include "coh2/reports.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace coh2 {

namespace {

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown group id: " + id);
}

int family_max_rank(const FamilyCategory& cat) {
    int r = 0;
    for (const Subgroup& s : cat.objects)
        r = std::max(r, s.rank_if_elementary_abelian.value_or(0));
    return r;
}

json bit_rows(const F2Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        std::string s(m.cols, '0');
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m.get(r, c)) s[c] = '1';
        rows.push_back(s);
    }
    return rows;
}

json parameters_block(const RunConfig& cfg) {
    return json{{"max_degree", cfg.max_degree},
                {"nilpotence_k", cfg.nilpotence_k},
                {"power_e", cfg.power_e},
                {"s_max", cfg.s_max},
                {"max_cochain_dim", cfg.budget.max_cochain_dim},
                {"max_matrix_bits", cfg.budget.max_matrix_bits}};
}

// One table row; also the per-group payload shared with the quillen report.
json summary_row(const LimitReport& rep, const FamilyCategory& cat, int order) {
    json hl = json::array();
    for (const auto& cell : rep.e2) {
        if (cell.has_value())
            hl.push_back(cell->dims);
        else
            hl.push_back(nullptr);
    }
    return json{{"id", rep.group_id},
                {"order", order},
                {"family_objects", cat.object_count()},
                {"family_morphisms", cat.morphism_count()},
                {"max_rank", family_max_rank(cat)},
                {"kernel_dims", rep.kernel_dims},
                {"nilpotence", rep.nilpotence.verdict},
                {"power", rep.power.verdict},
                {"higher_limit_dims", hl},
                {"skip_notes", rep.skip_notes}};
}

void print_timing(std::ostream* diag, const std::string& label, double seconds) {
    if (!diag) return;
    std::ostringstream s;
    s << "[time] " << label << ": " << std::fixed << std::setprecision(2) << seconds
      << " s\n";
    *diag << s.str();
}

void print_cache_notes(std::ostream* diag, const RunConfig& cfg,
                       const std::vector<std::string>& notes) {
    if (!diag || !cfg.cache_dir) return;
    for (const std::string& n : notes) *diag << "[cache] " << n << "\n";
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- rendering helpers ----------------------------------------------------

std::string join_array(const json& arr, const char* sep) {
    std::string out;
    bool first = true;
    for (const auto& v : arr) {
        if (!first) out += sep;
        first = false;
        out += v.dump();
    }
    return out;
}

std::string bool_word(const json& b) { return b.get<bool>() ? "true" : "false"; }

// Aligned column block, two leading spaces, two spaces between columns,
// no trailing whitespace.
std::string render_columns(const std::vector<std::vector<std::string>>& rows,
                           const std::vector<bool>& right_align) {
    std::vector<std::size_t> width(right_align.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        std::string line = " ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += ' ';
            std::string cell = row[c];
            if (right_align[c])
                line += std::string(width[c] - cell.size(), ' ') + cell;
            else
                line += cell + std::string(width[c] - cell.size(), ' ');
            line += ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    return q + "\"";
}

std::string parameters_line(const json& p) {
    std::ostringstream s;
    s << "parameters: max degree " << p["max_degree"].get<int>() << ", nilpotence k = "
      << p["nilpotence_k"].get<int>() << ", power e = " << p["power_e"].get<int>()
      << ", s_max = " << p["s_max"].get<int>();
    return s.str();
}

std::string render_text_groups(const json& j) {
    std::ostringstream out;
    out << "catalog: " << j["count"].get<int>() << " groups";
    if (!j["order_filter"].is_null())
        out << " of order " << j["order_filter"].get<int>();
    out << "\n\n";
    std::vector<std::vector<std::string>> rows = {
        {"id", "order", "family-objects", "max-rank", "construction"}};
    for (const auto& g : j["groups"])
        rows.push_back({g["id"].get<std::string>(), std::to_string(g["order"].get<int>()),
                        std::to_string(g["family_objects"].get<int>()),
                        std::to_string(g["max_rank"].get<int>()),
                        g["construction"].get<std::string>()});
    out << render_columns(rows, {false, true, true, true, false});
    return out.str();
}

std::string render_text_cohomology(const json& j) {
    std::ostringstream out;
    out << "group " << j["group"].get<std::string>() << " (order "
        << j["order"].get<int>() << "), mod-2 cohomology through degree "
        << j["max_degree"].get<int>() << "\n\n";
    std::vector<std::string> head = {"t"}, dims = {"dim H^t"};
    for (std::size_t t = 0; t < j["betti"].size(); ++t) {
        head.push_back(std::to_string(t));
        dims.push_back(j["betti"][t].dump());
    }
    std::vector<bool> right(head.size(), true);
    right[0] = false;
    out << render_columns({head, dims}, right) << "\n";
    std::string gens;
    const json& counts = j["ring_generators_by_degree"];
    for (std::size_t s = 0; s < counts.size(); ++s) {
        if (counts[s].get<int>() == 0) continue;
        if (!gens.empty()) gens += ", ";
        gens += counts[s].dump() + " in degree " + std::to_string(s);
    }
    out << "ring generators: " << (gens.empty() ? "none" : gens) << "\n";
    return out.str();
}

std::string render_text_quillen(const json& j) {
    std::ostringstream out;
    out << "group " << j["group"].get<std::string>() << " (order "
        << j["order"].get<int>() << "), family: " << j["family"]["objects"].get<int>()
        << " objects, " << j["family"]["morphisms"].get<int>() << " morphisms, max rank "
        << j["family"]["max_rank"].get<int>() << "\n";
    out << parameters_line(j["parameters"]) << "\n\n";

    std::vector<std::vector<std::string>> rows = {
        {"t", "dim H^t", "dim lim^0", "dim ker", "lim^s dims"}};
    for (const auto& d : j["degrees"]) {
        std::string hl = d["higher_limit_dims"].is_null()
                             ? "-"
                             : join_array(d["higher_limit_dims"], " ");
        rows.push_back({std::to_string(d["t"].get<int>()), d["h_dim"].dump(),
                        d["lim0_dim"].dump(), d["kernel_dim"].dump(), hl});
    }
    out << render_columns(rows, {true, true, true, true, false});

    if (!j["skip_notes"].empty()) {
        out << "\nhigher-limit skips:\n";
        for (const auto& n : j["skip_notes"]) out << "  " << n.get<std::string>() << "\n";
    }
    out << "\nnilpotence (k = " << j["nilpotence"]["k"].get<int>()
        << "): " << bool_word(j["nilpotence"]["verdict"]) << "\n";
    out << "power (e = " << j["power"]["e"].get<int>() << ", degrees "
        << join_array(j["power"]["degrees_checked"], " ")
        << "): " << bool_word(j["power"]["verdict"]) << "\n";
    out << "verdicts: " << bool_word(j["verdicts_true"]) << "\n";
    return out.str();
}

std::string render_text_higher_limits(const json& j) {
    std::ostringstream out;
    int s_max = j["s_max"].get<int>();
    out << "group " << j["group"].get<std::string>() << " (order "
        << j["order"].get<int>() << "), coefficient degree "
        << j["coeff_degree"].get<int>() << "\n";
    out << "lim^s dims (s = 0.." << s_max << "): " << join_array(j["dims"], " ") << "\n";
    out << "cochain dims (levels 0.." << s_max + 1
        << "): " << join_array(j["cochain_dims"], " ") << "\n";
    return out.str();
}

std::string render_text_table(const json& j) {
    std::ostringstream out;
    out << parameters_line(j["parameters"]) << "\n\n";
    std::vector<std::vector<std::string>> rows = {{"group", "order", "family", "max-rank",
                                                   "nilpotence", "power", "skips",
                                                   "kernel dims (t = 1..)"}};
    for (const auto& g : j["groups"]) {
        json kd = json::array();
        for (std::size_t t = 1; t < g["kernel_dims"].size(); ++t)
            kd.push_back(g["kernel_dims"][t]);
        rows.push_back({g["id"].get<std::string>(), std::to_string(g["order"].get<int>()),
                        std::to_string(g["family_objects"].get<int>()),
                        std::to_string(g["max_rank"].get<int>()), bool_word(g["nilpotence"]),
                        bool_word(g["power"]), std::to_string(g["skip_notes"].size()),
                        join_array(kd, ";")});
    }
    out << render_columns(rows, {false, true, true, true, true, true, true, false});
    out << "\nall verdicts true: " << (j["all_verdicts_true"].get<bool>() ? "yes" : "no")
        << "\n";
    return out.str();
}

std::string higher_limit_cells_csv(const json& per_t) {
    std::string out;
    bool first = true;
    for (const auto& cell : per_t) {
        if (!first) out += "|";
        first = false;
        if (!cell.is_null()) out += join_array(cell, ";");
    }
    return out;
}

std::string render_csv_groups(const json& j) {
    std::string out = "id,order,family_objects,max_rank,construction\n";
    for (const auto& g : j["groups"])
        out += g["id"].get<std::string>() + "," + g["order"].dump() + "," +
               g["family_objects"].dump() + "," + g["max_rank"].dump() + "," +
               csv_field(g["construction"].get<std::string>()) + "\n";
    return out;
}

std::string render_csv_cohomology(const json& j) {
    std::string out = "group,order,max_degree,betti,ring_generators_by_degree\n";
    out += j["group"].get<std::string>() + "," + j["order"].dump() + "," +
           j["max_degree"].dump() + "," + join_array(j["betti"], ";") + "," +
           join_array(j["ring_generators_by_degree"], ";") + "\n";
    return out;
}

std::string render_csv_quillen(const json& j) {
    std::string out = "group,t,h_dim,lim0_dim,kernel_dim,higher_limit_dims\n";
    for (const auto& d : j["degrees"]) {
        std::string hl = d["higher_limit_dims"].is_null()
                             ? ""
                             : join_array(d["higher_limit_dims"], ";");
        out += j["group"].get<std::string>() + "," + d["t"].dump() + "," +
               d["h_dim"].dump() + "," + d["lim0_dim"].dump() + "," +
               d["kernel_dim"].dump() + "," + hl + "\n";
    }
    return out;
}

std::string render_csv_higher_limits(const json& j) {
    std::string out = "group,coeff_degree,s_max,dims,cochain_dims\n";
    out += j["group"].get<std::string>() + "," + j["coeff_degree"].dump() + "," +
           j["s_max"].dump() + "," + join_array(j["dims"], ";") + "," +
           join_array(j["cochain_dims"], ";") + "\n";
    return out;
}

std::string render_csv_table(const json& j) {
    std::string out =
        "group,order,family_objects,max_rank,nilpotence,power,kernel_dims,"
        "higher_limit_dims,skips\n";
    for (const auto& g : j["groups"])
        out += g["id"].get<std::string>() + "," + g["order"].dump() + "," +
               g["family_objects"].dump() + "," + g["max_rank"].dump() + "," +
               bool_word(g["nilpotence"]) + "," + bool_word(g["power"]) + "," +
               join_array(g["kernel_dims"], ";") + "," +
               higher_limit_cells_csv(g["higher_limit_dims"]) + "," +
               std::to_string(g["skip_notes"].size()) + "\n";
    return out;
}

} // namespace

void validate_run_config(const RunConfig& cfg, bool with_verdicts) {
    if (cfg.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (cfg.max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
    if (cfg.s_max < 0 || cfg.s_max > 6)
        throw std::invalid_argument("s_max must lie in 0..6");
    for (const std::string& id : cfg.groups) catalog_entry(id);
    if (!with_verdicts) return;
    if (cfg.nilpotence_k < 1) throw std::invalid_argument("nilpotence k must be positive");
    if (cfg.nilpotence_k > cfg.max_degree)
        throw std::invalid_argument("nilpotence k exceeds the degree truncation");
    if (cfg.power_e < 0) throw std::invalid_argument("power exponent must be nonnegative");
    if (cfg.power_e >= 31 || (1 << cfg.power_e) > cfg.max_degree)
        throw std::invalid_argument("2^e exceeds the degree truncation");
}

json list_groups_report(std::optional<int> order_filter) {
    json groups = json::array();
    for (const CatalogEntry& e : catalog()) {
        if (order_filter && e.order != *order_filter) continue;
        const Group& g = catalog_group(e.id);
        FamilyCategory cat = family_category(g);
        groups.push_back(json{{"id", e.id},
                              {"order", e.order},
                              {"construction", e.spec.describe()},
                              {"family_objects", cat.object_count()},
                              {"max_rank", family_max_rank(cat)}});
    }
    return json{{"schema", "coh2.groups/1"},
                {"count", groups.size()},
                {"order_filter", order_filter ? json(*order_filter) : json(nullptr)},
                {"groups", groups}};
}

json cohomology_report(const RunConfig& cfg, const std::string& id, std::ostream* diag) {
    auto t0 = std::chrono::steady_clock::now();
    const CatalogEntry& entry = catalog_entry(id);
    CohomologyStore store(cfg.max_degree, cfg.cache_dir);
    GroupCohomology& gc = store.of(catalog_group(id));
    json betti = json::array(), gens = json::array();
    for (int t = 0; t <= cfg.max_degree; ++t) {
        betti.push_back(gc.dim(t));
        const auto& table_gens = gc.table().generators;
        gens.push_back(t < int(table_gens.size()) ? table_gens[std::size_t(t)].size() : 0);
    }
    json j{{"schema", "coh2.cohomology/1"},
           {"group", id},
           {"order", entry.order},
           {"max_degree", cfg.max_degree},
           {"betti", betti},
           {"ring_generators_by_degree", gens}};
    print_timing(diag, "cohomology " + id, elapsed(t0));
    print_cache_notes(diag, cfg, store.cache_notes());
    return j;
}

json quillen_report(const RunConfig& cfg, const std::string& id, std::ostream* diag) {
    auto t0 = std::chrono::steady_clock::now();
    const CatalogEntry& entry = catalog_entry(id);
    CohomologyStore store(cfg.max_degree, cfg.cache_dir);
    FamilyDiagram dia(store, catalog_group(id));
    LimitReport rep = limit_report(dia, cfg.max_degree, cfg.nilpotence_k, cfg.power_e,
                                   cfg.s_max, cfg.budget);
    const FamilyCategory& cat = dia.category();

    json degrees = json::array();
    for (int t = 0; t <= cfg.max_degree; ++t) {
        const auto& cell = rep.e2[std::size_t(t)];
        degrees.push_back(
            json{{"t", t},
                 {"h_dim", rep.h_dims[std::size_t(t)]},
                 {"lim0_dim", rep.lim0_dims[std::size_t(t)]},
                 {"kernel_dim", rep.kernel_dims[std::size_t(t)]},
                 {"edge_in_lim0_coordinates", bit_rows(rep.edge[std::size_t(t)])},
                 {"higher_limit_dims", cell ? json(cell->dims) : json(nullptr)}});
    }
    bool verdicts = rep.nilpotence.verdict && rep.power.verdict;
    json j{{"schema", "coh2.quillen/1"},
           {"group", id},
           {"order", entry.order},
           {"family",
            json{{"objects", cat.object_count()},
                 {"morphisms", cat.morphism_count()},
                 {"max_rank", family_max_rank(cat)}}},
           {"parameters", parameters_block(cfg)},
           {"degrees", degrees},
           {"skip_notes", rep.skip_notes},
           {"nilpotence",
            json{{"k", rep.nilpotence.k},
                 {"verdict", rep.nilpotence.verdict},
                 {"stage_dims", rep.nilpotence.stage_dims}}},
           {"power",
            json{{"e", rep.power.e},
                 {"verdict", rep.power.verdict},
                 {"degrees_checked", rep.power.degrees_checked},
                 {"degree_passed", rep.power.degree_passed}}},
           {"verdicts_true", verdicts}};
    print_timing(diag, "quillen " + id, elapsed(t0));
    print_cache_notes(diag, cfg, store.cache_notes());
    return j;
}

json higher_limits_report(const RunConfig& cfg, const std::string& id, int coeff_degree,
                          std::ostream* diag) {
    auto t0 = std::chrono::steady_clock::now();
    if (coeff_degree < 0)
        throw std::invalid_argument("coefficient degree must be nonnegative");
    const CatalogEntry& entry = catalog_entry(id);
    CohomologyStore store(std::max(coeff_degree, 1), cfg.cache_dir);
    FamilyDiagram dia(store, catalog_group(id));
    HigherLimits hl = higher_limits(dia.coefficient_system(coeff_degree), cfg.s_max,
                                    cfg.budget);
    json j{{"schema", "coh2.higher-limits/1"},
           {"group", id},
           {"order", entry.order},
           {"coeff_degree", coeff_degree},
           {"s_max", hl.s_max},
           {"dims", hl.dims},
           {"cochain_dims", hl.cochain_dims}};
    print_timing(diag, "higher-limits " + id, elapsed(t0));
    print_cache_notes(diag, cfg, store.cache_notes());
    return j;
}

json table_report(const RunConfig& cfg, std::ostream* diag) {
    std::vector<std::string> ids = cfg.groups.empty() ? catalog_ids() : cfg.groups;
    std::vector<json> rows(ids.size());
    std::vector<double> secs(ids.size(), 0.0);
    std::vector<std::string> all_notes;
    std::mutex notes_mu;

    int workers = std::max(1, std::min<int>(cfg.jobs, int(ids.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors{std::size_t(workers)};

    auto work = [&](std::size_t w) {
        try {
            CohomologyStore store(cfg.max_degree, cfg.cache_dir);
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= ids.size()) break;
                auto t0 = std::chrono::steady_clock::now();
                FamilyDiagram dia(store, catalog_group(ids[i]));
                LimitReport rep = limit_report(dia, cfg.max_degree, cfg.nilpotence_k,
                                               cfg.power_e, cfg.s_max, cfg.budget);
                rows[i] = summary_row(rep, dia.category(), dia.group().order);
                secs[i] = elapsed(t0);
            }
            std::lock_guard<std::mutex> lk(notes_mu);
            all_notes.insert(all_notes.end(), store.cache_notes().begin(),
                             store.cache_notes().end());
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, std::size_t(w));
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    bool all_true = true;
    json groups = json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        all_true = all_true && rows[i]["nilpotence"].get<bool>() &&
                   rows[i]["power"].get<bool>();
        groups.push_back(std::move(rows[i]));
        print_timing(diag, "table " + ids[i], secs[i]);
    }
    print_cache_notes(diag, cfg, all_notes);
    return json{{"schema", "coh2.table/1"},
                {"parameters", parameters_block(cfg)},
                {"groups", groups},
                {"all_verdicts_true", all_true}};
}

std::string render_text(const json& report) {
    const std::string schema = report.at("schema").get<std::string>();
    if (schema == "coh2.groups/1") return render_text_groups(report);
    if (schema == "coh2.cohomology/1") return render_text_cohomology(report);
    if (schema == "coh2.quillen/1") return render_text_quillen(report);
    if (schema == "coh2.higher-limits/1") return render_text_higher_limits(report);
    if (schema == "coh2.table/1") return render_text_table(report);
    throw std::invalid_argument("unknown report schema: " + schema);
}

std::string render_csv(const json& report) {
    const std::string schema = report.at("schema").get<std::string>();
    if (schema == "coh2.groups/1") return render_csv_groups(report);
    if (schema == "coh2.cohomology/1") return render_csv_cohomology(report);
    if (schema == "coh2.quillen/1") return render_csv_quillen(report);
    if (schema == "coh2.higher-limits/1") return render_csv_higher_limits(report);
    if (schema == "coh2.table/1") return render_csv_table(report);
    throw std::invalid_argument("unknown report schema: " + schema);
}

int report_exit_code(const json& report) {
    const std::string schema = report.at("schema").get<std::string>();
    if (schema == "coh2.quillen/1")
        return report.at("verdicts_true").get<bool>() ? 0 : 1;
    if (schema == "coh2.table/1")
        return report.at("all_verdicts_true").get<bool>() ? 0 : 1;
    return 0;
}

} // namespace coh2
