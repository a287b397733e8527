// Command-line front end: every subcommand builds one JSON report and prints
// it as text (default), JSON, or CSV. Exit codes: 0 all requested verdicts
// true, 1 a verdict false, 2 configuration error, 3 resource budget
// exceeded, 4 internal error. Timings and cache notes go to stderr.

#include "coh2/reports.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

int emit(const coh2::json& report, coh2::RunConfig::Format format) {
    using F = coh2::RunConfig::Format;
    if (format == F::json_out)
        std::cout << report.dump(2) << "\n";
    else if (format == F::csv)
        std::cout << coh2::render_csv(report);
    else
        std::cout << coh2::render_text(report);
    return coh2::report_exit_code(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 cohomology of the 2-groups of order <= 16: Betti numbers, cup "
                 "products, restriction to elementary abelian subgroups, and limits over "
                 "the family category with nilpotence and power verdicts"};
    app.require_subcommand(1);

    coh2::RunConfig cfg;
    std::string group;
    std::string cache_dir;
    int order = 0;
    int coeff_degree = 0;
    bool json_flag = false, csv_flag = false;

    auto add_format = [&](CLI::App* c) {
        CLI::Option* jf =
            c->add_flag("--json", json_flag, "emit the JSON report (authoritative schema)");
        c->add_flag("--csv", csv_flag, "emit CSV; per-degree vectors are semicolon-joined")
            ->excludes(jf);
    };
    auto add_cache = [&](CLI::App* c) {
        c->add_option("--cache-dir", cache_dir,
                      "resolution disk cache directory (created if missing)")
            ->envname("COH2_CACHE_DIR");
    };
    auto add_budgets = [&](CLI::App* c) {
        c->add_option("--s-max", cfg.s_max, "highest derived limit to compute (0..6)")
            ->capture_default_str();
        c->add_option("--max-cochain-dim", cfg.budget.max_cochain_dim,
                      "budget: largest allowed cobar cochain dimension")
            ->capture_default_str();
        c->add_option("--max-matrix-bits", cfg.budget.max_matrix_bits,
                      "budget: largest allowed cobar differential, rows times columns")
            ->capture_default_str();
    };
    auto add_degree = [&](CLI::App* c) {
        c->add_option("--max-degree", cfg.max_degree, "cohomology truncation degree")
            ->capture_default_str();
    };
    auto add_verdict_params = [&](CLI::App* c) {
        c->add_option("--nilpotence-k", cfg.nilpotence_k,
                      "certify that products of k kernel classes vanish")
            ->capture_default_str();
        c->add_option("--power-e", cfg.power_e,
                      "certify that 2^e-th powers of limit classes lift")
            ->capture_default_str();
    };

    CLI::App* list_cmd =
        app.add_subcommand("list-groups", "list the catalog of 2-groups of order <= 16");
    CLI::Option* order_opt =
        list_cmd->add_option("--order", order, "restrict the listing to one group order");
    add_format(list_cmd);

    CLI::App* coh_cmd = app.add_subcommand(
        "cohomology", "Betti numbers and ring generator counts of one group");
    coh_cmd->add_option("--group", group, "catalog group id")->required();
    add_degree(coh_cmd);
    add_format(coh_cmd);
    add_cache(coh_cmd);

    CLI::App* qui_cmd = app.add_subcommand(
        "quillen", "comparison-map report for one group: edge maps into the limit over "
                   "elementary abelian subgroups, kernel dimensions, nilpotence and "
                   "power verdicts, higher limits");
    qui_cmd->add_option("--group", group, "catalog group id")->required();
    add_degree(qui_cmd);
    add_verdict_params(qui_cmd);
    add_budgets(qui_cmd);
    add_format(qui_cmd);
    add_cache(qui_cmd);

    CLI::App* hl_cmd = app.add_subcommand(
        "higher-limits", "derived limits of one coefficient degree over the family");
    hl_cmd->add_option("--group", group, "catalog group id")->required();
    hl_cmd->add_option("--coeff-degree", coeff_degree, "cohomological degree of the system")
        ->required();
    add_budgets(hl_cmd);
    add_format(hl_cmd);
    add_cache(hl_cmd);

    CLI::App* tab_cmd = app.add_subcommand(
        "table", "one verdict row per group; the default run verifies the whole catalog");
    tab_cmd->add_option("--group", cfg.groups,
                        "restrict to these ids (repeatable; default: every catalog group)");
    add_degree(tab_cmd);
    add_verdict_params(tab_cmd);
    add_budgets(tab_cmd);
    tab_cmd->add_option("--jobs", cfg.jobs, "worker threads across groups")
        ->capture_default_str();
    add_format(tab_cmd);
    add_cache(tab_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.format = json_flag  ? coh2::RunConfig::Format::json_out
                 : csv_flag ? coh2::RunConfig::Format::csv
                            : coh2::RunConfig::Format::text;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;

    try {
        if (list_cmd->parsed()) {
            std::optional<int> filter;
            if (order_opt->count()) filter = order;
            return emit(coh2::list_groups_report(filter), cfg.format);
        }
        if (coh_cmd->parsed()) {
            cfg.groups = {group};
            coh2::validate_run_config(cfg, false);
            return emit(coh2::cohomology_report(cfg, group, &std::cerr), cfg.format);
        }
        if (qui_cmd->parsed()) {
            cfg.groups = {group};
            coh2::validate_run_config(cfg, true);
            return emit(coh2::quillen_report(cfg, group, &std::cerr), cfg.format);
        }
        if (hl_cmd->parsed()) {
            cfg.groups = {group};
            coh2::validate_run_config(cfg, false);
            return emit(coh2::higher_limits_report(cfg, group, coeff_degree, &std::cerr),
                        cfg.format);
        }
        coh2::validate_run_config(cfg, true);
        return emit(coh2::table_report(cfg, &std::cerr), cfg.format);
    } catch (const coh2::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
