#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coh2/reports.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#ifdef COH2_BIN
#include <sys/wait.h>
#endif

using namespace coh2;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.max_degree = 6;
    cfg.nilpotence_k = 2;
    cfg.power_e = 2;
    cfg.s_max = 2;
    return cfg;
}

#ifdef COH2_BIN
// Runs the installed binary, captures stdout, returns the exit code.
int run_cli(const std::string& args, std::string* out = nullptr) {
    std::filesystem::path tmp =
        std::filesystem::temp_directory_path() / "coh2_cli_capture.txt";
    std::string cmd =
        std::string(COH2_BIN) + " " + args + " > " + tmp.string() + " 2> /dev/null";
    int rc = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(tmp);
        std::ostringstream s;
        s << in.rdbuf();
        *out = s.str();
    }
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}
#endif

} // namespace

TEST_CASE("catalog listing counts the classification of 2-groups") {
    json all = list_groups_report();
    CHECK(all["schema"] == "coh2.groups/1");
    CHECK(all["count"].get<int>() == 23);
    CHECK(all["order_filter"].is_null());
    CHECK(list_groups_report(8)["count"].get<int>() == 5);
    CHECK(list_groups_report(16)["count"].get<int>() == 14);
    CHECK(list_groups_report(1)["groups"][0]["id"] == "e");
    // ids are unique
    std::set<std::string> seen;
    for (const auto& g : all["groups"]) seen.insert(g["id"].get<std::string>());
    CHECK(seen.size() == 23);
}

TEST_CASE("cohomology report carries Betti numbers and generator counts") {
    RunConfig cfg = small_config();
    json c2 = cohomology_report(cfg, "C2");
    CHECK(c2["betti"] == json::array({1, 1, 1, 1, 1, 1, 1}));
    json v4 = cohomology_report(cfg, "C2xC2");
    CHECK(v4["betti"] == json::array({1, 2, 3, 4, 5, 6, 7}));
    CHECK(v4["ring_generators_by_degree"] == json::array({0, 2, 0, 0, 0, 0, 0}));
    json q8 = cohomology_report(cfg, "Q8");
    CHECK(q8["betti"] == json::array({1, 2, 2, 1, 1, 2, 2}));
    CHECK(q8["ring_generators_by_degree"] == json::array({0, 2, 0, 0, 1, 0, 0}));
}

TEST_CASE("quillen report verdicts drive the exit code") {
    RunConfig cfg = small_config();
    cfg.max_degree = 8;
    cfg.nilpotence_k = 4; // Q8 products of three kernel classes still survive
    json good = quillen_report(cfg, "Q8");
    CHECK(good["verdicts_true"].get<bool>());
    CHECK(report_exit_code(good) == 0);
    CHECK(good["degrees"].size() == 9);
    CHECK(good["degrees"][1]["kernel_dim"].get<int>() == 2);
    CHECK(good["degrees"][1]["higher_limit_dims"] == json::array({1, 2, 3}));
    CHECK(good["power"]["degrees_checked"] == json::array({0, 1, 2}));

    cfg.nilpotence_k = 1;
    json bad = quillen_report(cfg, "Q8");
    CHECK_FALSE(bad["verdicts_true"].get<bool>());
    CHECK(report_exit_code(bad) == 1);
    CHECK(bad["power"]["verdict"].get<bool>()); // only the nilpotence side fails
}

TEST_CASE("edge matrices are reported in equalizer coordinates") {
    RunConfig cfg = small_config();
    cfg.max_degree = 4;
    json rep = quillen_report(cfg, "Q8");
    // degree 4: H^4 is one-dimensional and restricts onto the generator
    const json& row = rep["degrees"][4]["edge_in_lim0_coordinates"];
    CHECK(row == json::array({"1"}));
    // degree 1: both basis classes die on the center
    CHECK(rep["degrees"][1]["edge_in_lim0_coordinates"] == json::array({"00"}));
}

TEST_CASE("higher-limits report matches the direct computation") {
    RunConfig cfg = small_config();
    cfg.s_max = 4;
    json hl = higher_limits_report(cfg, "C2xC2", 0);
    CHECK(hl["dims"] == json::array({1, 0, 0, 0, 0}));
    CHECK(hl["cochain_dims"] == json::array({5, 16, 48, 144, 432, 1296}));
    CHECK(hl["coeff_degree"].get<int>() == 0);

    cfg.budget.max_cochain_dim = 40;
    CHECK_THROWS_AS(higher_limits_report(cfg, "C2xC2", 0), BudgetExceeded);
    CHECK_THROWS_AS(higher_limits_report(cfg, "C2xC2", -1), std::invalid_argument);
}

TEST_CASE("run configuration validation separates config errors from verdicts") {
    RunConfig cfg = small_config();
    CHECK_NOTHROW(validate_run_config(cfg, true));
    cfg.groups = {"C2", "Q16"};
    CHECK_NOTHROW(validate_run_config(cfg, true));
    cfg.groups = {"C2", "Z17"};
    CHECK_THROWS_AS(validate_run_config(cfg, false), std::invalid_argument);

    cfg = small_config();
    cfg.nilpotence_k = 7; // exceeds max_degree 6
    CHECK_THROWS_AS(validate_run_config(cfg, true), std::invalid_argument);
    CHECK_NOTHROW(validate_run_config(cfg, false));

    cfg = small_config();
    cfg.power_e = 3; // 2^3 = 8 > 6
    CHECK_THROWS_AS(validate_run_config(cfg, true), std::invalid_argument);
    CHECK_NOTHROW(validate_run_config(cfg, false));

    cfg = small_config();
    cfg.s_max = 7;
    CHECK_THROWS_AS(validate_run_config(cfg, false), std::invalid_argument);
    cfg = small_config();
    cfg.jobs = 0;
    CHECK_THROWS_AS(validate_run_config(cfg, false), std::invalid_argument);
}

TEST_CASE("reports round-trip: parse of dump re-renders byte-identically") {
    RunConfig cfg = small_config();
    std::vector<json> reports = {list_groups_report(), list_groups_report(8),
                                 cohomology_report(cfg, "D8"), quillen_report(cfg, "D8"),
                                 higher_limits_report(cfg, "C4", 2)};
    cfg.groups = {"C2", "C4", "Q8"};
    reports.push_back(table_report(cfg));
    for (const json& r : reports) {
        json reread = json::parse(r.dump(2));
        CHECK(render_text(reread) == render_text(r));
        CHECK(render_csv(reread) == render_csv(r));
        CHECK(reread.dump(2) == r.dump(2));
    }
}

TEST_CASE("table rows are deterministic and independent of the worker count") {
    RunConfig cfg = small_config();
    cfg.nilpotence_k = 4;
    cfg.groups = {"Q8", "C2xC4", "D8", "C16"};
    std::string one = table_report(cfg).dump(2);
    std::string two = table_report(cfg).dump(2);
    CHECK(one == two);
    cfg.jobs = 3;
    CHECK(table_report(cfg).dump(2) == one);

    json rep = json::parse(one);
    REQUIRE(rep["groups"].size() == 4);
    CHECK(rep["groups"][0]["id"] == "Q8"); // rows follow the requested order
    CHECK(rep["groups"][3]["id"] == "C16");
    CHECK(rep["all_verdicts_true"].get<bool>());
    CHECK(report_exit_code(rep) == 0);

    cfg.jobs = 1;
    cfg.nilpotence_k = 1; // Q8 has a nonzero kernel, so this flips the verdict
    json flipped = table_report(cfg);
    CHECK_FALSE(flipped["all_verdicts_true"].get<bool>());
    CHECK(report_exit_code(flipped) == 1);
    CHECK(flipped["groups"][2]["nilpotence"].get<bool>()); // D8 still passes at k = 1
}

TEST_CASE("csv renderings flatten vectors with semicolons and quote commas") {
    RunConfig cfg = small_config();
    cfg.nilpotence_k = 4;
    cfg.groups = {"Q8"};
    std::string csv = render_csv(table_report(cfg));
    CHECK(csv.find("Q8,8,2,1,true,true,0;2;2;1;0;2;2") != std::string::npos);

    std::string groups_csv = render_csv(list_groups_report(16));
    // constructions with commas arrive quoted
    CHECK(groups_csv.find("\"semidirect(C8 by C2, a -> a^7)\"") != std::string::npos);
    CHECK(groups_csv.rfind("id,order,family_objects,max_rank,construction\n", 0) == 0);

    std::string coh_csv = render_csv(cohomology_report(cfg, "C2xC2"));
    CHECK(coh_csv.find("C2xC2,4,6,1;2;3;4;5;6;7,0;2;0;0;0;0;0") != std::string::npos);
}

TEST_CASE("report cache reuse does not change any report") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "coh2-test-cache";
    std::filesystem::remove_all(dir);
    RunConfig cfg = small_config();
    cfg.cache_dir = dir;
    std::string cold = cohomology_report(cfg, "SD16").dump(2);
    CHECK(std::filesystem::exists(dir));
    std::string warm = cohomology_report(cfg, "SD16").dump(2);
    CHECK(cold == warm);

    // corrupt every cache file; reports must still come out identical
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "not json";
    }
    std::string healed = cohomology_report(cfg, "SD16").dump(2);
    CHECK(healed == cold);
    std::filesystem::remove_all(dir);
}

TEST_CASE("unknown schema is rejected by the renderers") {
    json bogus{{"schema", "coh2.bogus/9"}};
    CHECK_THROWS_AS(render_text(bogus), std::invalid_argument);
    CHECK_THROWS_AS(render_csv(bogus), std::invalid_argument);
    CHECK(report_exit_code(bogus) == 0);
}

#ifdef COH2_BIN

TEST_CASE("binary: exit codes follow the documented contract") {
    CHECK(run_cli("table --group C4 --max-degree 6 --nilpotence-k 2 --power-e 2 "
                  "--s-max 1") == 0);
    CHECK(run_cli("quillen --group Q8 --max-degree 6 --nilpotence-k 1 --power-e 2 "
                  "--s-max 0") == 1);
    CHECK(run_cli("quillen --group Z17") == 2);
    CHECK(run_cli("cohomology --group C2 --no-such-flag") == 2);
    CHECK(run_cli("higher-limits --group C2xC2 --coeff-degree 0 --s-max 4 "
                  "--max-cochain-dim 40") == 3);
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("table --help") == 0);
}

TEST_CASE("binary: JSON output parses and matches the in-process report") {
    std::string out;
    REQUIRE(run_cli("higher-limits --group Q8 --coeff-degree 1 --s-max 3 --json",
                    &out) == 0);
    json parsed = json::parse(out);
    CHECK(parsed["schema"] == "coh2.higher-limits/1");
    CHECK(parsed["dims"] == json::array({1, 2, 3, 4}));

    RunConfig cfg;
    cfg.s_max = 3;
    CHECK(parsed.dump(2) + "\n" == higher_limits_report(cfg, "Q8", 1).dump(2) + "\n");
}

TEST_CASE("binary: text and csv renderings match the library renderers") {
    std::string text, csv, js;
    REQUIRE(run_cli("cohomology --group D8 --max-degree 6", &text) == 0);
    REQUIRE(run_cli("cohomology --group D8 --max-degree 6 --csv", &csv) == 0);
    REQUIRE(run_cli("cohomology --group D8 --max-degree 6 --json", &js) == 0);
    json parsed = json::parse(js);
    CHECK(text == render_text(parsed));
    CHECK(csv == render_csv(parsed));
}

TEST_CASE("binary: environment variable supplies the cache directory") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "coh2-test-env-cache";
    std::filesystem::remove_all(dir);
    std::string cmd = "COH2_CACHE_DIR=" + dir.string() + " " + COH2_BIN +
                      " cohomology --group C8 --max-degree 4 > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(std::filesystem::exists(dir));
    bool has_file = false;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        has_file = has_file || e.is_regular_file();
    CHECK(has_file);
    std::filesystem::remove_all(dir);
}

#endif // COH2_BIN
