#pragma once
// Report assembly and rendering for the command-line front end. Every
// command produces one JSON document (the authoritative, versioned schema);
// the text and CSV renderings are pure functions of that document, so a
// report read back from disk re-renders byte-identically. Wall-clock timing
// and cache diagnostics go to a separate stream, never into reports.

#include "coh2/limits.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coh2 {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::vector<std::string> groups; // empty = the whole catalog
    int max_degree = 14;
    int nilpotence_k = 4;
    int power_e = 3;
    int s_max = 4;
    std::optional<std::filesystem::path> cache_dir;
    enum class Format { text, json_out, csv };
    Format format = Format::text;
    int jobs = 1;
    LimitsBudget budget;
};

// Throws std::invalid_argument on unknown ids, s_max outside 0..6, or
// jobs < 1; with_verdicts additionally requires nilpotence_k in 1..max_degree
// and 2^power_e <= max_degree (the verdict commands refuse configurations
// whose truncation cannot carry the claim).
void validate_run_config(const RunConfig& cfg, bool with_verdicts);

// Schema "coh2.groups/1": the catalog, optionally one order only.
json list_groups_report(std::optional<int> order_filter = std::nullopt);

// Schema "coh2.cohomology/1": Betti numbers and ring generator counts.
json cohomology_report(const RunConfig& cfg, const std::string& id,
                       std::ostream* diag = nullptr);

// Schema "coh2.quillen/1": the full limit report of one group (edge maps in
// equalizer coordinates, kernel dims, nilpotence and power witnesses, higher
// limits with budget skip notes).
json quillen_report(const RunConfig& cfg, const std::string& id,
                    std::ostream* diag = nullptr);

// Schema "coh2.higher-limits/1": lim^s dims of one coefficient degree.
// Budget violations propagate as BudgetExceeded (exit code 3 at the CLI).
json higher_limits_report(const RunConfig& cfg, const std::string& id,
                          int coeff_degree, std::ostream* diag = nullptr);

// Schema "coh2.table/1": one summary row per group, computed with cfg.jobs
// workers (one cohomology store per worker); row order and content are
// independent of the worker count. Budget-skipped higher-limit cells are
// diagnostics, recorded per row, and never abort the run.
json table_report(const RunConfig& cfg, std::ostream* diag = nullptr);

std::string render_text(const json& report);
std::string render_csv(const json& report);

// 0 if every verdict in the report is true (or it carries none), else 1.
int report_exit_code(const json& report);

} // namespace coh2
