#pragma once

#include "fracq/report.hpp"

namespace fracq {

/// A full verification grid. Each theorem is crossed with the subset of
/// (function, density, alpha, p) axes it actually consumes; the corollaries
/// pin alpha = 0 and the classical Ostrowski bound is evaluated at x = b.
struct SweepConfig {
    std::vector<TheoremId> theorems;
    std::vector<std::string> function_ids;
    std::vector<std::string> density_ids;
    std::vector<double> alphas;
    std::vector<double> ps;
    Interval interval{0.0, 1.0};
    std::optional<double> tol_override;
    std::string output_path;
    ReportFormat format = ReportFormat::Json;
};

/// Every sound variant over the whole corpus, alphas {0, 0.25, 0.5, 1, 1.5,
/// 2, 3}, ps {1.25, 2, 4, 10}, on [0,1]. T4_Eq14_literal must be opted into
/// explicitly.
SweepConfig default_sweep_config();

/// Parses and validates a JSON config; unknown ids, negative alphas, ps <= 1,
/// an explicitly empty theorem list, or malformed JSON throw DomainError.
/// Keys absent from the JSON fall back to the defaults above.
SweepConfig parse_sweep_config(const std::string& json_text);

struct SweepSummary {
    std::size_t checks = 0;
    std::size_t violations = 0;
    /// Largest max(0, -slack) over all records.
    double max_deficit = 0.0;
};

/// Expands the grid, verifies every record (fanned out over `jobs` workers;
/// 0 means hardware concurrency), and returns the reports deterministically
/// sorted. Record evaluation is pure, so the output is independent of the
/// worker count.
SweepSummary run_sweep(const SweepConfig& config,
                       std::vector<BoundReport>& reports, int jobs = 0);

} // namespace fracq
