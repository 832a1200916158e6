#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satsel/core/types.hpp"

namespace satsel::cli {

enum class ConstraintKind {
    none,      ///< baselines that ignore the constraint by design
    budget,    ///< cost(selection) <= limit
    threshold, ///< objective >= limit - slack
};

struct RunRow {
    int step = 0;
    std::string algorithm;
    int r = 0;
    double constraint = 0.0; ///< B, F or B again, matching the grid label
    double objective = 0.0;
    double cost = 0.0;
    int size = 0;
    std::uint64_t oracle_calls = 0;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;

    // retained for re-verification and plots, not part of runs.csv
    ElementSet selection;
    ConstraintKind kind = ConstraintKind::none;
    double constraint_limit = 0.0;
    double constraint_slack = 0.0;
    double mse_realized = 0.0;
    double mse_trace = 0.0;
    double k_achieved = 0.0;
    double final_interval_width = 0.0;
    int outer_iterations = 0;
};

struct SummaryRow {
    std::string algorithm;
    int r = 0;
    double constraint = 0.0;
    double mean_objective = 0.0;
    double mean_cost = 0.0;
    double mean_wall_ms = 0.0;
};

/// Extra CSV file rendered by an experiment (plot data, trajectories,
/// visibility matrices); emitted verbatim next to runs/summary.
struct CsvAttachment {
    std::string filename;
    std::string content;
};

struct RunReport {
    std::string experiment;
    std::vector<RunRow> rows;
    std::vector<double> element_costs; ///< for cost re-verification at emit time
    std::vector<CsvAttachment> attachments;

    std::vector<SummaryRow> summarize() const;
    /// Recomputes each row's cost from its raw selection and checks the
    /// logged constraint. Throws on any violation.
    void verify_constraints() const;
};

/// Writes runs.csv and summary.csv (fixed headers) into the directory.
/// Returns the paths written.
std::vector<std::string> emit_report(const RunReport& report, const std::string& out_dir,
                                     const std::string& format = "csv");

/// Long-format plot series (step vs. metric per series label), optionally
/// smoothed with a trailing moving average. Smoothing is applied only here;
/// stored rows always hold raw values.
struct PlotSeries {
    std::string label;
    std::vector<int> steps;
    std::vector<double> values;
};

std::string render_plot_csv(const std::vector<PlotSeries>& series,
                            int moving_average_window = 1);

std::string format_double(double v);

} // namespace satsel::cli
