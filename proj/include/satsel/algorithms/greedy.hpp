#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "satsel/core/oracle.hpp"
#include "satsel/core/trace.hpp"
#include "satsel/core/types.hpp"

namespace satsel {

struct MrgConfig {
    double budget = 0.0;
    double epsilon = 0.01;
    /// Per-iteration sample size; defaults to ceil((|N|/U) ln(1/epsilon)).
    std::optional<int> sample_size;
    std::uint64_t seed = 0;
};

struct DrgConfig {
    double threshold = 0.0;
    double epsilon = 0.01;
    /// Per-iteration sample size; defaults to |N| (full greedy).
    std::optional<int> sample_size;
    std::uint64_t seed = 0;
    /// Threshold slack; defaults to 1e-9 * max(1, threshold).
    std::optional<double> tolerance;
};

/// Thrown when DRG exhausts the ground set without reaching the threshold.
class InfeasibleThreshold : public std::runtime_error {
public:
    InfeasibleThreshold(double threshold, double best_value);
    double threshold() const { return threshold_; }
    double best_value() const { return best_value_; }

private:
    double threshold_;
    double best_value_;
};

/// Budget-constrained greedy by marginal-gain-to-cost ratio, with the
/// best-feasible-singleton fallback. Ties break toward the lowest index.
SelectionTrace modified_greedy(const SetFunctionOracle& oracle, const CostModel& costs,
                               double budget);

/// Budget-constrained randomized greedy: each pass scores only a uniformly
/// sampled subset of the not-yet-examined elements and discards the examined
/// element whether or not it was added.
SelectionTrace mrg(const SetFunctionOracle& oracle, const CostModel& costs,
                   const MrgConfig& config);

/// Threshold-constrained randomized greedy: adds the best-ratio sampled
/// element until f reaches the threshold (within tolerance).
SelectionTrace drg(const SetFunctionOracle& oracle, const CostModel& costs,
                   const DrgConfig& config);

/// Ranks all elements once by singleton gain-to-cost ratio and adds them in
/// order, skipping any that would break the budget.
SelectionTrace top_k_baseline(const SetFunctionOracle& oracle, const CostModel& costs,
                              double budget);

/// Gain-to-cost ratio with the zero-cost conventions: positive gain at zero
/// cost is +inf, zero gain at zero cost is 0.
double gain_cost_ratio(double gain, double cost);

double default_threshold_tolerance(double threshold);

} // namespace satsel
