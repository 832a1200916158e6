#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "satsel/core/oracle.hpp"
#include "satsel/core/trace.hpp"
#include "satsel/core/types.hpp"

namespace satsel {

struct WssaConfig {
    double budget = 0.0;
    double alpha = 1.0; ///< budget relaxation factor, >= 1
    double epsilon = 0.01;
    /// Sample size for the inner DRG runs; defaults to |N|.
    std::optional<int> sample_size;
    std::uint64_t seed = 0;
    /// Bisection stops when the interval is narrower than this; defaults to
    /// 1/n for n objectives.
    std::optional<double> interval_floor;
    /// Saturation slack on min_i f^i; defaults to 1e-9 * max(1, k_M).
    std::optional<double> tolerance;
    int max_outer_iterations = 64;
};

struct WssaProbe {
    double k = 0.0;
    double cost = 0.0;
    int selection_size = 0;
    bool accepted = false;
};

struct WssaResult {
    ElementSet selected;
    /// Highest saturation level accepted by the search; 0 when even the
    /// first probe exceeded the relaxed budget.
    double k_achieved = 0.0;
    double cost = 0.0;
    /// Worst objective value of the returned set.
    double min_objective = 0.0;
    int outer_iterations = 0;
    /// min_i f^i(N), the upper end of the initial search interval.
    double saturation_ceiling = 0.0;
    /// k_hi - k_lo when the search stopped.
    double final_interval_width = 0.0;
    std::vector<WssaProbe> probes;
    std::uint64_t rng_seed = 0;
    std::uint64_t oracle_call_count = 0;
};

/// Bisection over the saturation level k with a DRG inner solver on the
/// truncated average (1/n) sum_i min(f^i, k): accepts k when the returned set
/// costs at most alpha * B.
WssaResult random_wssa(std::span<const SetFunctionOracle* const> objectives,
                       const CostModel& costs, const WssaConfig& config);

/// Full-sampling special case of random_wssa (the deterministic saturation
/// search); ignores any configured sample size.
WssaResult ssa(std::span<const SetFunctionOracle* const> objectives, const CostModel& costs,
               WssaConfig config);

} // namespace satsel
