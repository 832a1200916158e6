#pragma once

#include <cstdint>
#include <vector>

#include "satsel/core/types.hpp"

namespace satsel {

/// One pass of a greedy loop. MRG records rejected passes too (accepted =
/// false when the examined element did not fit the budget).
struct IterationRecord {
    ElementSet sampled_candidates;
    int chosen_element = -1;
    double marginal_gain = 0.0;
    double gain_cost_ratio = 0.0;
    double running_cost = 0.0;
    bool accepted = false;
};

/// Observable outcome of one algorithm run.
struct SelectionTrace {
    ElementSet selected;
    double value = 0.0;
    double cost = 0.0;
    std::vector<IterationRecord> iterations;
    std::uint64_t rng_seed = 0;
    std::uint64_t oracle_call_count = 0;
    /// Set when every singleton exceeds the budget and the result is forced empty.
    bool no_feasible_element = false;
    /// True when the final set came from the best-feasible-singleton fallback.
    bool singleton_fallback = false;
};

} // namespace satsel
