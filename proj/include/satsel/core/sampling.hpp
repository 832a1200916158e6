#pragma once

#include <span>

#include "satsel/core/rng.hpp"
#include "satsel/core/types.hpp"

namespace satsel {

/// Smallest U such that the U cheapest costs sum to at least the budget.
/// Clamped to |N| when the budget exceeds the total cost.
int compute_sample_bound_U(const CostModel& costs, double budget);

/// Per-iteration sample size r = ceil((n/U) * ln(1/epsilon)), clamped to [1, n].
int sample_size(int n_ground, int U, double epsilon);

/// min(r, |candidates|) distinct elements, uniformly; returned sorted.
/// Consumes no randomness when the whole candidate set is taken.
ElementSet sample_without_replacement(std::span<const int> candidates, int r, RngStream& rng);

} // namespace satsel
