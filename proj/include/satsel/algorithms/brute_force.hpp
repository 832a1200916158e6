#pragma once

#include "satsel/core/oracle.hpp"
#include "satsel/core/types.hpp"

namespace satsel {

struct BruteForceBudgetResult {
    ElementSet set;
    double value = 0.0;
};

struct BruteForceMinCostResult {
    ElementSet set;
    double cost = 0.0;
};

/// Exact optimum of max f(S) s.t. c(S) <= B by subset enumeration.
/// Guarded to |N| <= 22. Ties resolve to the lexicographically smallest set.
BruteForceBudgetResult brute_force_budget_opt(const SetFunctionOracle& oracle,
                                              const CostModel& costs, double budget);

/// Exact optimum of min c(S) s.t. f(S) >= A by subset enumeration.
/// Throws InfeasibleThreshold when no subset reaches A.
BruteForceMinCostResult brute_force_min_cost(const SetFunctionOracle& oracle,
                                             const CostModel& costs, double threshold);

} // namespace satsel
