#include "satsel/algorithms/brute_force.hpp"

#include <algorithm>
#include <stdexcept>

#include "satsel/algorithms/greedy.hpp"

namespace satsel {

namespace {

constexpr int kMaxEnumerationSize = 22;

ElementSet mask_to_set(std::uint32_t mask) {
    ElementSet out;
    for (int j = 0; mask != 0; ++j, mask >>= 1)
        if (mask & 1u) out.push_back(j);
    return out;
}

} // namespace

BruteForceBudgetResult brute_force_budget_opt(const SetFunctionOracle& oracle,
                                              const CostModel& costs, double budget) {
    const int n = costs.size();
    if (n > kMaxEnumerationSize)
        throw std::invalid_argument("ground set too large for exhaustive enumeration");
    BruteForceBudgetResult best{{}, 0.0};
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        ElementSet subset = mask_to_set(mask);
        if (costs.total_cost(subset) > budget) continue;
        double v = oracle.evaluate(subset);
        if (v > best.value) best = {std::move(subset), v};
    }
    return best;
}

BruteForceMinCostResult brute_force_min_cost(const SetFunctionOracle& oracle,
                                             const CostModel& costs, double threshold) {
    const int n = costs.size();
    if (n > kMaxEnumerationSize)
        throw std::invalid_argument("ground set too large for exhaustive enumeration");
    bool found = false;
    BruteForceMinCostResult best;
    double best_seen_value = 0.0;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        ElementSet subset = mask_to_set(mask);
        double v = oracle.evaluate(subset);
        best_seen_value = std::max(best_seen_value, v);
        if (v < threshold) continue;
        double c = costs.total_cost(subset);
        if (!found || c < best.cost) {
            best = {std::move(subset), c};
            found = true;
        }
    }
    if (!found) throw InfeasibleThreshold(threshold, best_seen_value);
    return best;
}

} // namespace satsel
