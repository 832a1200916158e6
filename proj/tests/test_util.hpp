#pragma once

// Shared helpers for the unit suites: small oracle families and random
// instance generators.

#include <memory>
#include <vector>

#include "satsel/core/oracle.hpp"
#include "satsel/core/rng.hpp"
#include "satsel/core/types.hpp"
#include "satsel/objectives/coverage.hpp"

namespace testutil {

/// Sum of per-element weights (modular; submodular with context-free gains).
class ModularOracle final : public satsel::SetFunctionOracle {
public:
    explicit ModularOracle(std::vector<double> weights) : weights_(std::move(weights)) {}
    double evaluate(std::span<const int> subset) const override {
        double sum = 0.0;
        for (int j : subset) sum += weights_.at(static_cast<std::size_t>(j));
        return sum;
    }
    bool is_submodular() const override { return true; }

private:
    std::vector<double> weights_;
};

/// (sum of weights)^2: monotone and normalized but supermodular-flavored,
/// with WSC above 1.
class SquaredModularOracle final : public satsel::SetFunctionOracle {
public:
    explicit SquaredModularOracle(std::vector<double> weights)
        : weights_(std::move(weights)) {}
    double evaluate(std::span<const int> subset) const override {
        double sum = 0.0;
        for (int j : subset) sum += weights_.at(static_cast<std::size_t>(j));
        return sum * sum;
    }

private:
    std::vector<double> weights_;
};

/// The three-element weighted-coverage toy used across the algorithm tests:
/// universe {a,b,c} with unit weights, e0 -> {a,b} cost 1, e1 -> {c} cost 1,
/// e2 -> {a,b,c} cost 2.
inline satsel::WeightedCoverageObjective toy_coverage() {
    return satsel::WeightedCoverageObjective({1.0, 1.0, 1.0}, {{0, 1}, {2}, {0, 1, 2}});
}

inline satsel::CostModel toy_costs() { return satsel::CostModel({1.0, 1.0, 2.0}); }

/// Random weighted-coverage instance on n elements.
inline satsel::WeightedCoverageObjective random_coverage(int elements, int items,
                                                         satsel::RngStream& rng,
                                                         double cover_prob = 0.4) {
    std::vector<double> item_weights(static_cast<std::size_t>(items));
    for (double& w : item_weights) w = rng.uniform(0.5, 1.5);
    std::vector<std::vector<int>> covers(static_cast<std::size_t>(elements));
    for (auto& cover : covers)
        for (int item = 0; item < items; ++item)
            if (rng.uniform01() < cover_prob) cover.push_back(item);
    return satsel::WeightedCoverageObjective(std::move(item_weights), covers);
}

inline satsel::CostModel random_costs(int elements, satsel::RngStream& rng, double lo = 1.0,
                                      double hi = 2.0) {
    std::vector<double> costs(static_cast<std::size_t>(elements));
    for (double& c : costs) c = rng.uniform(lo, hi);
    return satsel::CostModel(std::move(costs));
}

} // namespace testutil
