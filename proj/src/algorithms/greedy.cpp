#include "satsel/algorithms/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "satsel/core/rng.hpp"
#include "satsel/core/sampling.hpp"

namespace satsel {

namespace {

void erase_element(ElementSet& sorted_set, int j) {
    auto pos = std::lower_bound(sorted_set.begin(), sorted_set.end(), j);
    sorted_set.erase(pos);
}

/// Best feasible singleton (by value, ties to lowest index); nullopt when
/// every element alone exceeds the budget.
struct SingletonPick {
    int element = -1;
    double value = 0.0;
};

std::optional<SingletonPick> best_feasible_singleton(const CountingOracle& oracle,
                                                     const CostModel& costs, double budget) {
    std::optional<SingletonPick> best;
    for (int j = 0; j < costs.size(); ++j) {
        if (costs.cost(j) > budget) continue;
        const int single[1] = {j};
        double v = oracle.evaluate(single);
        if (!best || v > best->value) best = SingletonPick{j, v};
    }
    return best;
}

SelectionTrace finish_budgeted(const CountingOracle& oracle, const CostModel& costs,
                               double budget, SelectionTrace trace, double greedy_value) {
    auto fallback = best_feasible_singleton(oracle, costs, budget);
    if (!fallback) {
        // nothing fits: the greedy loop cannot have added anything either
        trace.selected.clear();
        trace.value = 0.0;
        trace.cost = 0.0;
        trace.no_feasible_element = true;
        trace.oracle_call_count = oracle.calls();
        return trace;
    }
    if (fallback->value > greedy_value) {
        trace.selected = {fallback->element};
        trace.value = fallback->value;
        trace.singleton_fallback = true;
    } else {
        trace.value = greedy_value;
    }
    trace.cost = costs.total_cost(trace.selected);
    trace.oracle_call_count = oracle.calls();
    return trace;
}

} // namespace

InfeasibleThreshold::InfeasibleThreshold(double threshold, double best_value)
    : std::runtime_error("performance threshold unreachable: best value " +
                         std::to_string(best_value) + " < threshold " +
                         std::to_string(threshold)),
      threshold_(threshold), best_value_(best_value) {}

double gain_cost_ratio(double gain, double cost) {
    if (cost > 0.0) return gain / cost;
    return gain > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

double default_threshold_tolerance(double threshold) {
    return 1e-9 * std::max(1.0, threshold);
}

SelectionTrace modified_greedy(const SetFunctionOracle& raw_oracle, const CostModel& costs,
                               double budget) {
    if (!(budget >= 0.0)) throw std::invalid_argument("budget must be nonnegative");
    CountingOracle oracle(raw_oracle);
    SelectionTrace trace;

    ElementSet selected;
    ElementSet remaining = GroundSet(costs.size()).all();
    double current_value = 0.0;
    double current_cost = 0.0;

    while (!remaining.empty()) {
        int best = -1;
        double best_ratio = -std::numeric_limits<double>::infinity();
        double best_gain = 0.0;
        double best_value = 0.0;
        for (int j : remaining) {
            double grown = oracle.evaluate(set_with_element(selected, j));
            double gain = grown - current_value;
            double ratio = gain_cost_ratio(gain, costs.cost(j));
            if (ratio > best_ratio) {
                best = j;
                best_ratio = ratio;
                best_gain = gain;
                best_value = grown;
            }
        }

        IterationRecord rec;
        rec.sampled_candidates = remaining;
        rec.chosen_element = best;
        rec.marginal_gain = best_gain;
        rec.gain_cost_ratio = best_ratio;
        if (current_cost + costs.cost(best) <= budget) {
            selected = set_with_element(selected, best);
            current_value = best_value;
            current_cost += costs.cost(best);
            rec.accepted = true;
        }
        rec.running_cost = current_cost;
        trace.iterations.push_back(std::move(rec));
        erase_element(remaining, best);
    }

    trace.selected = std::move(selected);
    return finish_budgeted(oracle, costs, budget, std::move(trace), current_value);
}

SelectionTrace mrg(const SetFunctionOracle& raw_oracle, const CostModel& costs,
                   const MrgConfig& config) {
    if (!(config.budget >= 0.0)) throw std::invalid_argument("budget must be nonnegative");
    const int n = costs.size();
    int r;
    if (config.sample_size) {
        r = *config.sample_size;
        if (r < 1 || r > n) throw std::invalid_argument("sample size must lie in [1, |N|]");
    } else if (config.budget > 0.0) {
        r = sample_size(n, compute_sample_bound_U(costs, config.budget), config.epsilon);
    } else {
        r = n;
    }

    CountingOracle oracle(raw_oracle);
    RngStream rng(config.seed);
    SelectionTrace trace;
    trace.rng_seed = config.seed;

    ElementSet selected;
    ElementSet remaining = GroundSet(n).all();
    double current_value = 0.0;
    double current_cost = 0.0;

    while (!remaining.empty()) {
        ElementSet sample = sample_without_replacement(remaining, r, rng);
        int best = -1;
        double best_ratio = -std::numeric_limits<double>::infinity();
        double best_gain = 0.0;
        double best_value = 0.0;
        for (int j : sample) {
            double grown = oracle.evaluate(set_with_element(selected, j));
            double gain = grown - current_value;
            double ratio = gain_cost_ratio(gain, costs.cost(j));
            if (ratio > best_ratio) {
                best = j;
                best_ratio = ratio;
                best_gain = gain;
                best_value = grown;
            }
        }

        IterationRecord rec;
        rec.sampled_candidates = std::move(sample);
        rec.chosen_element = best;
        rec.marginal_gain = best_gain;
        rec.gain_cost_ratio = best_ratio;
        if (current_cost + costs.cost(best) <= config.budget) {
            selected = set_with_element(selected, best);
            current_value = best_value;
            current_cost += costs.cost(best);
            rec.accepted = true;
        }
        rec.running_cost = current_cost;
        trace.iterations.push_back(std::move(rec));
        // the examined element leaves the pool even when it was not added,
        // otherwise an over-budget ratio winner would be resampled forever
        erase_element(remaining, best);
    }

    trace.selected = std::move(selected);
    return finish_budgeted(oracle, costs, config.budget, std::move(trace), current_value);
}

SelectionTrace drg(const SetFunctionOracle& raw_oracle, const CostModel& costs,
                   const DrgConfig& config) {
    if (!(config.threshold >= 0.0)) throw std::invalid_argument("threshold must be nonnegative");
    const int n = costs.size();
    const int r = config.sample_size.value_or(n);
    if (r < 1 || r > n) throw std::invalid_argument("sample size must lie in [1, |N|]");
    const double tol = config.tolerance.value_or(default_threshold_tolerance(config.threshold));

    CountingOracle oracle(raw_oracle);
    RngStream rng(config.seed);
    SelectionTrace trace;
    trace.rng_seed = config.seed;

    ElementSet selected;
    ElementSet remaining = GroundSet(n).all();
    double current_value = 0.0;
    double current_cost = 0.0;

    while (current_value < config.threshold - tol) {
        if (remaining.empty()) throw InfeasibleThreshold(config.threshold, current_value);

        ElementSet sample = sample_without_replacement(remaining, r, rng);
        int best = -1;
        double best_ratio = -std::numeric_limits<double>::infinity();
        double best_gain = 0.0;
        double best_value = 0.0;
        for (int j : sample) {
            double grown = oracle.evaluate(set_with_element(selected, j));
            double gain = grown - current_value;
            double ratio = gain_cost_ratio(gain, costs.cost(j));
            if (ratio > best_ratio) {
                best = j;
                best_ratio = ratio;
                best_gain = gain;
                best_value = grown;
            }
        }

        selected = set_with_element(selected, best);
        current_value = best_value;
        current_cost += costs.cost(best);

        IterationRecord rec;
        rec.sampled_candidates = std::move(sample);
        rec.chosen_element = best;
        rec.marginal_gain = best_gain;
        rec.gain_cost_ratio = best_ratio;
        rec.running_cost = current_cost;
        rec.accepted = true;
        trace.iterations.push_back(std::move(rec));
        erase_element(remaining, best);
    }

    trace.selected = std::move(selected);
    trace.value = current_value;
    trace.cost = current_cost;
    trace.oracle_call_count = oracle.calls();
    return trace;
}

SelectionTrace top_k_baseline(const SetFunctionOracle& raw_oracle, const CostModel& costs,
                              double budget) {
    if (!(budget >= 0.0)) throw std::invalid_argument("budget must be nonnegative");
    CountingOracle oracle(raw_oracle);
    const int n = costs.size();

    struct Ranked {
        int element;
        double value;
        double ratio;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int single[1] = {j};
        double v = oracle.evaluate(single);
        ranked.push_back({j, v, gain_cost_ratio(v, costs.cost(j))});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.ratio != b.ratio) return a.ratio > b.ratio;
        return a.element < b.element;
    });

    SelectionTrace trace;
    ElementSet selected;
    double current_cost = 0.0;
    for (const Ranked& cand : ranked) {
        if (current_cost + costs.cost(cand.element) > budget) continue;
        selected = set_with_element(selected, cand.element);
        current_cost += costs.cost(cand.element);

        IterationRecord rec;
        rec.sampled_candidates = {cand.element};
        rec.chosen_element = cand.element;
        rec.marginal_gain = cand.value;
        rec.gain_cost_ratio = cand.ratio;
        rec.running_cost = current_cost;
        rec.accepted = true;
        trace.iterations.push_back(std::move(rec));
    }

    trace.selected = std::move(selected);
    trace.value = trace.selected.empty() ? 0.0 : oracle.evaluate(trace.selected);
    trace.cost = current_cost;
    trace.oracle_call_count = oracle.calls();
    return trace;
}

} // namespace satsel
