#include "satsel/algorithms/saturation.hpp"

#include <algorithm>
#include <stdexcept>

#include "satsel/algorithms/greedy.hpp"
#include "satsel/core/rng.hpp"
#include "satsel/objectives/combinators.hpp"

namespace satsel {

WssaResult random_wssa(std::span<const SetFunctionOracle* const> objectives,
                       const CostModel& costs, const WssaConfig& config) {
    if (objectives.empty()) throw std::invalid_argument("need at least one objective");
    if (!(config.alpha >= 1.0)) throw std::invalid_argument("alpha must be at least 1");
    if (!(config.budget >= 0.0)) throw std::invalid_argument("budget must be nonnegative");

    const int n = costs.size();
    const auto n_obj = objectives.size();

    std::vector<CountingOracle> counted;
    counted.reserve(n_obj);
    for (const SetFunctionOracle* f : objectives) counted.emplace_back(*f);

    WssaResult result;
    result.rng_seed = config.seed;

    const ElementSet full = GroundSet(n).all();
    double k_max = counted.front().evaluate(full);
    for (std::size_t i = 1; i < n_obj; ++i)
        k_max = std::min(k_max, counted[i].evaluate(full));
    k_max = std::max(k_max, 0.0);

    const double floor = config.interval_floor.value_or(1.0 / static_cast<double>(n_obj));
    if (!(floor > 0.0)) throw std::invalid_argument("interval floor must be positive");
    const double tol = config.tolerance.value_or(1e-9 * std::max(1.0, k_max));

    double k_lo = 0.0;
    double k_hi = k_max;

    while (k_hi - k_lo >= floor && result.outer_iterations < config.max_outer_iterations) {
        const double k = 0.5 * (k_lo + k_hi);

        std::vector<TruncatedObjective> truncated;
        truncated.reserve(n_obj);
        for (const CountingOracle& f : counted) truncated.emplace_back(f, k);
        std::vector<const SetFunctionOracle*> parts;
        parts.reserve(n_obj);
        for (const TruncatedObjective& t : truncated) parts.push_back(&t);
        AveragedObjective saturated(std::move(parts));

        DrgConfig inner;
        inner.threshold = k;
        inner.sample_size = config.sample_size.value_or(n);
        inner.seed = derive_seed(config.seed, "wssa-probe",
                                 static_cast<std::uint64_t>(result.outer_iterations));
        // tighter inner slack so the per-objective shortfall stays within tol
        inner.tolerance = tol / static_cast<double>(n_obj);

        SelectionTrace probe_trace;
        try {
            probe_trace = drg(saturated, costs, inner);
        } catch (const InfeasibleThreshold&) {
            // k < min_i f^i(N) makes the truncated average reach k at S = N
            throw std::logic_error(
                "saturation probe infeasible below the full-set minimum; "
                "an objective is not monotone or not normalized");
        }
        ++result.outer_iterations;

        WssaProbe probe;
        probe.k = k;
        probe.cost = probe_trace.cost;
        probe.selection_size = static_cast<int>(probe_trace.selected.size());
        probe.accepted = probe_trace.cost <= config.alpha * config.budget;
        result.probes.push_back(probe);

        if (probe.accepted) {
            k_lo = k;
            result.selected = std::move(probe_trace.selected);
            result.k_achieved = k;
        } else {
            k_hi = k;
        }
    }

    result.saturation_ceiling = k_max;
    result.final_interval_width = k_hi - k_lo;
    result.cost = costs.total_cost(result.selected);
    if (result.selected.empty()) {
        result.min_objective = 0.0;
    } else {
        double worst = counted.front().evaluate(result.selected);
        for (std::size_t i = 1; i < n_obj; ++i)
            worst = std::min(worst, counted[i].evaluate(result.selected));
        result.min_objective = worst;
    }

    std::uint64_t base_calls = 0;
    for (const CountingOracle& f : counted) base_calls += f.calls();
    result.oracle_call_count = base_calls;
    return result;
}

WssaResult ssa(std::span<const SetFunctionOracle* const> objectives, const CostModel& costs,
               WssaConfig config) {
    config.sample_size = costs.size();
    return random_wssa(objectives, costs, config);
}

} // namespace satsel
