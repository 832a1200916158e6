#include "satsel/algorithms/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "satsel/core/rng.hpp"
#include "satsel/core/sampling.hpp"

namespace satsel {

double estimate_wsc(const SetFunctionOracle& oracle, const GroundSet& ground) {
    const int n = ground.size;
    if (n > 12) throw std::invalid_argument("ground set too large for WSC enumeration");

    // table every subset value once; gains below are lookups
    const std::uint32_t full = (1u << n) - 1;
    std::vector<double> value(full + 1, 0.0);
    ElementSet scratch;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        scratch.clear();
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) scratch.push_back(j);
        value[mask] = oracle.evaluate(scratch);
    }

    auto gain = [&](std::uint32_t mask, int j) {
        double g = value[mask | (1u << j)] - value[mask];
        return g > 0.0 ? g : 0.0; // tolerate FP jitter on monotone oracles
    };

    double wsc = 0.0;
    for (std::uint32_t t_mask = 0; t_mask < full; ++t_mask) {
        for (int j = 0; j < n; ++j) {
            if (t_mask & (1u << j)) continue;
            const double g_t = gain(t_mask, j);
            // enumerate S ⊆ T, including the empty set
            std::uint32_t s_mask = t_mask;
            for (;;) {
                const double g_s = gain(s_mask, j);
                if (g_s > 0.0) {
                    wsc = std::max(wsc, g_t / g_s);
                } else if (g_t > 0.0) {
                    return std::numeric_limits<double>::infinity();
                }
                if (s_mask == 0) break;
                s_mask = (s_mask - 1) & t_mask;
            }
        }
    }
    return wsc;
}

EtaDiagnostic eta_diagnostic(const SetFunctionOracle& oracle, const CostModel& costs,
                             const MrgConfig& config) {
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

    RngStream rng(config.seed);
    EtaDiagnostic diag;

    ElementSet selected;
    ElementSet remaining = GroundSet(n).all();
    double current_value = 0.0;
    double current_cost = 0.0;

    while (!remaining.empty()) {
        ElementSet sample = sample_without_replacement(remaining, r, rng);
        int best = -1;
        double best_ratio = -std::numeric_limits<double>::infinity();
        double best_value = 0.0;
        for (int j : sample) {
            double grown = oracle.evaluate(set_with_element(selected, j));
            double ratio = gain_cost_ratio(grown - current_value, costs.cost(j));
            if (ratio > best_ratio) {
                best = j;
                best_ratio = ratio;
                best_value = grown;
            }
        }

        // shadow full search over everything not yet selected (not just the
        // unexamined pool), mirroring what the non-randomized greedy would see
        double greedy_ratio = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (set_contains(selected, j)) continue;
            double grown = oracle.evaluate(set_with_element(selected, j));
            double ratio = gain_cost_ratio(grown - current_value, costs.cost(j));
            greedy_ratio = std::max(greedy_ratio, ratio);
        }

        if (current_cost + costs.cost(best) <= config.budget) {
            selected = set_with_element(selected, best);
            current_value = best_value;
            current_cost += costs.cost(best);
            if (greedy_ratio > 0.0 &&
                greedy_ratio < std::numeric_limits<double>::infinity()) {
                diag.etas.push_back(best_ratio / greedy_ratio);
            } else if (greedy_ratio == 0.0 && best_ratio == 0.0) {
                // 0/0: the pass carries no ranking information; skip it
            } else {
                diag.etas.push_back(best_ratio == greedy_ratio ? 1.0 : 0.0);
            }
        }
        auto pos = std::lower_bound(remaining.begin(), remaining.end(), best);
        remaining.erase(pos);
    }

    for (std::size_t i = 1; i < diag.etas.size(); ++i)
        diag.increments.push_back(diag.etas[i] - diag.etas[i - 1]);

    if (!diag.etas.empty()) {
        double sum = 0.0;
        for (double e : diag.etas) sum += e;
        diag.mean = sum / static_cast<double>(diag.etas.size());
        double ss = 0.0;
        for (double e : diag.etas) ss += (e - diag.mean) * (e - diag.mean);
        if (diag.etas.size() > 1) {
            double var = ss / static_cast<double>(diag.etas.size() - 1);
            diag.std_error = std::sqrt(var / static_cast<double>(diag.etas.size()));
        }
    }
    return diag;
}

MuEstimate estimate_mu(const SetFunctionOracle& oracle, const CostModel& costs,
                       MrgConfig config, int runs) {
    if (runs < 1) throw std::invalid_argument("need at least one diagnostic run");
    const std::uint64_t base_seed = config.seed;
    std::vector<double> pooled;
    for (int k = 0; k < runs; ++k) {
        config.seed = derive_seed(base_seed, "mu-run", static_cast<std::uint64_t>(k));
        EtaDiagnostic d = eta_diagnostic(oracle, costs, config);
        pooled.insert(pooled.end(), d.etas.begin(), d.etas.end());
    }

    MuEstimate est;
    est.samples = pooled.size();
    if (pooled.empty()) return est;
    double sum = 0.0;
    for (double e : pooled) sum += e;
    est.mean = sum / static_cast<double>(pooled.size());
    double ss = 0.0;
    for (double e : pooled) ss += (e - est.mean) * (e - est.mean);
    if (pooled.size() > 1) {
        double var = ss / static_cast<double>(pooled.size() - 1);
        est.std_error = std::sqrt(var / static_cast<double>(pooled.size()));
    }
    est.conservative = std::clamp(est.mean - est.std_error, 1e-12, 1.0);
    return est;
}

} // namespace satsel
