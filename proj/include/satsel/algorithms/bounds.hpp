#pragma once

namespace satsel {

/// Inputs shared by the approximation-bound evaluators. Only the fields a
/// given bound reads need to be populated.
struct BoundInputs {
    double mu = 1.0;          ///< lower bound on E[eta], in (0, 1]
    double wsc = 1.0;         ///< weak-submodularity constant, >= 1
    double delta = 1.0;       ///< confidence parameter, in (0, 1]
    int U = 1;                ///< smallest prefix count of sorted costs reaching B
    double max_cost = 0.0;    ///< largest single-element cost
    double budget = 0.0;      ///< budget bound B
    int iterations = 1;       ///< L, iterations until termination
    double max_singleton = 0.0;     ///< M = max_j f({j})
    double min_last_gain = 0.0;     ///< m = min remaining marginal gain at the last step
    double opt_cost_lower = 1.0;    ///< lower bound on c(S*)
    double squared_cost = 0.0;      ///< c^2(S) of the returned selection
};

/// High-probability approximation factor for the budget-constrained
/// randomized greedy. May be nonpositive (no guarantee); returned as-is.
double mrg_value_bound(const BoundInputs& in);

/// High-probability cost-ratio bound for the threshold-constrained
/// randomized greedy. Requires min_last_gain > 0.
double drg_cost_bound(const BoundInputs& in);

struct AlphaBound {
    double alpha = 0.0;
    double success_probability = 1.0;
    /// False when m = 0 leaves the bound undefined (alpha is NaN then).
    bool alpha_defined = true;
};

/// Budget-relaxation factor and success probability for the randomized
/// saturation search after P outer iterations.
AlphaBound wssa_alpha_bound(const BoundInputs& in, int outer_iterations);

} // namespace satsel
