#include "satsel/algorithms/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace satsel {

namespace {

void check_confidence(double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("confidence parameter must lie in (0, 1]");
}

} // namespace

double mrg_value_bound(const BoundInputs& in) {
    if (!(in.budget > 0.0)) throw std::invalid_argument("budget must be positive");
    if (!(in.wsc >= 1.0)) throw std::invalid_argument("WSC must be at least 1");
    if (in.U < 1) throw std::invalid_argument("U must be at least 1");
    check_confidence(in.delta);

    const double lam = std::log(1.0 / in.delta);
    const double penalty =
        (in.max_cost / in.budget) * std::sqrt((static_cast<double>(in.U) / 2.0) * lam);
    const double z = in.mu - penalty;
    return -std::expm1(-z / in.wsc) / (2.0 * in.wsc * in.wsc);
}

double drg_cost_bound(const BoundInputs& in) {
    if (!(in.min_last_gain > 0.0))
        throw std::invalid_argument("bound undefined for m <= 0");
    if (!(in.max_singleton >= in.min_last_gain))
        throw std::invalid_argument("M must be at least m");
    if (!(in.mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (!(in.wsc >= 1.0)) throw std::invalid_argument("WSC must be at least 1");
    if (!(in.opt_cost_lower > 0.0))
        throw std::invalid_argument("optimal-cost lower bound must be positive");
    if (in.iterations < 1) throw std::invalid_argument("iteration count must be positive");
    check_confidence(in.delta);

    const double greedy_part =
        (in.wsc / in.mu) *
        (1.0 + (static_cast<double>(in.iterations) - 1.0) * std::log(in.wsc) +
         std::log(in.max_singleton / in.min_last_gain));
    const double lam = std::log(1.0 / in.delta);
    const double deviation_part =
        std::sqrt(0.5 * lam * in.squared_cost) / (in.mu * in.opt_cost_lower);
    return greedy_part + deviation_part;
}

AlphaBound wssa_alpha_bound(const BoundInputs& in, int outer_iterations) {
    if (outer_iterations < 0)
        throw std::invalid_argument("outer iteration count must be nonnegative");
    check_confidence(in.delta);

    AlphaBound out;
    out.success_probability =
        std::pow(1.0 - in.delta, static_cast<double>(outer_iterations));
    if (in.min_last_gain > 0.0) {
        out.alpha = drg_cost_bound(in);
    } else {
        out.alpha = std::numeric_limits<double>::quiet_NaN();
        out.alpha_defined = false;
    }
    return out;
}

} // namespace satsel
