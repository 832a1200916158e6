#include "satsel/objectives/combinators.hpp"

#include <algorithm>
#include <stdexcept>

#include "satsel/core/types.hpp"

namespace satsel {

TruncatedObjective::TruncatedObjective(const SetFunctionOracle& inner, double k)
    : inner_(&inner), k_(k) {
    if (!(k >= 0.0)) throw std::invalid_argument("truncation level must be nonnegative");
}

double TruncatedObjective::evaluate(std::span<const int> subset) const {
    return std::min(inner_->evaluate(subset), k_);
}

AveragedObjective::AveragedObjective(std::vector<const SetFunctionOracle*> inner,
                                     std::vector<double> weights)
    : inner_(std::move(inner)), weights_(std::move(weights)) {
    if (inner_.empty()) throw std::invalid_argument("need at least one oracle to average");
    if (weights_.empty())
        weights_.assign(inner_.size(), 1.0 / static_cast<double>(inner_.size()));
    if (weights_.size() != inner_.size())
        throw std::invalid_argument("weights must match the number of oracles");
    for (double w : weights_)
        if (!(w >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
}

double AveragedObjective::evaluate(std::span<const int> subset) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < inner_.size(); ++i)
        sum += weights_[i] * inner_[i]->evaluate(subset);
    return sum;
}

bool AveragedObjective::is_submodular() const {
    return std::all_of(inner_.begin(), inner_.end(),
                       [](const SetFunctionOracle* f) { return f->is_submodular(); });
}

NormalizedObjective::NormalizedObjective(const SetFunctionOracle& inner, int ground_size)
    : inner_(&inner) {
    divisor_ = inner.evaluate(GroundSet(ground_size).all());
    if (!(divisor_ >= 0.0))
        throw std::invalid_argument("cannot normalize by a negative full-set value");
}

double NormalizedObjective::evaluate(std::span<const int> subset) const {
    if (divisor_ == 0.0) return 0.0;
    return inner_->evaluate(subset) / divisor_;
}

TruncatedObjective truncate(const SetFunctionOracle& oracle, double k) {
    return TruncatedObjective(oracle, k);
}

AveragedObjective average(std::vector<const SetFunctionOracle*> oracles,
                          std::vector<double> weights) {
    return AveragedObjective(std::move(oracles), std::move(weights));
}

} // namespace satsel
