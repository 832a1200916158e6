#pragma once

#include <span>
#include <vector>

#include "satsel/core/oracle.hpp"

namespace satsel {

/// min(f(S), k). Non-owning; the inner oracle must outlive the wrapper.
/// Truncation preserves monotonicity, normalization and (weak) submodularity.
class TruncatedObjective final : public SetFunctionOracle {
public:
    TruncatedObjective(const SetFunctionOracle& inner, double k);

    double evaluate(std::span<const int> subset) const override;
    bool is_submodular() const override { return inner_->is_submodular(); }

    double truncation_level() const { return k_; }

private:
    const SetFunctionOracle* inner_;
    double k_;
};

/// Nonnegative weighted sum of oracles; weights default to 1/n each.
class AveragedObjective final : public SetFunctionOracle {
public:
    explicit AveragedObjective(std::vector<const SetFunctionOracle*> inner,
                               std::vector<double> weights = {});

    double evaluate(std::span<const int> subset) const override;
    bool is_submodular() const override;

private:
    std::vector<const SetFunctionOracle*> inner_;
    std::vector<double> weights_;
};

/// inner(S) / divisor with divisor = inner(N) captured at construction, so
/// values live in [0, 1] and the full set scores exactly 1. A zero divisor
/// (nothing achievable this step) degenerates to the constant-zero function.
class NormalizedObjective final : public SetFunctionOracle {
public:
    NormalizedObjective(const SetFunctionOracle& inner, int ground_size);

    double evaluate(std::span<const int> subset) const override;
    bool is_submodular() const override { return inner_->is_submodular(); }

    double divisor() const { return divisor_; }

private:
    const SetFunctionOracle* inner_;
    double divisor_;
};

TruncatedObjective truncate(const SetFunctionOracle& oracle, double k);
AveragedObjective average(std::vector<const SetFunctionOracle*> oracles,
                          std::vector<double> weights = {});

} // namespace satsel
