#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace satsel {

/// Evaluation contract for a normalized monotone nondecreasing set function.
/// Implementations must be deterministic for fixed underlying state, return 0
/// for the empty set, and be safe to call concurrently (evaluate is const and
/// scenario state is read-only after construction).
class SetFunctionOracle {
public:
    virtual ~SetFunctionOracle() = default;

    /// subset must be sorted, duplicate-free, and within the ground set.
    virtual double evaluate(std::span<const int> subset) const = 0;

    /// Declared metadata; true only when submodularity is known by construction.
    virtual bool is_submodular() const { return false; }

    /// Known upper bound on the weak-submodularity constant, if any.
    virtual std::optional<double> wsc_upper_bound() const { return std::nullopt; }
};

/// f(S ∪ {j}) − f(S). j must not be in subset.
double marginal_gain(const SetFunctionOracle& oracle, std::span<const int> subset, int j);

/// Pass-through view that counts evaluate() calls. Algorithms route all
/// their evaluations through one of these to report oracle_call_count.
class CountingOracle final : public SetFunctionOracle {
public:
    explicit CountingOracle(const SetFunctionOracle& inner) : inner_(inner) {}

    double evaluate(std::span<const int> subset) const override {
        ++calls_;
        return inner_.evaluate(subset);
    }
    bool is_submodular() const override { return inner_.is_submodular(); }
    std::optional<double> wsc_upper_bound() const override { return inner_.wsc_upper_bound(); }

    std::uint64_t calls() const { return calls_; }

private:
    const SetFunctionOracle& inner_;
    mutable std::uint64_t calls_ = 0;
};

} // namespace satsel
