#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace satsel {

/// Elements are dense integer indices 0..size-1. Subsets are sorted,
/// duplicate-free vectors of those indices.
using ElementSet = std::vector<int>;

struct GroundSet {
    int size = 0;

    explicit GroundSet(int n);

    ElementSet all() const;
    bool contains(int j) const { return j >= 0 && j < size; }
};

bool set_contains(std::span<const int> subset, int j);

/// Returns subset ∪ {j}, keeping the sorted order. j must not be a member.
ElementSet set_with_element(std::span<const int> subset, int j);

bool is_canonical_subset(std::span<const int> subset, int ground_size);

/// Additive per-element selection costs.
class CostModel {
public:
    explicit CostModel(std::vector<double> costs);

    static CostModel uniform(int n, double cost = 1.0);

    int size() const { return static_cast<int>(costs_.size()); }
    double cost(int j) const;
    std::span<const double> costs() const { return costs_; }

    double total_cost(std::span<const int> subset) const;
    double total_squared_cost(std::span<const int> subset) const;

    /// Costs sorted nondecreasing, duplicates retained.
    std::span<const double> sorted_costs() const { return sorted_; }
    double max_cost() const;
    double min_cost() const;

private:
    std::vector<double> costs_;
    std::vector<double> sorted_;
};

} // namespace satsel
