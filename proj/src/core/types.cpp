#include "satsel/core/types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace satsel {

GroundSet::GroundSet(int n) : size(n) {
    if (n < 1) throw std::invalid_argument("ground set must have at least one element");
}

ElementSet GroundSet::all() const {
    ElementSet out(static_cast<std::size_t>(size));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

bool set_contains(std::span<const int> subset, int j) {
    return std::binary_search(subset.begin(), subset.end(), j);
}

ElementSet set_with_element(std::span<const int> subset, int j) {
    ElementSet out;
    out.reserve(subset.size() + 1);
    auto pos = std::lower_bound(subset.begin(), subset.end(), j);
    if (pos != subset.end() && *pos == j)
        throw std::invalid_argument("element already in subset");
    out.insert(out.end(), subset.begin(), pos);
    out.push_back(j);
    out.insert(out.end(), pos, subset.end());
    return out;
}

bool is_canonical_subset(std::span<const int> subset, int ground_size) {
    int prev = -1;
    for (int j : subset) {
        if (j <= prev || j >= ground_size) return false;
        prev = j;
    }
    return true;
}

CostModel::CostModel(std::vector<double> costs) : costs_(std::move(costs)) {
    if (costs_.empty()) throw std::invalid_argument("cost model needs at least one element");
    for (double c : costs_)
        if (!(c >= 0.0)) throw std::invalid_argument("selection costs must be nonnegative");
    sorted_ = costs_;
    std::sort(sorted_.begin(), sorted_.end());
}

CostModel CostModel::uniform(int n, double cost) {
    return CostModel(std::vector<double>(static_cast<std::size_t>(n), cost));
}

double CostModel::cost(int j) const {
    if (j < 0 || j >= size()) throw std::out_of_range("element index out of range");
    return costs_[static_cast<std::size_t>(j)];
}

double CostModel::total_cost(std::span<const int> subset) const {
    double sum = 0.0;
    for (int j : subset) sum += cost(j);
    return sum;
}

double CostModel::total_squared_cost(std::span<const int> subset) const {
    double sum = 0.0;
    for (int j : subset) {
        double c = cost(j);
        sum += c * c;
    }
    return sum;
}

double CostModel::max_cost() const { return sorted_.back(); }
double CostModel::min_cost() const { return sorted_.front(); }

} // namespace satsel
