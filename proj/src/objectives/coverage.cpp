#include "satsel/objectives/coverage.hpp"

#include <stdexcept>

namespace satsel {

WeightedCoverageObjective::WeightedCoverageObjective(
    std::vector<double> item_weights, const std::vector<std::vector<int>>& covers)
    : weights_(std::move(item_weights)) {
    for (double w : weights_)
        if (!(w >= 0.0)) throw std::invalid_argument("item weights must be nonnegative");
    masks_.reserve(covers.size());
    for (const auto& items : covers) {
        BitVector mask(weights_.size());
        for (int item : items) {
            if (item < 0 || static_cast<std::size_t>(item) >= weights_.size())
                throw std::out_of_range("covered item index out of range");
            mask.set(static_cast<std::size_t>(item));
        }
        masks_.push_back(std::move(mask));
    }
    if (masks_.empty()) throw std::invalid_argument("need at least one element");
}

WeightedCoverageObjective::WeightedCoverageObjective(std::vector<double> item_weights,
                                                     std::vector<BitVector> element_masks)
    : weights_(std::move(item_weights)), masks_(std::move(element_masks)) {
    if (masks_.empty()) throw std::invalid_argument("need at least one element");
    for (const BitVector& m : masks_)
        if (m.size() != weights_.size())
            throw std::invalid_argument("element mask size must match the item count");
}

BitVector WeightedCoverageObjective::covered(std::span<const int> subset) const {
    BitVector acc(weights_.size());
    for (int j : subset) {
        if (j < 0 || static_cast<std::size_t>(j) >= masks_.size())
            throw std::out_of_range("element index out of range");
        acc |= masks_[static_cast<std::size_t>(j)];
    }
    return acc;
}

double WeightedCoverageObjective::evaluate(std::span<const int> subset) const {
    return covered(subset).weighted_sum(weights_);
}

} // namespace satsel
