#pragma once

#include <vector>

#include "satsel/core/bitvec.hpp"
#include "satsel/core/oracle.hpp"

namespace satsel {

/// Weight of the union of the items covered by the selected elements.
/// Normalized, monotone and submodular by construction.
class WeightedCoverageObjective final : public SetFunctionOracle {
public:
    /// covers[j] lists the item indices element j covers.
    WeightedCoverageObjective(std::vector<double> item_weights,
                              const std::vector<std::vector<int>>& covers);

    /// Prebuilt per-element item masks (all sized to item_weights).
    WeightedCoverageObjective(std::vector<double> item_weights,
                              std::vector<BitVector> element_masks);

    double evaluate(std::span<const int> subset) const override;
    bool is_submodular() const override { return true; }
    std::optional<double> wsc_upper_bound() const override { return 1.0; }

    int ground_size() const { return static_cast<int>(masks_.size()); }
    std::size_t item_count() const { return weights_.size(); }
    const BitVector& element_mask(int j) const { return masks_[static_cast<std::size_t>(j)]; }

    /// Items covered by the selection, as a mask.
    BitVector covered(std::span<const int> subset) const;

private:
    std::vector<double> weights_;
    std::vector<BitVector> masks_;
};

} // namespace satsel
