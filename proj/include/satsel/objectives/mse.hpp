#pragma once

#include <Eigen/Dense>
#include <vector>

#include "satsel/core/bitvec.hpp"
#include "satsel/core/oracle.hpp"

namespace satsel {

/// Frozen per-step inputs for the estimation objective: the predicted belief
/// covariance of each monitored point, which satellites can observe it, and
/// the shared measurement noise.
struct MseSnapshot {
    std::vector<Eigen::Matrix3d> prior_cov; ///< one per point, symmetric PD
    std::vector<BitVector> observers;       ///< one per point, sized to |N|
    Eigen::Matrix3d meas_noise = Eigen::Matrix3d::Identity();
    int ground_size = 0;
};

/// Total predicted-trace reduction over all points when the selected
/// satellites' identity observations are fused into the frozen snapshot.
/// Each additional observer of a point adds one copy of the measurement
/// information, so per-point gains diminish with the observer count.
class MseReductionObjective final : public SetFunctionOracle {
public:
    explicit MseReductionObjective(const MseSnapshot& snapshot);

    double evaluate(std::span<const int> subset) const override;

    /// Trace of the posterior covariance of one point under m observers.
    double posterior_trace(int point, int observer_count) const;

private:
    const MseSnapshot* snapshot_;
    std::vector<std::vector<double>> trace_by_count_; ///< per point, index = #observers
};

} // namespace satsel
