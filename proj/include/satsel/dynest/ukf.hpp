#pragma once

#include <Eigen/Dense>
#include <span>

#include "satsel/dynest/lorenz.hpp"

namespace satsel::dynest {

struct UkfParams {
    double alpha = 1e-3; ///< sigma-point spread
    double beta = 2.0;   ///< prior-knowledge weighting
    double kappa = 0.0;  ///< secondary scaling
    /// Per-axis ceiling on predicted variance. Chaotic dynamics grow the
    /// linearized covariance without bound while a point goes unobserved;
    /// past the attractor's own spread that growth carries no information
    /// and eventually overflows, so prediction saturates here instead.
    double max_variance = 2500.0;
};

struct UkfBelief {
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    Eigen::Matrix3d cov = Eigen::Matrix3d::Identity();
};

/// Symmetrizes and, when the smallest eigenvalue dips below 1e-12, adds just
/// enough jitter to restore it. Keeps long filter runs positive definite.
Eigen::Matrix3d make_spd(const Eigen::Matrix3d& m);

/// Unscented prediction advanced one integrator substep at a time: sigma
/// points are regenerated per substep, run through the noiseless drift, and
/// the per-substep share of the process noise is added. Re-centering each
/// substep keeps the transform inside its validity region over long steps of
/// the chaotic flow; the variance ceiling keeps unobserved stretches finite.
UkfBelief ukf_predict(const UkfBelief& belief, const LorenzParams& params, double dt,
                      const UkfParams& ukf = {});

/// Sequential unscented updates with the identity observation model. With a
/// linear observation the unscented update coincides with the exact Kalman
/// update, which the tests pin down.
UkfBelief ukf_update(const UkfBelief& belief, std::span<const Eigen::Vector3d> measurements,
                     const Eigen::Matrix3d& meas_noise, const UkfParams& ukf = {});

} // namespace satsel::dynest
