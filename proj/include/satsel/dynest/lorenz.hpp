#pragma once

#include <Eigen/Dense>

#include "satsel/core/rng.hpp"

namespace satsel::dynest {

/// Time-scaled Lorenz-63 parameters with additive process noise.
struct LorenzParams {
    double kappa = 0.005;
    double sigma = 10.0;
    double rho = 28.0;
    double beta = 8.0 / 3.0;
    Eigen::Matrix3d process_noise = 0.1 * Eigen::Matrix3d::Identity(); ///< PSD
    double integrator_dt_s = 1.0; ///< RK4 substep length
};

Eigen::Vector3d lorenz_derivative(const Eigen::Vector3d& state, const LorenzParams& params);

/// One deterministic RK4 step of the drift.
Eigen::Vector3d rk4_step(const Eigen::Vector3d& state, const LorenzParams& params, double dt);

/// RK4 drift advance plus one Euler-Maruyama diffusion increment
/// sqrt(dt) * L * xi with L the PSD square root of the process noise.
Eigen::Vector3d step_truth(const Eigen::Vector3d& state, const LorenzParams& params,
                           double dt, satsel::RngStream& rng);

/// Noiseless advance over a duration using integrator_dt_s substeps.
Eigen::Vector3d advance_deterministic(const Eigen::Vector3d& state, const LorenzParams& params,
                                      double duration_s);

/// Noisy advance over a duration, one diffusion increment per substep.
Eigen::Vector3d advance_truth(const Eigen::Vector3d& state, const LorenzParams& params,
                              double duration_s, satsel::RngStream& rng);

/// PSD square root via eigendecomposition (handles singular noise).
Eigen::Matrix3d psd_sqrt(const Eigen::Matrix3d& m);

} // namespace satsel::dynest
