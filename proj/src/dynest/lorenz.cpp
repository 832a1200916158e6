#include "satsel/dynest/lorenz.hpp"

#include <cmath>
#include <stdexcept>

namespace satsel::dynest {

Eigen::Vector3d lorenz_derivative(const Eigen::Vector3d& s, const LorenzParams& p) {
    return p.kappa * Eigen::Vector3d(p.sigma * (s.y() - s.x()),
                                     s.x() * (p.rho - s.z()) - s.y(),
                                     s.x() * s.y() - p.beta * s.z());
}

Eigen::Vector3d rk4_step(const Eigen::Vector3d& state, const LorenzParams& params, double dt) {
    const Eigen::Vector3d k1 = lorenz_derivative(state, params);
    const Eigen::Vector3d k2 = lorenz_derivative(state + 0.5 * dt * k1, params);
    const Eigen::Vector3d k3 = lorenz_derivative(state + 0.5 * dt * k2, params);
    const Eigen::Vector3d k4 = lorenz_derivative(state + dt * k3, params);
    return state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Eigen::Matrix3d psd_sqrt(const Eigen::Matrix3d& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (m + m.transpose()));
    Eigen::Vector3d ev = es.eigenvalues();
    for (int i = 0; i < 3; ++i) {
        if (ev(i) < -1e-9) throw std::invalid_argument("noise covariance is not PSD");
        ev(i) = std::sqrt(std::max(ev(i), 0.0));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::Vector3d step_truth(const Eigen::Vector3d& state, const LorenzParams& params,
                           double dt, satsel::RngStream& rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    const Eigen::Vector3d drift = rk4_step(state, params, dt);
    const Eigen::Matrix3d noise_sqrt = psd_sqrt(params.process_noise);
    const Eigen::Vector3d xi(rng.normal(), rng.normal(), rng.normal());
    return drift + std::sqrt(dt) * (noise_sqrt * xi);
}

namespace {

int substep_count(const LorenzParams& params, double duration_s) {
    if (duration_s == 0.0) return 0;
    if (!(duration_s > 0.0)) throw std::invalid_argument("duration must be nonnegative");
    if (!(params.integrator_dt_s > 0.0))
        throw std::invalid_argument("integrator substep must be positive");
    const int k = static_cast<int>(std::ceil(duration_s / params.integrator_dt_s - 1e-12));
    return std::max(k, 1);
}

} // namespace

Eigen::Vector3d advance_deterministic(const Eigen::Vector3d& state, const LorenzParams& params,
                                      double duration_s) {
    const int k = substep_count(params, duration_s);
    if (k == 0) return state;
    const double h = duration_s / k;
    Eigen::Vector3d x = state;
    for (int i = 0; i < k; ++i) x = rk4_step(x, params, h);
    return x;
}

Eigen::Vector3d advance_truth(const Eigen::Vector3d& state, const LorenzParams& params,
                              double duration_s, satsel::RngStream& rng) {
    const int k = substep_count(params, duration_s);
    if (k == 0) return state;
    const double h = duration_s / k;
    Eigen::Vector3d x = state;
    for (int i = 0; i < k; ++i) x = step_truth(x, params, h, rng);
    return x;
}

} // namespace satsel::dynest
