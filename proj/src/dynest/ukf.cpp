#include "satsel/dynest/ukf.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace satsel::dynest {

namespace {

constexpr int kDim = 3;
constexpr int kSigmaCount = 2 * kDim + 1;
constexpr double kMinEigenvalue = 1e-12;

struct SigmaSet {
    std::array<Eigen::Vector3d, kSigmaCount> points;
    double w_mean0, w_cov0, w_rest;
};

SigmaSet make_sigma_points(const UkfBelief& belief, const UkfParams& ukf) {
    const double n = static_cast<double>(kDim);
    const double lambda = ukf.alpha * ukf.alpha * (n + ukf.kappa) - n;
    const double scale = n + lambda;
    if (!(scale > 0.0)) throw std::invalid_argument("sigma-point scaling must be positive");

    Eigen::LLT<Eigen::Matrix3d> llt(belief.cov);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("belief covariance is not positive definite");
    const Eigen::Matrix3d spread = std::sqrt(scale) * Eigen::Matrix3d(llt.matrixL());

    SigmaSet s;
    s.points[0] = belief.mean;
    for (int i = 0; i < kDim; ++i) {
        s.points[static_cast<std::size_t>(1 + i)] = belief.mean + spread.col(i);
        s.points[static_cast<std::size_t>(1 + kDim + i)] = belief.mean - spread.col(i);
    }
    s.w_mean0 = lambda / scale;
    s.w_cov0 = lambda / scale + (1.0 - ukf.alpha * ukf.alpha + ukf.beta);
    s.w_rest = 0.5 / scale;
    return s;
}

} // namespace

Eigen::Matrix3d make_spd(const Eigen::Matrix3d& m) {
    Eigen::Matrix3d sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(sym);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < kMinEigenvalue)
        sym += (kMinEigenvalue - min_eig) * Eigen::Matrix3d::Identity();
    return sym;
}

namespace {

Eigen::Matrix3d clamp_variance(const Eigen::Matrix3d& cov, double max_eigenvalue) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
    if (es.eigenvalues().maxCoeff() <= max_eigenvalue) return cov;
    Eigen::Vector3d ev = es.eigenvalues().cwiseMin(max_eigenvalue);
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

} // namespace

UkfBelief ukf_predict(const UkfBelief& belief, const LorenzParams& params, double dt,
                      const UkfParams& ukf) {
    if (!(dt >= 0.0)) throw std::invalid_argument("prediction horizon must be nonnegative");
    if (dt == 0.0) return belief;
    if (!(params.integrator_dt_s > 0.0))
        throw std::invalid_argument("integrator substep must be positive");

    const int substeps =
        std::max(1, static_cast<int>(std::ceil(dt / params.integrator_dt_s - 1e-12)));
    const double h = dt / substeps;

    UkfBelief current = belief;
    for (int step = 0; step < substeps; ++step) {
        SigmaSet s = make_sigma_points(current, ukf);

        std::array<Eigen::Vector3d, kSigmaCount> propagated;
        for (int i = 0; i < kSigmaCount; ++i)
            propagated[static_cast<std::size_t>(i)] =
                rk4_step(s.points[static_cast<std::size_t>(i)], params, h);

        Eigen::Vector3d mean = s.w_mean0 * propagated[0];
        for (int i = 1; i < kSigmaCount; ++i)
            mean += s.w_rest * propagated[static_cast<std::size_t>(i)];

        Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
        for (int i = 0; i < kSigmaCount; ++i) {
            const double w = (i == 0) ? s.w_cov0 : s.w_rest;
            const Eigen::Vector3d d = propagated[static_cast<std::size_t>(i)] - mean;
            cov += w * (d * d.transpose());
        }
        cov += h * params.process_noise;

        current.mean = mean;
        current.cov = make_spd(clamp_variance(cov, ukf.max_variance));
    }
    return current;
}

UkfBelief ukf_update(const UkfBelief& belief, std::span<const Eigen::Vector3d> measurements,
                     const Eigen::Matrix3d& meas_noise, const UkfParams& ukf) {
    UkfBelief current = belief;
    for (const Eigen::Vector3d& z : measurements) {
        SigmaSet s = make_sigma_points(current, ukf);

        // identity observation: the measurement sigma points are the state ones
        Eigen::Vector3d z_pred = s.w_mean0 * s.points[0];
        for (int i = 1; i < kSigmaCount; ++i)
            z_pred += s.w_rest * s.points[static_cast<std::size_t>(i)];

        Eigen::Matrix3d innov_cov = meas_noise;
        Eigen::Matrix3d cross_cov = Eigen::Matrix3d::Zero();
        for (int i = 0; i < kSigmaCount; ++i) {
            const double w = (i == 0) ? s.w_cov0 : s.w_rest;
            const Eigen::Vector3d dz = s.points[static_cast<std::size_t>(i)] - z_pred;
            innov_cov += w * (dz * dz.transpose());
            cross_cov += w * ((s.points[static_cast<std::size_t>(i)] - current.mean) *
                              dz.transpose());
        }

        Eigen::LLT<Eigen::Matrix3d> llt(innov_cov);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("innovation covariance is singular");
        const Eigen::Matrix3d gain = llt.solve(cross_cov.transpose()).transpose();

        current.mean += gain * (z - z_pred);
        current.cov = make_spd(current.cov - gain * innov_cov * gain.transpose());
    }
    return current;
}

} // namespace satsel::dynest
