#include "satsel/orbitsim/walker.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "satsel/orbitsim/constants.hpp"

namespace satsel::orbitsim {

SatelliteEphemeris SatelliteEphemeris::walker_delta(const WalkerDeltaConfig& config) {
    if (config.total < 1 || config.planes < 1)
        throw std::invalid_argument("constellation needs at least one satellite and plane");
    if (config.total % config.planes != 0)
        throw std::invalid_argument("plane count must divide the satellite total");
    if (config.phasing < 0 || config.phasing >= config.planes)
        throw std::invalid_argument("phasing must lie in [0, planes)");
    if (!(config.altitude_km > 0.0))
        throw std::invalid_argument("altitude must be positive");

    SatelliteEphemeris eph;
    eph.semi_major_axis_km_ = kEarthRadiusKm + config.altitude_km;
    eph.inclination_rad_ = config.inclination_rad;
    eph.mean_motion_ = std::sqrt(kEarthMuKm3PerS2 / std::pow(eph.semi_major_axis_km_, 3));
    eph.epoch_s_ = config.epoch_s;

    const int per_plane = config.total / config.planes;
    const double two_pi = 2.0 * std::numbers::pi;
    eph.raan_.reserve(static_cast<std::size_t>(config.total));
    eph.arg_lat0_.reserve(static_cast<std::size_t>(config.total));
    for (int plane = 0; plane < config.planes; ++plane) {
        const double raan = two_pi * plane / config.planes;
        const double plane_phase = two_pi * config.phasing * plane / config.total;
        for (int slot = 0; slot < per_plane; ++slot) {
            eph.raan_.push_back(raan);
            eph.arg_lat0_.push_back(two_pi * slot / per_plane + plane_phase);
        }
    }
    return eph;
}

double SatelliteEphemeris::period_s() const {
    return 2.0 * std::numbers::pi / mean_motion_;
}

Eigen::Vector3d SatelliteEphemeris::position_eci(int sat, double t_s) const {
    if (sat < 0 || sat >= size()) throw std::out_of_range("satellite index out of range");
    const double u = arg_lat0_[static_cast<std::size_t>(sat)] +
                     mean_motion_ * (t_s - epoch_s_);
    const double omega = raan_[static_cast<std::size_t>(sat)];
    const double cu = std::cos(u), su = std::sin(u);
    const double co = std::cos(omega), so = std::sin(omega);
    const double ci = std::cos(inclination_rad_), si = std::sin(inclination_rad_);
    return semi_major_axis_km_ *
           Eigen::Vector3d(co * cu - so * su * ci, so * cu + co * su * ci, su * si);
}

Eigen::Vector3d eci_to_ecef(const Eigen::Vector3d& position_eci, double t_s) {
    const double theta = kEarthRotationRadPerS * t_s;
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * position_eci.x() + s * position_eci.y(),
            -s * position_eci.x() + c * position_eci.y(), position_eci.z()};
}

} // namespace satsel::orbitsim
