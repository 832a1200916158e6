#pragma once

#include <Eigen/Dense>
#include <vector>

namespace satsel::orbitsim {

/// Walker-Delta constellation i:T/P/f on circular orbits.
struct WalkerDeltaConfig {
    double inclination_rad = 0.0;
    int total = 1;   ///< T, total satellites
    int planes = 1;  ///< P, must divide T
    int phasing = 0; ///< f in [0, P)
    double altitude_km = 0.0;
    double epoch_s = 0.0;
};

/// Per-satellite circular orbital elements plus the shared constellation
/// geometry. Positions come from ideal two-body motion: the argument of
/// latitude advances at the constant mean motion.
class SatelliteEphemeris {
public:
    static SatelliteEphemeris walker_delta(const WalkerDeltaConfig& config);

    int size() const { return static_cast<int>(raan_.size()); }
    double semi_major_axis_km() const { return semi_major_axis_km_; }
    double inclination_rad() const { return inclination_rad_; }
    double mean_motion_rad_per_s() const { return mean_motion_; }
    double period_s() const;

    double raan(int sat) const { return raan_[static_cast<std::size_t>(sat)]; }
    double initial_arg_latitude(int sat) const { return arg_lat0_[static_cast<std::size_t>(sat)]; }

    Eigen::Vector3d position_eci(int sat, double t_s) const;

private:
    double semi_major_axis_km_ = 0.0;
    double inclination_rad_ = 0.0;
    double mean_motion_ = 0.0;
    double epoch_s_ = 0.0;
    std::vector<double> raan_;
    std::vector<double> arg_lat0_;
};

/// Rotates an inertial position into the Earth-fixed frame (frames are
/// aligned at t = 0).
Eigen::Vector3d eci_to_ecef(const Eigen::Vector3d& position_eci, double t_s);

} // namespace satsel::orbitsim
