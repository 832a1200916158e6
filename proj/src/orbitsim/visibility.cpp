#include "satsel/orbitsim/visibility.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "satsel/kernels/visibility.hpp"
#include "satsel/orbitsim/constants.hpp"

namespace satsel::orbitsim {

bool fov_contains(const Eigen::Vector3d& sat_ecef, const Eigen::Vector3d& ground_ecef,
                  double half_angle_rad) {
    if (!(half_angle_rad > 0.0 && half_angle_rad < std::numbers::pi / 2.0))
        throw std::invalid_argument("cone half-angle must lie in (0, pi/2)");
    if (!(sat_ecef.norm() > kEarthRadiusKm))
        throw std::invalid_argument("satellite must be above the surface");
    return kernels::cone_visible_point(sat_ecef.x(), sat_ecef.y(), sat_ecef.z(),
                                       std::cos(half_angle_rad), ground_ecef.x(),
                                       ground_ecef.y(), ground_ecef.z(),
                                       ground_ecef.squaredNorm());
}

satsel::BitVector visible_cell_mask(const SatelliteEphemeris& ephemeris, int sat,
                                    const EarthGrid& grid, double half_angle_rad,
                                    double t_s) {
    if (!(half_angle_rad > 0.0 && half_angle_rad < std::numbers::pi / 2.0))
        throw std::invalid_argument("cone half-angle must lie in (0, pi/2)");
    const Eigen::Vector3d sat_ecef = eci_to_ecef(ephemeris.position_eci(sat, t_s), t_s);

    const std::size_t cells = grid.cell_count();
    std::vector<std::uint8_t> flags(cells);
    kernels::cone_visibility(sat_ecef.x(), sat_ecef.y(), sat_ecef.z(),
                             std::cos(half_angle_rad), grid.centroid_x(), grid.centroid_y(),
                             grid.centroid_z(), grid.centroid_dot(), cells, flags.data());

    satsel::BitVector mask(cells);
    for (std::size_t i = 0; i < cells; ++i)
        if (flags[i]) mask.set(i);
    return mask;
}

satsel::BitVector covered_cells(const SatelliteEphemeris& ephemeris, const EarthGrid& grid,
                                std::span<const int> selection, double half_angle_rad,
                                double t_s) {
    satsel::BitVector acc(grid.cell_count());
    for (int sat : selection)
        acc |= visible_cell_mask(ephemeris, sat, grid, half_angle_rad, t_s);
    return acc;
}

std::vector<Eigen::Vector3d> sample_surface_points(int count, satsel::RngStream& rng) {
    std::vector<Eigen::Vector3d> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double z = rng.uniform(-1.0, 1.0);
        const double lon = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        points.emplace_back(kEarthRadiusKm * s * std::cos(lon),
                            kEarthRadiusKm * s * std::sin(lon), kEarthRadiusKm * z);
    }
    return points;
}

} // namespace satsel::orbitsim
