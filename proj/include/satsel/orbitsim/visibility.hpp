#pragma once

#include <Eigen/Dense>
#include <span>

#include "satsel/core/bitvec.hpp"
#include "satsel/core/rng.hpp"
#include "satsel/orbitsim/grid.hpp"
#include "satsel/orbitsim/walker.hpp"

namespace satsel::orbitsim {

/// True when the ground point lies within the satellite's nadir-pointing cone
/// and on the satellite-facing hemisphere (closed boundary; no through-Earth
/// visibility). half_angle_rad must lie in (0, pi/2).
bool fov_contains(const Eigen::Vector3d& sat_ecef, const Eigen::Vector3d& ground_ecef,
                  double half_angle_rad);

/// Cells of the grid whose centroid one satellite sees at time t.
satsel::BitVector visible_cell_mask(const SatelliteEphemeris& ephemeris, int sat,
                                    const EarthGrid& grid, double half_angle_rad, double t_s);

/// Union of visible cells over a selection of satellites.
satsel::BitVector covered_cells(const SatelliteEphemeris& ephemeris, const EarthGrid& grid,
                                std::span<const int> selection, double half_angle_rad,
                                double t_s);

/// Area-uniform random points on the spherical Earth surface (Earth-fixed).
std::vector<Eigen::Vector3d> sample_surface_points(int count, satsel::RngStream& rng);

} // namespace satsel::orbitsim
