#pragma once

namespace satsel::orbitsim {

inline constexpr double kEarthRadiusKm = 6378.137;
inline constexpr double kEarthMuKm3PerS2 = 398600.4418;
inline constexpr double kEarthRotationRadPerS = 7.2921159e-5;

} // namespace satsel::orbitsim
