#include "satsel/orbitsim/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "satsel/orbitsim/constants.hpp"

namespace satsel::orbitsim {

EarthGrid EarthGrid::build(int resolution_deg) {
    if (resolution_deg < 1 || 180 % resolution_deg != 0)
        throw std::invalid_argument("grid resolution must divide 180 degrees");

    EarthGrid grid;
    grid.resolution_deg_ = resolution_deg;
    grid.n_lat_ = 180 / resolution_deg;
    grid.n_lon_ = 360 / resolution_deg;

    const double deg = std::numbers::pi / 180.0;
    const double r2 = kEarthRadiusKm * kEarthRadiusKm;
    const double dlon = resolution_deg * deg;

    const std::size_t cells =
        static_cast<std::size_t>(grid.n_lat_) * static_cast<std::size_t>(grid.n_lon_);
    grid.area_km2_.reserve(cells);
    grid.cx_.reserve(cells);
    grid.cy_.reserve(cells);
    grid.cz_.reserve(cells);
    grid.cdot_.reserve(cells);

    for (int band = 0; band < grid.n_lat_; ++band) {
        const double lat1 = (-90.0 + band * resolution_deg) * deg;
        const double lat2 = (-90.0 + (band + 1) * resolution_deg) * deg;
        const double band_area = r2 * dlon * (std::sin(lat2) - std::sin(lat1));
        const double lat_c = 0.5 * (lat1 + lat2);
        for (int col = 0; col < grid.n_lon_; ++col) {
            const double lon_c = (-180.0 + (col + 0.5) * resolution_deg) * deg;
            grid.area_km2_.push_back(band_area);
            const double x = kEarthRadiusKm * std::cos(lat_c) * std::cos(lon_c);
            const double y = kEarthRadiusKm * std::cos(lat_c) * std::sin(lon_c);
            const double z = kEarthRadiusKm * std::sin(lat_c);
            grid.cx_.push_back(x);
            grid.cy_.push_back(y);
            grid.cz_.push_back(z);
            grid.cdot_.push_back((x * x + y * y) + z * z);
        }
    }
    return grid;
}

double EarthGrid::total_area_km2() const {
    double sum = 0.0;
    for (double a : area_km2_) sum += a;
    return sum;
}

double EarthGrid::centroid_lat_deg(std::size_t cell) const {
    const int band = static_cast<int>(cell) / n_lon_;
    return -90.0 + (band + 0.5) * resolution_deg_;
}

double EarthGrid::centroid_lon_deg(std::size_t cell) const {
    const int col = static_cast<int>(cell) % n_lon_;
    return -180.0 + (col + 0.5) * resolution_deg_;
}

} // namespace satsel::orbitsim
