#pragma once

#include <vector>

namespace satsel::orbitsim {

/// Latitude/longitude grid over a spherical Earth. Cell areas use the exact
/// spherical band formula R^2 * dlon * (sin(lat2) - sin(lat1)), so the areas
/// telescope to the full sphere. Centroids are stored in a structure-of-
/// arrays layout ready for the visibility kernels.
class EarthGrid {
public:
    static EarthGrid build(int resolution_deg);

    int resolution_deg() const { return resolution_deg_; }
    std::size_t cell_count() const { return area_km2_.size(); }
    int lat_bands() const { return n_lat_; }
    int lon_bands() const { return n_lon_; }

    const std::vector<double>& cell_areas_km2() const { return area_km2_; }
    double total_area_km2() const;

    double centroid_lat_deg(std::size_t cell) const;
    double centroid_lon_deg(std::size_t cell) const;

    const double* centroid_x() const { return cx_.data(); }
    const double* centroid_y() const { return cy_.data(); }
    const double* centroid_z() const { return cz_.data(); }
    const double* centroid_dot() const { return cdot_.data(); }

private:
    int resolution_deg_ = 0;
    int n_lat_ = 0;
    int n_lon_ = 0;
    std::vector<double> area_km2_;
    std::vector<double> cx_, cy_, cz_, cdot_; ///< centroid ECEF km and |c|^2
};

} // namespace satsel::orbitsim
