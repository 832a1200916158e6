#pragma once

#include <cstddef>
#include <cstdint>

namespace satsel::kernels {

enum class Backend {
    auto_detect,
    scalar,
    avx2,
};

const char* backend_name(Backend b);

/// Backend the dispatcher currently resolves to (never auto_detect).
Backend active_backend();

/// Test hook; auto_detect restores CPU-based selection.
void force_backend(Backend b);

bool cpu_has_avx2();

/// One satellite against many ground points, hemisphere + cone test.
///
/// Point i (coordinates px/py/pz, with pdot = px²+py²+pz² precomputed) is
/// visible when it lies on the satellite-facing side of its local tangent
/// plane and within the nadir-pointing cone of half-angle acos(cos_half).
/// Requires cos_half in (0, 1), i.e. a half-angle below 90°. The test is
/// evaluated in squared form (no sqrt/acos) with a fixed operation order so
/// that every backend produces bit-identical results.
void cone_visibility_scalar(double sat_x, double sat_y, double sat_z, double cos_half,
                            const double* px, const double* py, const double* pz,
                            const double* pdot, std::size_t count, std::uint8_t* out);

#if defined(__x86_64__) || defined(_M_X64)
void cone_visibility_avx2(double sat_x, double sat_y, double sat_z, double cos_half,
                          const double* px, const double* py, const double* pz,
                          const double* pdot, std::size_t count, std::uint8_t* out);
#endif

/// Dispatches to the active backend.
void cone_visibility(double sat_x, double sat_y, double sat_z, double cos_half,
                     const double* px, const double* py, const double* pz,
                     const double* pdot, std::size_t count, std::uint8_t* out);

/// Scalar single-point form of the same test, shared with fov_contains.
bool cone_visible_point(double sat_x, double sat_y, double sat_z, double cos_half,
                        double gx, double gy, double gz, double gdot);

} // namespace satsel::kernels
