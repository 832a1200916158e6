#include "satsel/kernels/visibility.hpp"

#include <atomic>
#include <stdexcept>

namespace satsel::kernels {

namespace {

std::atomic<Backend> g_forced{Backend::auto_detect};

Backend detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return Backend::avx2;
#endif
    return Backend::scalar;
}

} // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::auto_detect: return "auto";
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() {
    Backend forced = g_forced.load(std::memory_order_relaxed);
    return forced == Backend::auto_detect ? detect() : forced;
}

void force_backend(Backend b) {
    if (b == Backend::avx2 && !cpu_has_avx2())
        throw std::runtime_error("avx2 backend requested but not supported by this CPU");
    g_forced.store(b, std::memory_order_relaxed);
}

void cone_visibility_scalar(double sat_x, double sat_y, double sat_z, double cos_half,
                            const double* px, const double* py, const double* pz,
                            const double* pdot, std::size_t count, std::uint8_t* out) {
    const double ss = (sat_x * sat_x + sat_y * sat_y) + sat_z * sat_z;
    const double c2ss = (cos_half * cos_half) * ss;
    for (std::size_t i = 0; i < count; ++i) {
        const double dot = (sat_x * px[i] + sat_y * py[i]) + sat_z * pz[i];
        const double lhs = ss - dot;
        const double qq = (ss - (dot + dot)) + pdot[i];
        const bool hemi = dot >= pdot[i];
        const bool cone = lhs * lhs >= c2ss * qq;
        out[i] = static_cast<std::uint8_t>(hemi && cone);
    }
}

void cone_visibility(double sat_x, double sat_y, double sat_z, double cos_half,
                     const double* px, const double* py, const double* pz,
                     const double* pdot, std::size_t count, std::uint8_t* out) {
    if (!(cos_half > 0.0 && cos_half < 1.0))
        throw std::invalid_argument("cone half-angle must lie in (0, pi/2)");
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2) {
        cone_visibility_avx2(sat_x, sat_y, sat_z, cos_half, px, py, pz, pdot, count, out);
        return;
    }
#endif
    cone_visibility_scalar(sat_x, sat_y, sat_z, cos_half, px, py, pz, pdot, count, out);
}

bool cone_visible_point(double sat_x, double sat_y, double sat_z, double cos_half,
                        double gx, double gy, double gz, double gdot) {
    std::uint8_t out = 0;
    cone_visibility_scalar(sat_x, sat_y, sat_z, cos_half, &gx, &gy, &gz, &gdot, 1, &out);
    return out != 0;
}

} // namespace satsel::kernels
