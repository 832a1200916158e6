// AVX2 variant of the cone-visibility kernel. Compiled with -mavx2 in its own
// translation unit; callers reach it only through the runtime dispatcher.
// Uses plain mul/add (no FMA) so each lane matches the scalar kernel bit for
// bit.

#include "satsel/kernels/visibility.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace satsel::kernels {

void cone_visibility_avx2(double sat_x, double sat_y, double sat_z, double cos_half,
                          const double* px, const double* py, const double* pz,
                          const double* pdot, std::size_t count, std::uint8_t* out) {
    const double ss_s = (sat_x * sat_x + sat_y * sat_y) + sat_z * sat_z;
    const double c2ss_s = (cos_half * cos_half) * ss_s;

    const __m256d vsx = _mm256_set1_pd(sat_x);
    const __m256d vsy = _mm256_set1_pd(sat_y);
    const __m256d vsz = _mm256_set1_pd(sat_z);
    const __m256d vss = _mm256_set1_pd(ss_s);
    const __m256d vc2ss = _mm256_set1_pd(c2ss_s);

    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d vpx = _mm256_loadu_pd(px + i);
        const __m256d vpy = _mm256_loadu_pd(py + i);
        const __m256d vpz = _mm256_loadu_pd(pz + i);
        const __m256d vpd = _mm256_loadu_pd(pdot + i);

        const __m256d dot = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(vsx, vpx), _mm256_mul_pd(vsy, vpy)),
            _mm256_mul_pd(vsz, vpz));
        const __m256d lhs = _mm256_sub_pd(vss, dot);
        const __m256d qq =
            _mm256_add_pd(_mm256_sub_pd(vss, _mm256_add_pd(dot, dot)), vpd);

        const __m256d hemi = _mm256_cmp_pd(dot, vpd, _CMP_GE_OQ);
        const __m256d cone =
            _mm256_cmp_pd(_mm256_mul_pd(lhs, lhs), _mm256_mul_pd(vc2ss, qq), _CMP_GE_OQ);
        const int mask = _mm256_movemask_pd(_mm256_and_pd(hemi, cone));

        out[i + 0] = static_cast<std::uint8_t>(mask & 1);
        out[i + 1] = static_cast<std::uint8_t>((mask >> 1) & 1);
        out[i + 2] = static_cast<std::uint8_t>((mask >> 2) & 1);
        out[i + 3] = static_cast<std::uint8_t>((mask >> 3) & 1);
    }
    if (i < count)
        cone_visibility_scalar(sat_x, sat_y, sat_z, cos_half,
                               px + i, py + i, pz + i, pdot + i, count - i, out + i);
}

} // namespace satsel::kernels

#endif
