#include "satsel/core/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satsel {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
    if (n == 1) return 0;
    const int bits = 64 - std::countl_zero(n - 1);
    const std::uint64_t mask = (bits == 64) ? ~0ULL : ((1ULL << bits) - 1);
    for (;;) {
        std::uint64_t v = next_u64() & mask;
        if (v < n) return v;
    }
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // open-interval draw keeps log() finite
    double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = mix64(base);
    for (char ch : tag)
        h = mix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(ch)));
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return mix64(h ^ c);
}

} // namespace satsel
