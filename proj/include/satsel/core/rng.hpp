#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace satsel {

/// Deterministic pseudo-random stream. One stream has one owner; replaying
/// the same seed and call sequence reproduces the draws exactly, so the
/// distribution transforms are implemented here rather than taken from
/// <random> (whose distributions are implementation-defined).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    /// Unbiased draw from {0, ..., n-1} via bitmask rejection.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01();

    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller (pairs cached).
    double normal();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Derives an independent named substream seed from a base seed. Used to keep
/// scenario randomness (points, costs, noise) separate from algorithm
/// sampling randomness.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t a = 0, std::uint64_t b = 0, std::uint64_t c = 0);

} // namespace satsel
