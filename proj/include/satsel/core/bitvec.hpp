#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace satsel {

/// Fixed-size bit vector backed by 64-bit words. Used for coverage masks and
/// visibility rows where set unions are word-wise ORs.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n_bits)
        : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

    std::size_t size() const { return n_bits_; }
    bool empty_bits() const { return count() == 0; }

    void set(std::size_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    BitVector& operator|=(const BitVector& other);
    bool operator==(const BitVector& other) const = default;

    std::size_t count() const;

    /// Sum of weights[i] over set bits i.
    double weighted_sum(const std::vector<double>& weights) const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::vector<int> to_indices() const;

private:
    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace satsel
