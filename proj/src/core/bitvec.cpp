#include "satsel/core/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace satsel {

BitVector& BitVector::operator|=(const BitVector& other) {
    if (other.n_bits_ != n_bits_) throw std::invalid_argument("bit vector size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

std::size_t BitVector::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

double BitVector::weighted_sum(const std::vector<double>& weights) const {
    double sum = 0.0;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
            int bit = std::countr_zero(w);
            sum += weights[(wi << 6) + static_cast<std::size_t>(bit)];
            w &= w - 1;
        }
    }
    return sum;
}

std::vector<int> BitVector::to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<int>((wi << 6) + static_cast<std::size_t>(bit)));
            w &= w - 1;
        }
    }
    return out;
}

} // namespace satsel
