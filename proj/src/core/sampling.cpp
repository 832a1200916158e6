#include "satsel/core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace satsel {

int compute_sample_bound_U(const CostModel& costs, double budget) {
    if (!(budget > 0.0)) throw std::invalid_argument("budget must be positive");
    double prefix = 0.0;
    auto sorted = costs.sorted_costs();
    for (int u = 0; u < costs.size(); ++u) {
        prefix += sorted[static_cast<std::size_t>(u)];
        if (prefix >= budget) return u + 1;
    }
    return costs.size();
}

int sample_size(int n_ground, int U, double epsilon) {
    if (n_ground < 1) throw std::invalid_argument("ground set must be nonempty");
    if (U < 1 || U > n_ground) throw std::invalid_argument("U must lie in [1, |N|]");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    double raw = (static_cast<double>(n_ground) / static_cast<double>(U)) *
                 std::log(1.0 / epsilon);
    int r = static_cast<int>(std::ceil(raw));
    return std::clamp(r, 1, n_ground);
}

ElementSet sample_without_replacement(std::span<const int> candidates, int r, RngStream& rng) {
    if (candidates.empty()) throw std::invalid_argument("candidate set is empty");
    if (r < 1) throw std::invalid_argument("sample size must be at least 1");
    const int n = static_cast<int>(candidates.size());
    if (r >= n) return ElementSet(candidates.begin(), candidates.end());

    ElementSet pool(candidates.begin(), candidates.end());
    for (int i = 0; i < r; ++i) {
        auto j = static_cast<std::size_t>(i) +
                 rng.uniform_below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(r));
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace satsel
