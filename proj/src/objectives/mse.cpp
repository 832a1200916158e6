#include "satsel/objectives/mse.hpp"

#include <bit>
#include <stdexcept>

namespace satsel {

MseReductionObjective::MseReductionObjective(const MseSnapshot& snapshot)
    : snapshot_(&snapshot) {
    if (snapshot.prior_cov.size() != snapshot.observers.size())
        throw std::invalid_argument("snapshot point counts disagree");
    if (snapshot.ground_size < 1)
        throw std::invalid_argument("snapshot needs a positive ground size");

    Eigen::LLT<Eigen::Matrix3d> noise_llt(snapshot.meas_noise);
    if (noise_llt.info() != Eigen::Success)
        throw std::invalid_argument("measurement noise must be positive definite");
    const Eigen::Matrix3d noise_info = noise_llt.solve(Eigen::Matrix3d::Identity());

    trace_by_count_.resize(snapshot.prior_cov.size());
    for (std::size_t p = 0; p < snapshot.prior_cov.size(); ++p) {
        const Eigen::Matrix3d& prior = snapshot.prior_cov[p];
        Eigen::LLT<Eigen::Matrix3d> prior_llt(prior);
        if (prior_llt.info() != Eigen::Success)
            throw std::invalid_argument("prior covariance must be positive definite");
        const Eigen::Matrix3d prior_info = prior_llt.solve(Eigen::Matrix3d::Identity());

        const auto max_count = snapshot.observers[p].count();
        auto& traces = trace_by_count_[p];
        traces.reserve(max_count + 1);
        traces.push_back(prior.trace());
        for (std::size_t m = 1; m <= max_count; ++m) {
            Eigen::Matrix3d info = prior_info + static_cast<double>(m) * noise_info;
            Eigen::Matrix3d post = info.llt().solve(Eigen::Matrix3d::Identity());
            traces.push_back(post.trace());
        }
    }
}

double MseReductionObjective::posterior_trace(int point, int observer_count) const {
    const auto& traces = trace_by_count_.at(static_cast<std::size_t>(point));
    return traces.at(static_cast<std::size_t>(observer_count));
}

double MseReductionObjective::evaluate(std::span<const int> subset) const {
    // selection mask once, then per-point observer intersections
    BitVector selected(static_cast<std::size_t>(snapshot_->ground_size));
    for (int j : subset) {
        if (j < 0 || j >= snapshot_->ground_size)
            throw std::out_of_range("satellite index out of range");
        selected.set(static_cast<std::size_t>(j));
    }

    double reduction = 0.0;
    for (std::size_t p = 0; p < snapshot_->observers.size(); ++p) {
        const auto& obs_words = snapshot_->observers[p].words();
        const auto& sel_words = selected.words();
        std::size_t m = 0;
        for (std::size_t w = 0; w < obs_words.size(); ++w)
            m += static_cast<std::size_t>(std::popcount(obs_words[w] & sel_words[w]));
        const auto& traces = trace_by_count_[p];
        reduction += traces.front() - traces[m];
    }
    return reduction;
}

} // namespace satsel
