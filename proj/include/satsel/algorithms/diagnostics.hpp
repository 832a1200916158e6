#pragma once

#include <vector>

#include "satsel/algorithms/greedy.hpp"
#include "satsel/core/oracle.hpp"
#include "satsel/core/types.hpp"

namespace satsel {

/// Exact weak-submodularity constant by enumerating every (S, T, j) with
/// S ⊆ T ⊂ N and j outside T. Ratios follow the conventions 0/0 -> 0 and
/// x/0 -> +inf for x > 0 (reported as an unbounded constant). Guarded to
/// |N| <= 12.
double estimate_wsc(const SetFunctionOracle& oracle, const GroundSet& ground);

/// Per-accepted-iteration quality ratios of one randomized-greedy run against
/// a shadow full-search greedy: eta = (sampled best ratio) / (global best
/// ratio). Increments are successive differences within the run, the raw
/// material for the martingale-drift check.
struct EtaDiagnostic {
    std::vector<double> etas;
    std::vector<double> increments;
    double mean = 0.0;
    double std_error = 0.0;
};

EtaDiagnostic eta_diagnostic(const SetFunctionOracle& oracle, const CostModel& costs,
                             const MrgConfig& config);

/// Aggregates eta realizations over several seeded runs and returns the
/// conservative estimate mean - one standard error, clamped to (0, 1].
struct MuEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    double conservative = 0.0;
    std::size_t samples = 0;
};

MuEstimate estimate_mu(const SetFunctionOracle& oracle, const CostModel& costs,
                       MrgConfig config, int runs);

} // namespace satsel
