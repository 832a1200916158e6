#pragma once

#include "satsel/cli/report.hpp"
#include "satsel/cli/scenario.hpp"

namespace satsel::cli {

/// Atmospheric monitoring: per step the budgeted selectors pick observing
/// satellites, the unscented filters fuse the selected measurements, and the
/// report logs objective values and realized/predicted estimation error.
RunReport run_experiment_a(const ScenarioConfig& config);

/// Minimum ground coverage: per step the threshold is a fraction of the full
/// constellation's coverage at that step and DRG minimizes selection cost.
RunReport run_experiment_b(const ScenarioConfig& config);

/// Multi-task robustness: several normalized sensing objectives plus a
/// normalized coverage objective, maximin-optimized by the randomized
/// saturation search under a budget.
RunReport run_experiment_c(const ScenarioConfig& config);

} // namespace satsel::cli
