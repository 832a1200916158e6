#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satsel/dynest/lorenz.hpp"
#include "satsel/dynest/ukf.hpp"
#include "satsel/orbitsim/walker.hpp"

namespace satsel::cli {

/// Everything a simulation run needs. Scenario geometry (points, costs) is
/// seeded independently of the per-replicate noise and algorithm sampling,
/// so sweeping algorithm seeds leaves the scenario fixed.
struct ScenarioConfig {
    std::uint64_t scenario_seed = 42;

    orbitsim::WalkerDeltaConfig constellation{
        .inclination_rad = 60.0 * 3.14159265358979323846 / 180.0,
        .total = 240,
        .planes = 12,
        .phasing = 1,
        .altitude_km = 2000.0,
    };
    double fov_half_angle_rad = 3.14159265358979323846 / 6.0;
    int grid_resolution_deg = 2;

    int point_count = 25;
    /// Defaults to a stream derived from scenario_seed.
    std::optional<std::uint64_t> points_seed;
    double cost_low = 1.0;
    double cost_high = 2.0;
    std::optional<std::uint64_t> costs_seed;

    dynest::LorenzParams lorenz;
    dynest::UkfParams ukf;
    double meas_noise_scale = 2.0;
    double init_cov_scale = 5.0;

    double dt_seconds = 60.0;
    int horizon_steps = 100;

    // algorithm block
    std::vector<double> budgets{25.0, 50.0, 75.0, 100.0};
    std::vector<double> coverage_fractions{0.5, 0.7, 0.9};
    std::vector<int> r_values{60, 120, 180, 240};
    double epsilon = 0.01;
    double alpha = 1.0;
    std::vector<std::uint64_t> algorithm_seeds{1, 2, 3, 4, 5};
    bool include_entire_set = true;
    bool include_top_k = true;

    // multi-task block
    int sensing_tasks = 5;
    int points_per_task = 5;
    bool include_coverage_task = true;

    // output block
    bool log_wall_time = true;
    bool export_visibility = false;
    bool export_trajectories = false;

    void validate() const;
};

ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario_json(const std::string& json_text);
std::string scenario_to_json(const ScenarioConfig& config);

} // namespace satsel::cli
