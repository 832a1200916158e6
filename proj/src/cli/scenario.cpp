#include "satsel/cli/scenario.hpp"

#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace satsel::cli {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

} // namespace

void ScenarioConfig::validate() const {
    if (horizon_steps < 1) throw std::invalid_argument("horizon must be at least one step");
    if (!(dt_seconds > 0.0)) throw std::invalid_argument("dt must be positive");
    if (point_count < 0) throw std::invalid_argument("point count must be nonnegative");
    if (!(cost_low >= 0.0 && cost_high >= cost_low))
        throw std::invalid_argument("cost interval must satisfy 0 <= low <= high");
    if (!(fov_half_angle_rad > 0.0 && fov_half_angle_rad < std::numbers::pi / 2.0))
        throw std::invalid_argument("fov half-angle must lie in (0, pi/2)");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be at least 1");
    if (algorithm_seeds.empty()) throw std::invalid_argument("need at least one seed");
    for (int r : r_values)
        if (r < 1 || r > constellation.total)
            throw std::invalid_argument("r values must lie in [1, |N|]");
}

ScenarioConfig parse_scenario_json(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    ScenarioConfig cfg;

    read_if(j, "scenario_seed", cfg.scenario_seed);

    if (j.contains("constellation")) {
        const auto& c = j.at("constellation");
        double incl_deg = cfg.constellation.inclination_rad / kDeg;
        read_if(c, "inclination_deg", incl_deg);
        cfg.constellation.inclination_rad = incl_deg * kDeg;
        read_if(c, "total", cfg.constellation.total);
        read_if(c, "planes", cfg.constellation.planes);
        read_if(c, "phasing", cfg.constellation.phasing);
        read_if(c, "altitude_km", cfg.constellation.altitude_km);
    }
    if (j.contains("fov")) {
        double half_deg = cfg.fov_half_angle_rad / kDeg;
        read_if(j.at("fov"), "half_angle_deg", half_deg);
        cfg.fov_half_angle_rad = half_deg * kDeg;
    }
    if (j.contains("grid")) read_if(j.at("grid"), "resolution_deg", cfg.grid_resolution_deg);
    if (j.contains("points")) {
        read_if(j.at("points"), "count", cfg.point_count);
        if (j.at("points").contains("seed"))
            cfg.points_seed = j.at("points").at("seed").get<std::uint64_t>();
    }
    if (j.contains("costs")) {
        read_if(j.at("costs"), "low", cfg.cost_low);
        read_if(j.at("costs"), "high", cfg.cost_high);
        if (j.at("costs").contains("seed"))
            cfg.costs_seed = j.at("costs").at("seed").get<std::uint64_t>();
    }
    if (j.contains("lorenz")) {
        const auto& l = j.at("lorenz");
        read_if(l, "kappa", cfg.lorenz.kappa);
        read_if(l, "sigma", cfg.lorenz.sigma);
        read_if(l, "rho", cfg.lorenz.rho);
        read_if(l, "beta", cfg.lorenz.beta);
        double q = cfg.lorenz.process_noise(0, 0);
        read_if(l, "process_noise_scale", q);
        cfg.lorenz.process_noise = q * Eigen::Matrix3d::Identity();
        read_if(l, "integrator_dt_s", cfg.lorenz.integrator_dt_s);
    }
    if (j.contains("ukf")) {
        const auto& u = j.at("ukf");
        read_if(u, "alpha", cfg.ukf.alpha);
        read_if(u, "beta", cfg.ukf.beta);
        read_if(u, "kappa", cfg.ukf.kappa);
        read_if(u, "max_variance", cfg.ukf.max_variance);
        read_if(u, "meas_noise_scale", cfg.meas_noise_scale);
        read_if(u, "init_cov_scale", cfg.init_cov_scale);
    }
    if (j.contains("time")) {
        read_if(j.at("time"), "dt_s", cfg.dt_seconds);
        read_if(j.at("time"), "horizon_steps", cfg.horizon_steps);
    }
    if (j.contains("algorithm")) {
        const auto& a = j.at("algorithm");
        read_if(a, "budgets", cfg.budgets);
        read_if(a, "coverage_fractions", cfg.coverage_fractions);
        read_if(a, "r_values", cfg.r_values);
        read_if(a, "epsilon", cfg.epsilon);
        read_if(a, "alpha", cfg.alpha);
        read_if(a, "seeds", cfg.algorithm_seeds);
        read_if(a, "include_entire_set", cfg.include_entire_set);
        read_if(a, "include_top_k", cfg.include_top_k);
    }
    if (j.contains("tasks")) {
        const auto& t = j.at("tasks");
        read_if(t, "sensing", cfg.sensing_tasks);
        read_if(t, "points_per_task", cfg.points_per_task);
        read_if(t, "coverage", cfg.include_coverage_task);
    }
    if (j.contains("output")) {
        const auto& o = j.at("output");
        read_if(o, "log_wall_time", cfg.log_wall_time);
        read_if(o, "export_visibility", cfg.export_visibility);
        read_if(o, "export_trajectories", cfg.export_trajectories);
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str());
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
    nlohmann::json j;
    j["scenario_seed"] = cfg.scenario_seed;
    j["constellation"] = {{"inclination_deg", cfg.constellation.inclination_rad / kDeg},
                          {"total", cfg.constellation.total},
                          {"planes", cfg.constellation.planes},
                          {"phasing", cfg.constellation.phasing},
                          {"altitude_km", cfg.constellation.altitude_km}};
    j["fov"] = {{"half_angle_deg", cfg.fov_half_angle_rad / kDeg}};
    j["grid"] = {{"resolution_deg", cfg.grid_resolution_deg}};
    j["points"] = {{"count", cfg.point_count}};
    if (cfg.points_seed) j["points"]["seed"] = *cfg.points_seed;
    j["costs"] = {{"low", cfg.cost_low}, {"high", cfg.cost_high}};
    if (cfg.costs_seed) j["costs"]["seed"] = *cfg.costs_seed;
    j["lorenz"] = {{"kappa", cfg.lorenz.kappa},
                   {"sigma", cfg.lorenz.sigma},
                   {"rho", cfg.lorenz.rho},
                   {"beta", cfg.lorenz.beta},
                   {"process_noise_scale", cfg.lorenz.process_noise(0, 0)},
                   {"integrator_dt_s", cfg.lorenz.integrator_dt_s}};
    j["ukf"] = {{"alpha", cfg.ukf.alpha},
                {"beta", cfg.ukf.beta},
                {"kappa", cfg.ukf.kappa},
                {"max_variance", cfg.ukf.max_variance},
                {"meas_noise_scale", cfg.meas_noise_scale},
                {"init_cov_scale", cfg.init_cov_scale}};
    j["time"] = {{"dt_s", cfg.dt_seconds}, {"horizon_steps", cfg.horizon_steps}};
    j["algorithm"] = {{"budgets", cfg.budgets},
                      {"coverage_fractions", cfg.coverage_fractions},
                      {"r_values", cfg.r_values},
                      {"epsilon", cfg.epsilon},
                      {"alpha", cfg.alpha},
                      {"seeds", cfg.algorithm_seeds},
                      {"include_entire_set", cfg.include_entire_set},
                      {"include_top_k", cfg.include_top_k}};
    j["tasks"] = {{"sensing", cfg.sensing_tasks},
                  {"points_per_task", cfg.points_per_task},
                  {"coverage", cfg.include_coverage_task}};
    j["output"] = {{"log_wall_time", cfg.log_wall_time},
                   {"export_visibility", cfg.export_visibility},
                   {"export_trajectories", cfg.export_trajectories}};
    return j.dump(2);
}

} // namespace satsel::cli
