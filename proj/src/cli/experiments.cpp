#include "satsel/cli/experiments.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "satsel/algorithms/greedy.hpp"
#include "satsel/algorithms/saturation.hpp"
#include "satsel/core/rng.hpp"
#include "satsel/dynest/ukf.hpp"
#include "satsel/objectives/combinators.hpp"
#include "satsel/objectives/coverage.hpp"
#include "satsel/objectives/mse.hpp"
#include "satsel/orbitsim/visibility.hpp"

namespace satsel::cli {

namespace {

using orbitsim::EarthGrid;
using orbitsim::SatelliteEphemeris;

class WallTimer {
public:
    explicit WallTimer(bool enabled) : enabled_(enabled) {
        if (enabled_) start_ = std::chrono::steady_clock::now();
    }
    double elapsed_ms() const {
        if (!enabled_) return 0.0;
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

CostModel draw_costs(const ScenarioConfig& cfg) {
    RngStream stream(cfg.costs_seed ? *cfg.costs_seed
                                    : derive_seed(cfg.scenario_seed, "costs"));
    std::vector<double> costs(static_cast<std::size_t>(cfg.constellation.total));
    for (double& c : costs) c = stream.uniform(cfg.cost_low, cfg.cost_high);
    return CostModel(std::move(costs));
}

std::vector<Eigen::Vector3d> draw_points(const ScenarioConfig& cfg, std::uint64_t group,
                                         int count) {
    const std::uint64_t base =
        cfg.points_seed ? *cfg.points_seed : derive_seed(cfg.scenario_seed, "points");
    RngStream stream(derive_seed(base, "group", group));
    return orbitsim::sample_surface_points(count, stream);
}

std::vector<Eigen::Vector3d> satellite_positions_ecef(const SatelliteEphemeris& eph,
                                                      double t_s) {
    std::vector<Eigen::Vector3d> out;
    out.reserve(static_cast<std::size_t>(eph.size()));
    for (int j = 0; j < eph.size(); ++j)
        out.push_back(orbitsim::eci_to_ecef(eph.position_eci(j, t_s), t_s));
    return out;
}

/// Which satellites see each Earth-fixed point at this step.
std::vector<BitVector> point_visibility(const std::vector<Eigen::Vector3d>& sats_ecef,
                                        const std::vector<Eigen::Vector3d>& points,
                                        double half_angle) {
    std::vector<BitVector> vis(points.size(), BitVector(sats_ecef.size()));
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::size_t j = 0; j < sats_ecef.size(); ++j)
            if (orbitsim::fov_contains(sats_ecef[j], points[p], half_angle))
                vis[p].set(j);
    return vis;
}

Eigen::Vector3d measurement_noise_draw(const ScenarioConfig& cfg, std::uint64_t replicate,
                                       std::uint64_t packed, const Eigen::Matrix3d& noise_sqrt) {
    RngStream stream(derive_seed(cfg.scenario_seed, "meas", replicate, packed));
    const Eigen::Vector3d xi(stream.normal(), stream.normal(), stream.normal());
    return noise_sqrt * xi;
}

struct PointFilterBank {
    std::vector<Eigen::Vector3d> truth;
    std::vector<dynest::UkfBelief> beliefs;
};

PointFilterBank init_bank(const ScenarioConfig& cfg, std::uint64_t replicate,
                          std::uint64_t group, int count) {
    PointFilterBank bank;
    RngStream truth_init(derive_seed(cfg.scenario_seed, "truth-init", replicate, group));
    RngStream belief_init(derive_seed(cfg.scenario_seed, "belief-init", replicate, group));
    for (int p = 0; p < count; ++p) {
        Eigen::Vector3d x0 = Eigen::Vector3d::Ones() +
                             Eigen::Vector3d(truth_init.normal(), truth_init.normal(),
                                             truth_init.normal());
        bank.truth.push_back(x0);
        dynest::UkfBelief b;
        b.mean = x0 + Eigen::Vector3d(belief_init.normal(), belief_init.normal(),
                                      belief_init.normal());
        b.cov = cfg.init_cov_scale * Eigen::Matrix3d::Identity();
        bank.beliefs.push_back(b);
    }
    return bank;
}

double realized_sq_error(const PointFilterBank& bank) {
    double sum = 0.0;
    for (std::size_t p = 0; p < bank.truth.size(); ++p)
        sum += (bank.beliefs[p].mean - bank.truth[p]).squaredNorm();
    return sum;
}

double total_cov_trace(const PointFilterBank& bank) {
    double sum = 0.0;
    for (const auto& b : bank.beliefs) sum += b.cov.trace();
    return sum;
}

std::string series_label(const std::string& algorithm, int r, double constraint) {
    std::ostringstream os;
    os << algorithm << "[r=" << r << ";c=" << constraint << "]";
    return os.str();
}

void append_plot(std::map<std::string, PlotSeries>& plots, const std::string& label, int step,
                 double value) {
    PlotSeries& s = plots[label];
    if (s.label.empty()) s.label = label;
    s.steps.push_back(step);
    s.values.push_back(value);
}

std::vector<PlotSeries> plot_vector(std::map<std::string, PlotSeries>&& plots) {
    std::vector<PlotSeries> out;
    out.reserve(plots.size());
    for (auto& [label, series] : plots) out.push_back(std::move(series));
    return out;
}

} // namespace

RunReport run_experiment_a(const ScenarioConfig& cfg) {
    cfg.validate();
    const auto ephemeris = SatelliteEphemeris::walker_delta(cfg.constellation);
    const int n = ephemeris.size();
    const CostModel costs = draw_costs(cfg);
    const auto points = draw_points(cfg, 0, cfg.point_count);
    const Eigen::Matrix3d meas_noise = cfg.meas_noise_scale * Eigen::Matrix3d::Identity();
    const Eigen::Matrix3d noise_sqrt = dynest::psd_sqrt(meas_noise);

    struct Variant {
        enum class Kind { entire_set, top_k, mrg } kind;
        std::string name;
        double budget = 0.0;
        int r = 0;
        std::size_t budget_index = 0;
        std::size_t r_index = 0;
    };
    std::vector<Variant> variants;
    if (cfg.include_entire_set)
        variants.push_back({Variant::Kind::entire_set, "entire-set", 0.0, n, 0, 0});
    for (std::size_t bi = 0; bi < cfg.budgets.size(); ++bi) {
        if (cfg.include_top_k)
            variants.push_back(
                {Variant::Kind::top_k, "top-k", cfg.budgets[bi], n, bi, 0});
        for (std::size_t ri = 0; ri < cfg.r_values.size(); ++ri)
            variants.push_back({Variant::Kind::mrg, "mrg", cfg.budgets[bi],
                                cfg.r_values[ri], bi, ri});
    }

    RunReport report;
    report.experiment = "experiment_a";
    report.element_costs.assign(costs.costs().begin(), costs.costs().end());
    std::map<std::string, PlotSeries> mse_plots;
    std::map<std::string, PlotSeries> trace_plots;
    std::string trajectory_csv =
        "step,point,variant,truth_x,truth_y,truth_z,mean_x,mean_y,mean_z,cov_trace\n";
    std::string visibility_csv;

    for (std::size_t rep = 0; rep < cfg.algorithm_seeds.size(); ++rep) {
        const std::uint64_t replicate = cfg.algorithm_seeds[rep];
        const bool first_rep = rep == 0;

        PointFilterBank shared = init_bank(cfg, replicate, 0, cfg.point_count);
        std::vector<PointFilterBank> banks(variants.size(), shared);

        std::vector<RngStream> truth_streams;
        truth_streams.reserve(points.size());
        for (std::size_t p = 0; p < points.size(); ++p)
            truth_streams.emplace_back(
                derive_seed(cfg.scenario_seed, "truth", replicate, p));

        for (int step = 1; step <= cfg.horizon_steps; ++step) {
            const double t = step * cfg.dt_seconds;
            const auto sats_ecef = satellite_positions_ecef(ephemeris, t);

            // ground truth advances once per step, shared by every variant
            for (std::size_t p = 0; p < points.size(); ++p)
                shared.truth[p] = dynest::advance_truth(shared.truth[p], cfg.lorenz,
                                                        cfg.dt_seconds, truth_streams[p]);

            const auto visibility = point_visibility(sats_ecef, points, cfg.fov_half_angle_rad);
            if (cfg.export_visibility && first_rep) {
                if (visibility_csv.empty()) {
                    visibility_csv = "step,satellite";
                    for (std::size_t p = 0; p < points.size(); ++p)
                        visibility_csv += ",point" + std::to_string(p);
                    visibility_csv += '\n';
                }
                for (int j = 0; j < n; ++j) {
                    visibility_csv += std::to_string(step) + ',' + std::to_string(j);
                    for (std::size_t p = 0; p < points.size(); ++p)
                        visibility_csv +=
                            visibility[p].test(static_cast<std::size_t>(j)) ? ",1" : ",0";
                    visibility_csv += '\n';
                }
            }

            for (std::size_t vi = 0; vi < variants.size(); ++vi) {
                const Variant& variant = variants[vi];
                PointFilterBank& bank = banks[vi];
                bank.truth = shared.truth;

                MseSnapshot snapshot;
                snapshot.ground_size = n;
                snapshot.meas_noise = meas_noise;
                for (std::size_t p = 0; p < points.size(); ++p) {
                    bank.beliefs[p] =
                        dynest::ukf_predict(bank.beliefs[p], cfg.lorenz, cfg.dt_seconds,
                                            cfg.ukf);
                    snapshot.prior_cov.push_back(bank.beliefs[p].cov);
                    snapshot.observers.push_back(visibility[p]);
                }
                const MseReductionObjective oracle(snapshot);

                RunRow row;
                row.step = step;
                row.algorithm = variant.name;
                row.r = variant.r;
                row.seed = replicate;

                WallTimer timer(cfg.log_wall_time);
                switch (variant.kind) {
                    case Variant::Kind::entire_set: {
                        row.selection = GroundSet(n).all();
                        row.objective = oracle.evaluate(row.selection);
                        row.oracle_calls = 1;
                        row.kind = ConstraintKind::none;
                        break;
                    }
                    case Variant::Kind::top_k: {
                        SelectionTrace tr = top_k_baseline(oracle, costs, variant.budget);
                        row.selection = std::move(tr.selected);
                        row.objective = tr.value;
                        row.oracle_calls = tr.oracle_call_count;
                        row.constraint = variant.budget;
                        row.kind = ConstraintKind::budget;
                        row.constraint_limit = variant.budget;
                        break;
                    }
                    case Variant::Kind::mrg: {
                        MrgConfig mc;
                        mc.budget = variant.budget;
                        mc.epsilon = cfg.epsilon;
                        mc.sample_size = variant.r;
                        mc.seed = derive_seed(replicate, "mrg-step", variant.budget_index,
                                              variant.r_index,
                                              static_cast<std::uint64_t>(step));
                        SelectionTrace tr = mrg(oracle, costs, mc);
                        row.selection = std::move(tr.selected);
                        row.objective = tr.value;
                        row.oracle_calls = tr.oracle_call_count;
                        row.constraint = variant.budget;
                        row.kind = ConstraintKind::budget;
                        row.constraint_limit = variant.budget;
                        break;
                    }
                }
                row.wall_ms = timer.elapsed_ms();
                row.cost = costs.total_cost(row.selection);
                row.size = static_cast<int>(row.selection.size());

                // fuse the selected observations; unobserved points keep the
                // predicted belief
                for (std::size_t p = 0; p < points.size(); ++p) {
                    std::vector<Eigen::Vector3d> measurements;
                    for (int j : row.selection) {
                        if (!visibility[p].test(static_cast<std::size_t>(j))) continue;
                        const std::uint64_t packed =
                            (static_cast<std::uint64_t>(step) << 32) |
                            (static_cast<std::uint64_t>(p) << 16) |
                            static_cast<std::uint64_t>(j);
                        measurements.push_back(
                            bank.truth[p] +
                            measurement_noise_draw(cfg, replicate, packed, noise_sqrt));
                    }
                    bank.beliefs[p] = dynest::ukf_update(bank.beliefs[p], measurements,
                                                         meas_noise, cfg.ukf);
                }

                row.mse_realized = realized_sq_error(bank);
                row.mse_trace = total_cov_trace(bank);
                const std::string label =
                    series_label(variant.name, variant.r, variant.budget);
                if (first_rep) {
                    append_plot(mse_plots, label, step, row.mse_realized);
                    append_plot(trace_plots, label, step, row.mse_trace);
                    if (cfg.export_trajectories) {
                        for (std::size_t p = 0; p < points.size(); ++p) {
                            const auto& b = bank.beliefs[p];
                            trajectory_csv += std::to_string(step) + ',' +
                                              std::to_string(p) + ',' + label + ',' +
                                              format_double(bank.truth[p].x()) + ',' +
                                              format_double(bank.truth[p].y()) + ',' +
                                              format_double(bank.truth[p].z()) + ',' +
                                              format_double(b.mean.x()) + ',' +
                                              format_double(b.mean.y()) + ',' +
                                              format_double(b.mean.z()) + ',' +
                                              format_double(b.cov.trace()) + '\n';
                        }
                    }
                }
                report.rows.push_back(std::move(row));
            }
        }
    }

    report.attachments.push_back(
        {"experiment_a_plot_mse.csv", render_plot_csv(plot_vector(std::move(mse_plots)))});
    report.attachments.push_back({"experiment_a_plot_cov_trace.csv",
                                  render_plot_csv(plot_vector(std::move(trace_plots)))});
    if (cfg.export_trajectories)
        report.attachments.push_back({"experiment_a_trajectories.csv", trajectory_csv});
    if (cfg.export_visibility && !visibility_csv.empty())
        report.attachments.push_back({"experiment_a_visibility.csv", visibility_csv});
    return report;
}

RunReport run_experiment_b(const ScenarioConfig& cfg) {
    cfg.validate();
    const auto ephemeris = SatelliteEphemeris::walker_delta(cfg.constellation);
    const int n = ephemeris.size();
    const CostModel costs = draw_costs(cfg);
    const EarthGrid grid = EarthGrid::build(cfg.grid_resolution_deg);

    RunReport report;
    report.experiment = "experiment_b";
    report.element_costs.assign(costs.costs().begin(), costs.costs().end());
    std::map<std::string, PlotSeries> cost_plots;
    std::map<std::string, PlotSeries> fraction_plots;
    std::string visibility_csv;

    for (std::size_t rep = 0; rep < cfg.algorithm_seeds.size(); ++rep) {
        const std::uint64_t replicate = cfg.algorithm_seeds[rep];
        const bool first_rep = rep == 0;

        for (int step = 1; step <= cfg.horizon_steps; ++step) {
            const double t = step * cfg.dt_seconds;

            std::vector<BitVector> masks;
            masks.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                masks.push_back(orbitsim::visible_cell_mask(ephemeris, j, grid,
                                                            cfg.fov_half_angle_rad, t));
            const WeightedCoverageObjective oracle(grid.cell_areas_km2(), masks);
            const double full_area = oracle.evaluate(GroundSet(n).all());

            if (cfg.export_visibility && first_rep && step == 1) {
                visibility_csv = "step,satellite";
                for (std::size_t c = 0; c < grid.cell_count(); ++c)
                    visibility_csv += ",cell" + std::to_string(c);
                visibility_csv += '\n';
                for (int j = 0; j < n; ++j) {
                    visibility_csv += std::to_string(step) + ',' + std::to_string(j);
                    for (std::size_t c = 0; c < grid.cell_count(); ++c)
                        visibility_csv += masks[static_cast<std::size_t>(j)].test(c) ? ",1" : ",0";
                    visibility_csv += '\n';
                }
            }

            for (std::size_t fi = 0; fi < cfg.coverage_fractions.size(); ++fi) {
                const double fraction = cfg.coverage_fractions[fi];
                const double threshold = fraction * full_area;
                for (std::size_t ri = 0; ri < cfg.r_values.size(); ++ri) {
                    DrgConfig dc;
                    dc.threshold = threshold;
                    dc.epsilon = cfg.epsilon;
                    dc.sample_size = cfg.r_values[ri];
                    dc.seed = derive_seed(replicate, "drg-step", fi, ri,
                                          static_cast<std::uint64_t>(step));

                    WallTimer timer(cfg.log_wall_time);
                    SelectionTrace tr = drg(oracle, costs, dc);
                    const double wall = timer.elapsed_ms();

                    RunRow row;
                    row.step = step;
                    row.algorithm = "drg";
                    row.r = cfg.r_values[ri];
                    row.constraint = fraction;
                    row.objective = tr.value;
                    row.cost = tr.cost;
                    row.size = static_cast<int>(tr.selected.size());
                    row.oracle_calls = tr.oracle_call_count;
                    row.wall_ms = wall;
                    row.seed = replicate;
                    row.selection = std::move(tr.selected);
                    row.kind = ConstraintKind::threshold;
                    row.constraint_limit = threshold;
                    row.constraint_slack = default_threshold_tolerance(threshold);

                    const std::string label = series_label("drg", row.r, fraction);
                    if (first_rep) {
                        append_plot(cost_plots, label, step, row.cost);
                        append_plot(fraction_plots, label, step,
                                    full_area > 0.0 ? row.objective / full_area : 0.0);
                    }
                    report.rows.push_back(std::move(row));
                }
            }
        }
    }

    report.attachments.push_back(
        {"experiment_b_plot_cost.csv", render_plot_csv(plot_vector(std::move(cost_plots)))});
    report.attachments.push_back(
        {"experiment_b_plot_coverage_fraction.csv",
         render_plot_csv(plot_vector(std::move(fraction_plots)))});
    if (!visibility_csv.empty())
        report.attachments.push_back({"experiment_b_visibility.csv", visibility_csv});
    return report;
}

RunReport run_experiment_c(const ScenarioConfig& cfg) {
    cfg.validate();
    const auto ephemeris = SatelliteEphemeris::walker_delta(cfg.constellation);
    const int n = ephemeris.size();
    const CostModel costs = draw_costs(cfg);
    const EarthGrid grid = EarthGrid::build(cfg.grid_resolution_deg);
    const Eigen::Matrix3d meas_noise = cfg.meas_noise_scale * Eigen::Matrix3d::Identity();
    const Eigen::Matrix3d noise_sqrt = dynest::psd_sqrt(meas_noise);

    const int n_sensing = cfg.sensing_tasks;
    std::vector<std::vector<Eigen::Vector3d>> task_points;
    for (int task = 0; task < n_sensing; ++task)
        task_points.push_back(
            draw_points(cfg, static_cast<std::uint64_t>(task + 1), cfg.points_per_task));

    struct Variant {
        double budget;
        int r;
        std::size_t budget_index;
        std::size_t r_index;
    };
    std::vector<Variant> variants;
    for (std::size_t bi = 0; bi < cfg.budgets.size(); ++bi)
        for (std::size_t ri = 0; ri < cfg.r_values.size(); ++ri)
            variants.push_back({cfg.budgets[bi], cfg.r_values[ri], bi, ri});

    RunReport report;
    report.experiment = "experiment_c";
    report.element_costs.assign(costs.costs().begin(), costs.costs().end());
    std::map<std::string, PlotSeries> utility_plots;

    for (std::size_t rep = 0; rep < cfg.algorithm_seeds.size(); ++rep) {
        const std::uint64_t replicate = cfg.algorithm_seeds[rep];
        const bool first_rep = rep == 0;

        std::vector<PointFilterBank> shared_banks;
        for (int task = 0; task < n_sensing; ++task)
            shared_banks.push_back(init_bank(cfg, replicate,
                                             static_cast<std::uint64_t>(task + 1),
                                             cfg.points_per_task));
        std::vector<std::vector<PointFilterBank>> variant_banks(
            variants.size(), shared_banks);

        std::vector<std::vector<RngStream>> truth_streams(
            static_cast<std::size_t>(n_sensing));
        for (int task = 0; task < n_sensing; ++task)
            for (int p = 0; p < cfg.points_per_task; ++p)
                truth_streams[static_cast<std::size_t>(task)].emplace_back(derive_seed(
                    cfg.scenario_seed, "task-truth", replicate,
                    static_cast<std::uint64_t>(task) * 1024 + static_cast<std::uint64_t>(p)));

        for (int step = 1; step <= cfg.horizon_steps; ++step) {
            const double t = step * cfg.dt_seconds;
            const auto sats_ecef = satellite_positions_ecef(ephemeris, t);

            for (int task = 0; task < n_sensing; ++task)
                for (int p = 0; p < cfg.points_per_task; ++p)
                    shared_banks[static_cast<std::size_t>(task)].truth[static_cast<std::size_t>(p)] =
                        dynest::advance_truth(
                            shared_banks[static_cast<std::size_t>(task)]
                                .truth[static_cast<std::size_t>(p)],
                            cfg.lorenz, cfg.dt_seconds,
                            truth_streams[static_cast<std::size_t>(task)]
                                         [static_cast<std::size_t>(p)]);

            std::vector<std::vector<BitVector>> task_visibility;
            for (int task = 0; task < n_sensing; ++task)
                task_visibility.push_back(point_visibility(
                    sats_ecef, task_points[static_cast<std::size_t>(task)],
                    cfg.fov_half_angle_rad));

            std::vector<BitVector> cell_masks;
            if (cfg.include_coverage_task) {
                cell_masks.reserve(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j)
                    cell_masks.push_back(orbitsim::visible_cell_mask(
                        ephemeris, j, grid, cfg.fov_half_angle_rad, t));
            }

            for (std::size_t vi = 0; vi < variants.size(); ++vi) {
                const Variant& variant = variants[vi];
                auto& banks = variant_banks[vi];

                std::vector<MseSnapshot> snapshots(static_cast<std::size_t>(n_sensing));
                std::vector<MseReductionObjective> sensing_oracles;
                sensing_oracles.reserve(static_cast<std::size_t>(n_sensing));
                for (int task = 0; task < n_sensing; ++task) {
                    auto& bank = banks[static_cast<std::size_t>(task)];
                    bank.truth = shared_banks[static_cast<std::size_t>(task)].truth;
                    MseSnapshot& snap = snapshots[static_cast<std::size_t>(task)];
                    snap.ground_size = n;
                    snap.meas_noise = meas_noise;
                    for (int p = 0; p < cfg.points_per_task; ++p) {
                        auto& belief = bank.beliefs[static_cast<std::size_t>(p)];
                        belief = dynest::ukf_predict(belief, cfg.lorenz, cfg.dt_seconds,
                                                     cfg.ukf);
                        snap.prior_cov.push_back(belief.cov);
                        snap.observers.push_back(
                            task_visibility[static_cast<std::size_t>(task)]
                                           [static_cast<std::size_t>(p)]);
                    }
                }
                for (int task = 0; task < n_sensing; ++task)
                    sensing_oracles.emplace_back(snapshots[static_cast<std::size_t>(task)]);

                std::optional<WeightedCoverageObjective> coverage_oracle;
                if (cfg.include_coverage_task)
                    coverage_oracle.emplace(grid.cell_areas_km2(), cell_masks);

                // normalize every task by its full-set utility at this step
                std::vector<NormalizedObjective> normalized;
                normalized.reserve(static_cast<std::size_t>(n_sensing) + 1);
                for (const auto& oracle : sensing_oracles)
                    normalized.emplace_back(oracle, n);
                if (coverage_oracle) normalized.emplace_back(*coverage_oracle, n);
                std::vector<const SetFunctionOracle*> objectives;
                for (const auto& o : normalized) objectives.push_back(&o);

                WssaConfig wc;
                wc.budget = variant.budget;
                wc.alpha = cfg.alpha;
                wc.epsilon = cfg.epsilon;
                wc.sample_size = variant.r;
                wc.seed = derive_seed(replicate, "wssa-step", variant.budget_index,
                                      variant.r_index, static_cast<std::uint64_t>(step));

                WallTimer timer(cfg.log_wall_time);
                WssaResult result = random_wssa(objectives, costs, wc);
                const double wall = timer.elapsed_ms();

                RunRow row;
                row.step = step;
                row.algorithm = variant.r >= n ? "ssa" : "random-wssa";
                row.r = variant.r;
                row.constraint = variant.budget;
                row.objective = result.min_objective;
                row.cost = result.cost;
                row.size = static_cast<int>(result.selected.size());
                row.oracle_calls = result.oracle_call_count;
                row.wall_ms = wall;
                row.seed = replicate;
                row.selection = result.selected;
                row.kind = ConstraintKind::budget;
                row.constraint_limit = cfg.alpha * variant.budget;
                row.k_achieved = result.k_achieved;
                row.final_interval_width = result.final_interval_width;
                row.outer_iterations = result.outer_iterations;

                for (int task = 0; task < n_sensing; ++task) {
                    auto& bank = banks[static_cast<std::size_t>(task)];
                    for (int p = 0; p < cfg.points_per_task; ++p) {
                        std::vector<Eigen::Vector3d> measurements;
                        for (int j : result.selected) {
                            if (!task_visibility[static_cast<std::size_t>(task)]
                                                [static_cast<std::size_t>(p)]
                          .test(static_cast<std::size_t>(j)))
                                continue;
                            const std::uint64_t packed =
                                (((static_cast<std::uint64_t>(step) * 8 +
                                   static_cast<std::uint64_t>(task)) *
                                      1024 +
                                  static_cast<std::uint64_t>(p)) *
                                 1024) +
                                static_cast<std::uint64_t>(j);
                            measurements.push_back(
                                bank.truth[static_cast<std::size_t>(p)] +
                                measurement_noise_draw(cfg, replicate, packed, noise_sqrt));
                        }
                        bank.beliefs[static_cast<std::size_t>(p)] =
                            dynest::ukf_update(bank.beliefs[static_cast<std::size_t>(p)],
                                               measurements, meas_noise, cfg.ukf);
                    }
                }

                if (first_rep)
                    append_plot(utility_plots,
                                series_label(row.algorithm, row.r, variant.budget), step,
                                row.objective);
                report.rows.push_back(std::move(row));
            }
        }
    }

    // figure-style output is smoothed; raw rows stay untouched
    report.attachments.push_back(
        {"experiment_c_plot_utility.csv",
         render_plot_csv(plot_vector(std::move(utility_plots)), 10)});
    return report;
}

} // namespace satsel::cli
