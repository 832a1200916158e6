// Command-line front end: experiment runners plus the small analysis tools
// (WSC estimation, bound evaluation, eta diagnostics) on instances described
// by a JSON file.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "satsel/algorithms/bounds.hpp"
#include "satsel/algorithms/diagnostics.hpp"
#include "satsel/cli/experiments.hpp"
#include "satsel/cli/report.hpp"
#include "satsel/cli/scenario.hpp"
#include "satsel/objectives/coverage.hpp"

namespace {

using satsel::cli::ScenarioConfig;

ScenarioConfig load_or_default(const std::string& config_path) {
    if (config_path.empty()) return ScenarioConfig{};
    return satsel::cli::load_scenario(config_path);
}

/// Modular set function: the sum of per-element weights.
class ModularOracle final : public satsel::SetFunctionOracle {
public:
    explicit ModularOracle(std::vector<double> weights) : weights_(std::move(weights)) {}
    double evaluate(std::span<const int> subset) const override {
        double sum = 0.0;
        for (int j : subset) sum += weights_.at(static_cast<std::size_t>(j));
        return sum;
    }
    bool is_submodular() const override { return true; }

private:
    std::vector<double> weights_;
};

struct Instance {
    std::unique_ptr<satsel::SetFunctionOracle> oracle;
    std::vector<double> costs;
    int elements = 0;
};

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const nlohmann::json j = nlohmann::json::parse(buf.str());

    Instance inst;
    const std::string type = j.at("type").get<std::string>();
    if (type == "modular") {
        auto weights = j.at("weights").get<std::vector<double>>();
        inst.elements = static_cast<int>(weights.size());
        inst.oracle = std::make_unique<ModularOracle>(std::move(weights));
    } else if (type == "coverage") {
        auto item_weights = j.at("item_weights").get<std::vector<double>>();
        auto covers = j.at("covers").get<std::vector<std::vector<int>>>();
        inst.elements = static_cast<int>(covers.size());
        inst.oracle = std::make_unique<satsel::WeightedCoverageObjective>(
            std::move(item_weights), covers);
    } else if (type == "random-coverage") {
        const int elements = j.at("elements").get<int>();
        const int items = j.value("items", 2 * elements);
        const std::uint64_t seed = j.value("seed", 0ULL);
        satsel::RngStream rng(seed);
        std::vector<double> item_weights(static_cast<std::size_t>(items));
        for (double& w : item_weights) w = rng.uniform(0.5, 1.5);
        std::vector<std::vector<int>> covers(static_cast<std::size_t>(elements));
        for (auto& cover : covers)
            for (int item = 0; item < items; ++item)
                if (rng.uniform01() < 0.4) cover.push_back(item);
        inst.elements = elements;
        inst.oracle = std::make_unique<satsel::WeightedCoverageObjective>(
            std::move(item_weights), covers);
    } else {
        throw std::runtime_error("unknown instance type: " + type);
    }

    if (j.contains("costs"))
        inst.costs = j.at("costs").get<std::vector<double>>();
    else
        inst.costs.assign(static_cast<std::size_t>(inst.elements), 1.0);
    if (static_cast<int>(inst.costs.size()) != inst.elements)
        throw std::runtime_error("instance cost count must match the element count");
    return inst;
}

int run_experiment(char which, const std::string& config_path,
                   std::optional<std::uint64_t> seed_override, const std::string& out_dir,
                   const std::string& format) {
    ScenarioConfig cfg = load_or_default(config_path);
    if (seed_override) cfg.scenario_seed = *seed_override;
    satsel::cli::RunReport report;
    switch (which) {
        case 'a': report = satsel::cli::run_experiment_a(cfg); break;
        case 'b': report = satsel::cli::run_experiment_b(cfg); break;
        default: report = satsel::cli::run_experiment_c(cfg); break;
    }
    const auto written = satsel::cli::emit_report(report, out_dir, format);
    for (const std::string& path : written) std::cout << path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomized greedy satellite-selection toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::string format = "csv";
    std::optional<std::uint64_t> seed_override;

    auto add_common = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("--config", config_path, "JSON configuration file");
        cmd->add_option("--seed", seed_override, "override the scenario seed");
        if (with_out) {
            cmd->add_option("--out", out_dir, "output directory");
            cmd->add_option("--format", format, "output format (csv)");
        }
    };

    auto* cmd_a = app.add_subcommand("run-a", "atmospheric monitoring with MRG");
    add_common(cmd_a, true);
    auto* cmd_b = app.add_subcommand("run-b", "minimum ground coverage with DRG");
    add_common(cmd_b, true);
    auto* cmd_c = app.add_subcommand("run-c", "multi-task robustness with Random-WSSA");
    add_common(cmd_c, true);

    auto* cmd_wsc = app.add_subcommand("wsc-estimate",
                                       "exact weak-submodularity constant of an instance");
    std::string instance_path;
    cmd_wsc->add_option("--config", instance_path, "instance JSON file")->required();

    auto* cmd_bound = app.add_subcommand("bound-eval", "evaluate an approximation bound");
    std::string bound_kind;
    satsel::BoundInputs bi;
    int outer = 0;
    cmd_bound->add_option("--bound", bound_kind, "bound to evaluate: mrg, drg or wssa")
        ->required();
    cmd_bound->add_option("--mu", bi.mu, "lower bound on E[eta]");
    cmd_bound->add_option("--wsc", bi.wsc, "weak-submodularity constant");
    cmd_bound->add_option("--delta", bi.delta, "confidence parameter");
    cmd_bound->add_option("--U", bi.U, "sorted-cost prefix count reaching B");
    cmd_bound->add_option("--cmax", bi.max_cost, "largest element cost");
    cmd_bound->add_option("--budget", bi.budget, "budget bound B");
    cmd_bound->add_option("--L", bi.iterations, "iterations until termination");
    cmd_bound->add_option("--M", bi.max_singleton, "max singleton value");
    cmd_bound->add_option("--m", bi.min_last_gain, "min last-step marginal gain");
    cmd_bound->add_option("--opt-cost", bi.opt_cost_lower, "lower bound on c(S*)");
    cmd_bound->add_option("--sq-cost", bi.squared_cost, "c^2 of the returned selection");
    cmd_bound->add_option("--outer", outer, "saturation outer iterations P");

    auto* cmd_eta = app.add_subcommand("eta-diag", "eta martingale diagnostic runs");
    std::string eta_instance;
    double eta_budget = 1.0;
    double eta_epsilon = 0.01;
    int eta_r = 0;
    int eta_runs = 100;
    std::uint64_t eta_seed = 0;
    std::string eta_out;
    cmd_eta->add_option("--config", eta_instance, "instance JSON file")->required();
    cmd_eta->add_option("--budget", eta_budget, "budget bound B")->required();
    cmd_eta->add_option("--epsilon", eta_epsilon, "sampling parameter");
    cmd_eta->add_option("--r", eta_r, "fixed sample size (0 = formula)");
    cmd_eta->add_option("--runs", eta_runs, "number of seeded runs");
    cmd_eta->add_option("--seed", eta_seed, "base seed");
    cmd_eta->add_option("--out", eta_out, "CSV file for raw eta values");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_a->parsed()) return run_experiment('a', config_path, seed_override, out_dir, format);
        if (cmd_b->parsed()) return run_experiment('b', config_path, seed_override, out_dir, format);
        if (cmd_c->parsed()) return run_experiment('c', config_path, seed_override, out_dir, format);

        if (cmd_wsc->parsed()) {
            Instance inst = load_instance(instance_path);
            const double wsc =
                satsel::estimate_wsc(*inst.oracle, satsel::GroundSet(inst.elements));
            std::cout << "wsc " << satsel::cli::format_double(wsc) << '\n';
            return 0;
        }

        if (cmd_bound->parsed()) {
            if (bound_kind == "mrg") {
                std::cout << "bound "
                          << satsel::cli::format_double(satsel::mrg_value_bound(bi)) << '\n';
            } else if (bound_kind == "drg") {
                std::cout << "bound "
                          << satsel::cli::format_double(satsel::drg_cost_bound(bi)) << '\n';
            } else if (bound_kind == "wssa") {
                const auto ab = satsel::wssa_alpha_bound(bi, outer);
                std::cout << "alpha "
                          << (ab.alpha_defined ? satsel::cli::format_double(ab.alpha)
                                               : std::string("undefined (m=0)"))
                          << "\nsuccess_probability "
                          << satsel::cli::format_double(ab.success_probability) << '\n';
            } else {
                std::cerr << "bound must be mrg, drg or wssa\n";
                return 1;
            }
            return 0;
        }

        if (cmd_eta->parsed()) {
            Instance inst = load_instance(eta_instance);
            satsel::CostModel costs(inst.costs);
            satsel::MrgConfig mc;
            mc.budget = eta_budget;
            mc.epsilon = eta_epsilon;
            if (eta_r > 0) mc.sample_size = eta_r;

            std::string csv = "run,iteration,eta\n";
            std::vector<double> pooled_increments;
            std::vector<double> pooled;
            for (int run = 0; run < eta_runs; ++run) {
                mc.seed = satsel::derive_seed(eta_seed, "eta-run",
                                              static_cast<std::uint64_t>(run));
                const auto diag = satsel::eta_diagnostic(*inst.oracle, costs, mc);
                for (std::size_t i = 0; i < diag.etas.size(); ++i)
                    csv += std::to_string(run) + ',' + std::to_string(i) + ',' +
                           satsel::cli::format_double(diag.etas[i]) + '\n';
                pooled.insert(pooled.end(), diag.etas.begin(), diag.etas.end());
                pooled_increments.insert(pooled_increments.end(), diag.increments.begin(),
                                         diag.increments.end());
            }

            double mean = 0.0;
            for (double e : pooled) mean += e;
            if (!pooled.empty()) mean /= static_cast<double>(pooled.size());
            double drift = 0.0;
            for (double d : pooled_increments) drift += d;
            if (!pooled_increments.empty())
                drift /= static_cast<double>(pooled_increments.size());

            std::cout << "samples " << pooled.size() << "\nmean_eta "
                      << satsel::cli::format_double(mean) << "\nmean_increment "
                      << satsel::cli::format_double(drift) << '\n';
            if (!eta_out.empty()) {
                std::ofstream out(eta_out);
                if (!out) throw std::runtime_error("cannot write " + eta_out);
                out << csv;
                std::cout << eta_out << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
