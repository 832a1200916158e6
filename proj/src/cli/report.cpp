#include "satsel/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

namespace satsel::cli {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<SummaryRow> RunReport::summarize() const {
    using Key = std::tuple<std::string, int, double>;
    std::map<Key, std::tuple<double, double, double, int>> acc;
    std::vector<Key> order;
    for (const RunRow& row : rows) {
        Key key{row.algorithm, row.r, row.constraint};
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(key, std::tuple{row.objective, row.cost, row.wall_ms, 1});
            order.push_back(key);
        } else {
            auto& [obj, cost, wall, n] = it->second;
            obj += row.objective;
            cost += row.cost;
            wall += row.wall_ms;
            n += 1;
        }
    }
    std::vector<SummaryRow> out;
    out.reserve(order.size());
    for (const Key& key : order) {
        const auto& [obj, cost, wall, n] = acc.at(key);
        SummaryRow s;
        std::tie(s.algorithm, s.r, s.constraint) = key;
        s.mean_objective = obj / n;
        s.mean_cost = cost / n;
        s.mean_wall_ms = wall / n;
        out.push_back(std::move(s));
    }
    return out;
}

void RunReport::verify_constraints() const {
    const CostModel costs(element_costs);
    for (const RunRow& row : rows) {
        const double recomputed = costs.total_cost(row.selection);
        if (std::abs(recomputed - row.cost) > 1e-9 * std::max(1.0, std::abs(row.cost)))
            throw std::logic_error("logged cost disagrees with the raw selection");
        switch (row.kind) {
            case ConstraintKind::none:
                break;
            case ConstraintKind::budget:
                if (recomputed > row.constraint_limit + 1e-9)
                    throw std::logic_error("selection exceeds its budget");
                break;
            case ConstraintKind::threshold:
                if (row.objective < row.constraint_limit - row.constraint_slack - 1e-9)
                    throw std::logic_error("selection misses its performance threshold");
                break;
        }
    }
}

std::vector<std::string> emit_report(const RunReport& report, const std::string& out_dir,
                                     const std::string& format) {
    if (format != "csv") throw std::invalid_argument("unsupported output format: " + format);
    report.verify_constraints();
    std::filesystem::create_directories(out_dir);

    std::vector<std::string> written;

    const std::string runs_path =
        (std::filesystem::path(out_dir) / (report.experiment + "_runs.csv")).string();
    {
        std::ofstream out(runs_path);
        if (!out) throw std::runtime_error("cannot write " + runs_path);
        out << "step,algorithm,r,B_or_A,objective,cost,size,oracle_calls,wall_ms,seed\n";
        for (const RunRow& row : report.rows) {
            out << row.step << ',' << row.algorithm << ',' << row.r << ','
                << format_double(row.constraint) << ',' << format_double(row.objective) << ','
                << format_double(row.cost) << ',' << row.size << ',' << row.oracle_calls
                << ',' << format_double(row.wall_ms) << ',' << row.seed << '\n';
        }
    }
    written.push_back(runs_path);

    const std::string summary_path =
        (std::filesystem::path(out_dir) / (report.experiment + "_summary.csv")).string();
    {
        std::ofstream out(summary_path);
        if (!out) throw std::runtime_error("cannot write " + summary_path);
        out << "algorithm,r,B_or_A,mean_objective,mean_cost,mean_wall_ms\n";
        for (const SummaryRow& s : report.summarize()) {
            out << s.algorithm << ',' << s.r << ',' << format_double(s.constraint) << ','
                << format_double(s.mean_objective) << ',' << format_double(s.mean_cost) << ','
                << format_double(s.mean_wall_ms) << '\n';
        }
    }
    written.push_back(summary_path);

    for (const CsvAttachment& att : report.attachments) {
        const std::string path = (std::filesystem::path(out_dir) / att.filename).string();
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << att.content;
        written.push_back(path);
    }
    return written;
}

std::string render_plot_csv(const std::vector<PlotSeries>& series,
                            int moving_average_window) {
    if (moving_average_window < 1)
        throw std::invalid_argument("moving average window must be positive");
    std::string out = "step,series,value\n";
    for (const PlotSeries& s : series) {
        for (std::size_t i = 0; i < s.steps.size(); ++i) {
            const std::size_t start =
                i + 1 >= static_cast<std::size_t>(moving_average_window)
                    ? i + 1 - static_cast<std::size_t>(moving_average_window)
                    : 0;
            double sum = 0.0;
            for (std::size_t k = start; k <= i; ++k) sum += s.values[k];
            const double smoothed = sum / static_cast<double>(i - start + 1);
            out += std::to_string(s.steps[i]);
            out += ',';
            out += s.label;
            out += ',';
            out += format_double(smoothed);
            out += '\n';
        }
    }
    return out;
}

} // namespace satsel::cli
