// swarmtrack command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 ok, 1 table mismatch, 2 usage/config, 3 infeasible (Case 4), 4 I/O.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "swarmtrack/swarmtrack.h"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInfeasible = 3, kIo = 4 };

struct BufferDeleter {
    void operator()(st_buffer* b) const { st_buffer_free(b); }
};
using Buffer = std::unique_ptr<st_buffer, BufferDeleter>;

struct ConfigDeleter {
    void operator()(st_config* c) const { st_config_free(c); }
};
struct SimDeleter {
    void operator()(st_sim* s) const { st_sim_free(s); }
};

int exit_for(st_status status) {
    switch (status) {
        case ST_OK: return kOk;
        case ST_ERR_INFEASIBLE: return kInfeasible;
        case ST_ERR_IO: return kIo;
        default: return kUsage;
    }
}

int report(st_status status) {
    if (status != ST_OK) std::cerr << "swarmtrack: " << st_last_error() << '\n';
    return exit_for(status);
}

struct PlanArgs {
    std::optional<double> area;
    std::optional<double> length;
    std::optional<double> breadth;
    double r = 0.0;
    double big_r = 0.0;
    std::int64_t n = 0;
};

int cmd_plan(const PlanArgs& a) {
    st_plan_info info{};
    st_status s = ST_OK;
    if (a.area && !a.length && !a.breadth) {
        s = st_plan_area(*a.area, a.r, a.big_r, &info);
        if (s == ST_OK && a.n > 0) {
            const double side = std::sqrt(*a.area);
            s = st_plan(side, side, a.r, a.big_r, a.n, &info);
            info.area = *a.area;
        }
    } else if (!a.area && a.length && a.breadth) {
        s = st_plan(*a.length, *a.breadth, a.r, a.big_r, a.n, &info);
    } else {
        std::cerr << "swarmtrack plan: give either --area or both --l and --b\n";
        return kUsage;
    }
    if (s != ST_OK) return report(s);
    st_buffer* row = nullptr;
    if (const auto f = st_plan_format_row(&info, &row); f != ST_OK) return report(f);
    Buffer hold(row);
    std::cout << st_buffer_data(row) << '\n';
    return kOk;
}

int cmd_table(const std::string& expect_path) {
    std::string expected;
    if (!expect_path.empty()) {
        std::ifstream in(expect_path, std::ios::binary);
        if (!in) {
            std::cerr << "swarmtrack table: cannot read " << expect_path << '\n';
            return kIo;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        expected = ss.str();
    }
    st_buffer* csv = nullptr;
    st_buffer* diff = nullptr;
    int mismatches = 0;
    const auto s = st_table_check(expect_path.empty() ? nullptr : expected.c_str(), &csv, &diff, &mismatches);
    if (s != ST_OK) return report(s);
    Buffer hold_csv(csv);
    Buffer hold_diff(diff);
    std::cout << st_buffer_data(csv);
    if (mismatches > 0) {
        std::cerr << st_buffer_data(diff) << mismatches << " mismatch(es)\n";
        return kMismatch;
    }
    return kOk;
}

struct SweepArgs {
    std::string mode;
    double r = 2.0;
    double big_r = 4.0;
    double area = 1000.0;
    std::vector<double> values;  // explicit areas or radii
    std::optional<double> from;
    std::optional<double> to;
    double step = 1.0;
    int count = 0;
    bool log = false;
    double gap = 2.0;
    std::string y_axis;
    std::string out;
    std::string svg;
};

std::vector<double> sweep_values(const SweepArgs& a) {
    if (!a.values.empty()) return a.values;
    std::vector<double> v;
    if (!a.from || !a.to || *a.from > *a.to) return v;
    if (a.count > 0) {
        for (int i = 0; i < a.count; ++i) {
            const double t = a.count == 1 ? 0.0 : static_cast<double>(i) / (a.count - 1);
            v.push_back(a.log ? *a.from * std::pow(*a.to / *a.from, t) : *a.from + t * (*a.to - *a.from));
        }
    } else if (a.step > 0.0) {
        for (double x = *a.from; x <= *a.to + 1e-9 * std::abs(*a.to); x += a.step) v.push_back(x);
    }
    return v;
}

int cmd_sweep(const SweepArgs& a) {
    const auto xs = sweep_values(a);
    if (xs.empty()) {
        std::cerr << "swarmtrack sweep: empty range\n";
        return kUsage;
    }
    std::vector<st_sweep_row> rows(xs.size());
    st_status s = ST_OK;
    std::string x_label;
    if (a.mode == "area") {
        s = st_sweep_area(a.r, a.big_r, xs.data(), xs.size(), rows.data());
        x_label = "area of the region";
    } else {
        std::vector<double> outer;
        for (double r : xs) outer.push_back(r + a.gap);
        s = st_sweep_radius(a.area, xs.data(), outer.data(), xs.size(), rows.data());
        x_label = "radius of primary zone";
    }
    if (s != ST_OK) return report(s);
    const std::string axis = a.y_axis.empty() ? "k" : a.y_axis;
    return report(st_sweep_write(rows.data(), rows.size(), x_label.c_str(), axis.c_str(), a.out.c_str(),
                                 a.svg.empty() ? nullptr : a.svg.c_str()));
}

struct SimulateArgs {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    int workers = 1;
};

int cmd_simulate(const SimulateArgs& a) {
    st_config* raw_config = nullptr;
    if (const auto s = st_config_load(a.config.c_str(), &raw_config); s != ST_OK) return report(s);
    std::unique_ptr<st_config, ConfigDeleter> config(raw_config);

    // seed precedence: flag > SWARMTRACK_SEED > file
    if (a.seed) {
        st_config_set_seed(config.get(), *a.seed);
    } else if (const char* env = std::getenv("SWARMTRACK_SEED"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const auto seed = std::strtoull(env, &end, 10);
        if (*end != '\0') {
            std::cerr << "swarmtrack: SWARMTRACK_SEED is not an unsigned integer: " << env << '\n';
            return kUsage;
        }
        st_config_set_seed(config.get(), seed);
    }
    if (const auto s = st_config_set_workers(config.get(), a.workers); s != ST_OK) return report(s);

    st_sim* raw_sim = nullptr;
    if (const auto s = st_sim_create(config.get(), &raw_sim); s != ST_OK) return report(s);
    std::unique_ptr<st_sim, SimDeleter> sim(raw_sim);

    if (const auto s = st_sim_run(sim.get()); s != ST_OK) return report(s);
    if (const auto s = st_sim_write_outputs(sim.get(), a.out.c_str()); s != ST_OK) return report(s);

    st_summary summary{};
    st_sim_summary(sim.get(), &summary);
    st_buffer* line = nullptr;
    st_summary_format(&summary, &line);
    Buffer hold(line);
    std::cout << st_case_name(summary.label) << " sensors=" << summary.sensors << ' ' << st_buffer_data(line) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarmtrack: sensor-swarm coverage planner and multi-target tracking simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", st_version());

    PlanArgs plan;
    auto* plan_cmd = app.add_subcommand("plan", "Plan one field and print its table row as CSV");
    plan_cmd->add_option("--area", plan.area, "Field area (square field)");
    plan_cmd->add_option("--l", plan.length, "Field length (travel axis)");
    plan_cmd->add_option("--b", plan.breadth, "Field breadth");
    plan_cmd->add_option("--r", plan.r, "Primary zone radius")->required();
    plan_cmd->add_option("--R", plan.big_r, "Secondary zone radius")->required();
    plan_cmd->add_option("--n", plan.n, "Fleet size (default: optimal)");

    std::string expect_path;
    auto* table_cmd = app.add_subcommand("table", "Recompute the sensor-count table and check it");
    table_cmd->add_option("--expect", expect_path, "Expected table CSV (default: built-in published table)");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep area or primary radius and write CSV/SVG");
    sweep_cmd->add_option("--mode", sweep.mode, "area or radius")->required()->check(CLI::IsMember({"area", "radius"}));
    sweep_cmd->add_option("--r", sweep.r, "Primary radius (area mode)");
    sweep_cmd->add_option("--R", sweep.big_r, "Secondary radius (area mode)");
    sweep_cmd->add_option("--area", sweep.area, "Field area (radius mode)");
    sweep_cmd->add_option("--gap", sweep.gap, "R - r for every radius (radius mode)");
    sweep_cmd->add_option("--values", sweep.values, "Explicit areas or radii")->delimiter(',');
    sweep_cmd->add_option("--from", sweep.from, "Range start");
    sweep_cmd->add_option("--to", sweep.to, "Range end");
    sweep_cmd->add_option("--step", sweep.step, "Range increment");
    sweep_cmd->add_option("--count", sweep.count, "Number of points (overrides --step)");
    sweep_cmd->add_flag("--log", sweep.log, "Space --count points logarithmically");
    sweep_cmd->add_option("--y", sweep.y_axis, "Chart y axis: k or n")->check(CLI::IsMember({"k", "n"}));
    sweep_cmd->add_option("--out", sweep.out, "CSV output path")->required();
    sweep_cmd->add_option("--svg", sweep.svg, "SVG chart output path");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run a scenario and write metrics.csv and events.csv");
    sim_cmd->add_option("--config", sim.config, "Scenario file")->required();
    sim_cmd->add_option("--out", sim.out, "Output directory")->required();
    sim_cmd->add_option("--seed", sim.seed, "Override the scenario seed");
    sim_cmd->add_option("--workers", sim.workers, "Worker threads (results do not depend on it)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (plan_cmd->parsed()) return cmd_plan(plan);
    if (table_cmd->parsed()) return cmd_table(expect_path);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (sim_cmd->parsed()) return cmd_simulate(sim);
    return kUsage;
}
