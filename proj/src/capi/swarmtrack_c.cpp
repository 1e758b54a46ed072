#include "swarmtrack/swarmtrack.h"

#include <new>
#include <string>
#include <vector>

#include "core/engine.hpp"
#include "core/error.hpp"
#include "core/planner.hpp"
#include "core/report.hpp"
#include "core/scenario.hpp"

struct st_buffer {
    std::string text;
};

struct st_config {
    swarmtrack::SimConfig config;
};

struct st_sim {
    swarmtrack::World world;
};

namespace {

using namespace swarmtrack;

thread_local std::string last_error;

st_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Domain: return ST_ERR_INVALID_ARGUMENT;
        case ErrorKind::Infeasible: return ST_ERR_INFEASIBLE;
        case ErrorKind::Config: return ST_ERR_CONFIG;
        case ErrorKind::NotReady: return ST_ERR_NOT_READY;
        case ErrorKind::Io: return ST_ERR_IO;
    }
    return ST_ERR_INTERNAL;
}

template <typename F>
st_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return ST_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return ST_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorKind::Domain, what);
}

st_plan_info to_info(const Plan& p) {
    st_plan_info info{};
    info.length = p.field.length;
    info.breadth = p.field.breadth;
    info.area = p.field.area();
    info.primary_radius = p.spec.primary_radius;
    info.secondary_radius = p.spec.secondary_radius;
    info.primary_area = disk_area(p.spec.primary_radius);
    info.secondary_area = disk_area(p.spec.secondary_radius);
    info.n = p.n;
    info.k = p.k;
    info.label = static_cast<st_case>(p.label);
    info.front_depth = p.front_depth.value_or(0.0);
    info.surplus = p.surplus;
    return info;
}

Plan from_info(const st_plan_info& info) {
    Plan p;
    p.field = Rect{info.length, info.breadth};
    p.spec = SensorSpec{info.primary_radius, info.secondary_radius, 1};
    p.n = info.n;
    p.k = info.k;
    p.label = static_cast<CaseLabel>(info.label);
    if (info.front_depth > 0.0) p.front_depth = info.front_depth;
    p.surplus = info.surplus;
    return p;
}

st_buffer* make_buffer(std::string text) { return new st_buffer{std::move(text)}; }

}  // namespace

extern "C" {

const char* st_version(void) { return "1.0.0"; }

const char* st_last_error(void) { return last_error.c_str(); }

const char* st_status_name(st_status status) {
    switch (status) {
        case ST_OK: return "ok";
        case ST_ERR_INVALID_ARGUMENT: return "invalid argument";
        case ST_ERR_CONFIG: return "bad configuration";
        case ST_ERR_INFEASIBLE: return "infeasible";
        case ST_ERR_IO: return "i/o error";
        case ST_ERR_NOT_READY: return "not ready";
        case ST_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* st_case_name(st_case label) {
    switch (label) {
        case ST_CASE1: return "Case1";
        case ST_CASE2: return "Case2";
        case ST_CASE3: return "Case3";
        case ST_CASE4: return "Case4";
    }
    return "Case?";
}

const char* st_buffer_data(const st_buffer* buf) { return buf ? buf->text.c_str() : ""; }
size_t st_buffer_size(const st_buffer* buf) { return buf ? buf->text.size() : 0; }
void st_buffer_free(st_buffer* buf) { delete buf; }

st_status st_plan(double length, double breadth, double primary_radius, double secondary_radius, int64_t n,
                  st_plan_info* out) {
    return guarded([&] {
        require(out != nullptr, "st_plan: out is NULL");
        const Rect field = Rect::make(length, breadth);
        const SensorSpec spec{primary_radius, secondary_radius, 1};
        *out = to_info(n > 0 ? plan_for_count(field, spec, n) : optimal_plan(field, spec));
    });
}

st_status st_plan_area(double area, double primary_radius, double secondary_radius, st_plan_info* out) {
    return guarded([&] {
        require(out != nullptr, "st_plan_area: out is NULL");
        require(area > 0.0, "area must be positive");
        *out = to_info(optimal_plan(square_field(area), SensorSpec{primary_radius, secondary_radius, 1}));
        out->area = area;
    });
}

st_status st_plan_format_row(const st_plan_info* plan, st_buffer** out) {
    return guarded([&] {
        require(plan != nullptr && out != nullptr, "st_plan_format_row: NULL argument");
        const TableRow row{plan->area,         plan->primary_radius, plan->secondary_radius, plan->primary_area,
                           plan->secondary_area, plan->n,            plan->k,
                           static_cast<CaseLabel>(plan->label)};
        *out = make_buffer(format_row(row));
    });
}

st_status st_table_check(const char* expected_csv, st_buffer** out_csv, st_buffer** out_diff, int* mismatches) {
    return guarded([&] {
        std::vector<TableRow> expected;
        if (expected_csv != nullptr) {
            expected = parse_table_csv(expected_csv);
        } else {
            const auto ref = reference_table();
            expected.assign(ref.begin(), ref.end());
        }
        const auto check = check_table(expected);
        if (out_csv) *out_csv = make_buffer(table_csv(check.computed));
        if (out_diff) {
            std::string diff;
            for (const auto& m : check.mismatches) diff += m + "\n";
            *out_diff = make_buffer(std::move(diff));
        }
        if (mismatches) *mismatches = static_cast<int>(check.mismatches.size());
    });
}

st_status st_sweep_area(double primary_radius, double secondary_radius, const double* areas, size_t count,
                        st_sweep_row* rows) {
    return guarded([&] {
        require(count > 0 && areas != nullptr && rows != nullptr, "st_sweep_area: empty sweep");
        const SensorSpec spec{primary_radius, secondary_radius, 1};
        const auto result = sweep_area(spec, std::span(areas, count));
        for (size_t i = 0; i < count; ++i) {
            rows[i].x = result[i].x;
            rows[i].plan = to_info(result[i].plan);
            rows[i].plan.area = areas[i];
        }
    });
}

st_status st_sweep_radius(double area, const double* primary_radii, const double* secondary_radii, size_t count,
                          st_sweep_row* rows) {
    return guarded([&] {
        require(count > 0 && primary_radii && secondary_radii && rows, "st_sweep_radius: empty sweep");
        require(area > 0.0, "area must be positive");
        std::vector<SensorSpec> specs;
        for (size_t i = 0; i < count; ++i) specs.push_back({primary_radii[i], secondary_radii[i], 1});
        const auto result = sweep_radius(area, specs);
        for (size_t i = 0; i < count; ++i) {
            rows[i].x = result[i].x;
            rows[i].plan = to_info(result[i].plan);
            rows[i].plan.area = area;
        }
    });
}

st_status st_sweep_write(const st_sweep_row* rows, size_t count, const char* x_label, const char* y_axis,
                         const char* csv_path, const char* svg_path) {
    return guarded([&] {
        require(rows != nullptr && count > 0, "st_sweep_write: empty sweep");
        require(csv_path != nullptr, "st_sweep_write: csv_path is NULL");
        const std::string axis = y_axis ? y_axis : "k";
        require(axis == "k" || axis == "n", "y axis must be \"k\" or \"n\"");
        std::vector<SweepRow> sweep;
        for (size_t i = 0; i < count; ++i) sweep.push_back({rows[i].x, from_info(rows[i].plan)});
        write_text(csv_path, sweep_csv(sweep));
        if (svg_path) {
            write_text(svg_path, sweep_svg(sweep, x_label ? x_label : "x", axis == "k" ? SweepAxis::K : SweepAxis::N));
        }
    });
}

st_status st_config_default(st_config** out) {
    return guarded([&] {
        require(out != nullptr, "st_config_default: out is NULL");
        *out = new st_config{};
    });
}

st_status st_config_parse(const char* text, st_config** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "st_config_parse: NULL argument");
        *out = new st_config{parse_scenario(text)};
    });
}

st_status st_config_load(const char* path, st_config** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "st_config_load: NULL argument");
        *out = new st_config{load_scenario(path)};
    });
}

void st_config_free(st_config* config) { delete config; }

st_status st_config_set_seed(st_config* config, uint64_t seed) {
    return guarded([&] {
        require(config != nullptr, "st_config_set_seed: config is NULL");
        config->config.seed = seed;
    });
}

st_status st_config_get_seed(const st_config* config, uint64_t* seed) {
    return guarded([&] {
        require(config != nullptr && seed != nullptr, "st_config_get_seed: NULL argument");
        *seed = config->config.seed;
    });
}

st_status st_config_set_workers(st_config* config, int workers) {
    return guarded([&] {
        require(config != nullptr, "st_config_set_workers: config is NULL");
        require(workers >= 1, "workers must be at least 1");
        config->config.workers = workers;
    });
}

st_status st_config_plan(const st_config* config, st_plan_info* out) {
    return guarded([&] {
        require(config != nullptr && out != nullptr, "st_config_plan: NULL argument");
        *out = to_info(config->config.plan());
    });
}

st_status st_sim_create(const st_config* config, st_sim** out) {
    return guarded([&] {
        require(config != nullptr && out != nullptr, "st_sim_create: NULL argument");
        *out = new st_sim{World::init(config->config)};
    });
}

void st_sim_free(st_sim* sim) { delete sim; }

st_status st_sim_step(st_sim* sim) {
    return guarded([&] {
        require(sim != nullptr, "st_sim_step: sim is NULL");
        sim->world.step();
    });
}

st_status st_sim_run(st_sim* sim) {
    return guarded([&] {
        require(sim != nullptr, "st_sim_run: sim is NULL");
        while (sim->world.step_count() < sim->world.config().steps) sim->world.step();
    });
}

st_status st_sim_summary(const st_sim* sim, st_summary* out) {
    return guarded([&] {
        require(sim != nullptr && out != nullptr, "st_sim_summary: NULL argument");
        const auto s = sim->world.summary();
        *out = st_summary{};
        out->steps = s.steps;
        out->sensors = static_cast<int64_t>(sim->world.sensors().size());
        out->label = static_cast<st_case>(sim->world.plan().label);
        out->spawned = s.spawned;
        out->alive = s.alive;
        out->exited = s.exited;
        out->total_handoffs = s.total_handoffs;
        out->missed = s.missed;
        out->mean_continuity = s.mean_continuity;
        out->front_continuity = s.front_continuity;
        out->min_front_continuity = s.min_front_continuity;
        out->covered_depth = sim->world.deployment().covered_depth;
    });
}

st_status st_sim_metrics_csv(const st_sim* sim, st_buffer** out) {
    return guarded([&] {
        require(sim != nullptr && out != nullptr, "st_sim_metrics_csv: NULL argument");
        *out = make_buffer(metrics_csv(sim->world));
    });
}

st_status st_sim_events_csv(const st_sim* sim, st_buffer** out) {
    return guarded([&] {
        require(sim != nullptr && out != nullptr, "st_sim_events_csv: NULL argument");
        *out = make_buffer(events_csv(sim->world));
    });
}

st_status st_sim_write_outputs(const st_sim* sim, const char* dir) {
    return guarded([&] {
        require(sim != nullptr && dir != nullptr, "st_sim_write_outputs: NULL argument");
        write_outputs(sim->world, dir);
    });
}

st_status st_summary_format(const st_summary* summary, st_buffer** out) {
    return guarded([&] {
        require(summary != nullptr && out != nullptr, "st_summary_format: NULL argument");
        Summary s;
        s.steps = summary->steps;
        s.spawned = summary->spawned;
        s.alive = summary->alive;
        s.exited = summary->exited;
        s.total_handoffs = summary->total_handoffs;
        s.missed = summary->missed;
        s.mean_continuity = summary->mean_continuity;
        s.front_continuity = summary->front_continuity;
        s.min_front_continuity = summary->min_front_continuity;
        *out = make_buffer(summary_line(s));
    });
}

}  // extern "C"
