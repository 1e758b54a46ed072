/*
 * swarmtrack C API.
 *
 * Coverage planning for dual-zone sensor swarms and a deterministic
 * multi-target tracking simulator. All functions return an st_status; on
 * failure st_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Objects are opaque handles released
 * with their matching *_free function; passing NULL to a *_free is a no-op.
 */
#ifndef SWARMTRACK_H
#define SWARMTRACK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SWARMTRACK_BUILDING)
#    define ST_API __declspec(dllexport)
#  else
#    define ST_API __declspec(dllimport)
#  endif
#else
#  define ST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
    ST_OK = 0,
    ST_ERR_INVALID_ARGUMENT = 1,
    ST_ERR_CONFIG = 2,
    ST_ERR_INFEASIBLE = 3,  /* Case 4: tracking will not be possible */
    ST_ERR_IO = 4,
    ST_ERR_NOT_READY = 5,
    ST_ERR_INTERNAL = 6
} st_status;

typedef enum st_case {
    ST_CASE1 = 1, /* enough sensors to cover the field */
    ST_CASE2 = 2, /* surplus sensors; some rest */
    ST_CASE3 = 3, /* front strip covered, rear relays pass tracks along */
    ST_CASE4 = 4  /* insufficient */
} st_case;

typedef struct st_plan_info {
    double length;
    double breadth;
    double area;
    double primary_radius;
    double secondary_radius;
    double primary_area;   /* pi r^2 */
    double secondary_area; /* pi R^2 */
    int64_t n;
    double k;
    st_case label;
    double front_depth; /* Case 3 only, otherwise 0 */
    int64_t surplus;    /* Case 2 only, otherwise 0 */
} st_plan_info;

typedef struct st_sweep_row {
    double x; /* area (area sweep) or primary radius (radius sweep) */
    st_plan_info plan;
} st_sweep_row;

typedef struct st_summary {
    int64_t steps;
    int64_t sensors;
    st_case label;
    int64_t spawned;
    int64_t alive;
    int64_t exited;
    int64_t total_handoffs;
    int64_t missed;
    double mean_continuity;
    double front_continuity;
    double min_front_continuity;
    double covered_depth;
} st_summary;

typedef struct st_buffer st_buffer;
typedef struct st_config st_config;
typedef struct st_sim st_sim;

ST_API const char* st_version(void);
ST_API const char* st_last_error(void);
ST_API const char* st_status_name(st_status status);
ST_API const char* st_case_name(st_case label);

/* Text buffers returned by the API. */
ST_API const char* st_buffer_data(const st_buffer* buf);
ST_API size_t st_buffer_size(const st_buffer* buf);
ST_API void st_buffer_free(st_buffer* buf);

/* Planning. n <= 0 selects the optimal sensor count. */
ST_API st_status st_plan(double length, double breadth, double primary_radius, double secondary_radius, int64_t n,
                         st_plan_info* out);
/* Same for a square field of the given area. */
ST_API st_status st_plan_area(double area, double primary_radius, double secondary_radius, st_plan_info* out);
/* "area,r,R,primary_area,secondary_area,n,k,case" without a trailing newline. */
ST_API st_status st_plan_format_row(const st_plan_info* plan, st_buffer** out);

/* Recomputes the sensor-count table and compares it with `expected_csv`
 * (NULL: the built-in published table). `out_csv` receives the computed
 * table, `out_diff` one line per mismatch, `mismatches` their count. */
ST_API st_status st_table_check(const char* expected_csv, st_buffer** out_csv, st_buffer** out_diff,
                                int* mismatches);

/* Sweeps; `rows` must hold `count` entries. */
ST_API st_status st_sweep_area(double primary_radius, double secondary_radius, const double* areas, size_t count,
                               st_sweep_row* rows);
ST_API st_status st_sweep_radius(double area, const double* primary_radii, const double* secondary_radii,
                                 size_t count, st_sweep_row* rows);
/* Writes x,n,k,case CSV to csv_path and, when svg_path is non-NULL, a line
 * chart of k (y_axis "k") or n (y_axis "n") against x. */
ST_API st_status st_sweep_write(const st_sweep_row* rows, size_t count, const char* x_label, const char* y_axis,
                                const char* csv_path, const char* svg_path);

/* Scenario configuration. */
ST_API st_status st_config_default(st_config** out);
ST_API st_status st_config_parse(const char* text, st_config** out);
ST_API st_status st_config_load(const char* path, st_config** out);
ST_API void st_config_free(st_config* config);
ST_API st_status st_config_set_seed(st_config* config, uint64_t seed);
ST_API st_status st_config_get_seed(const st_config* config, uint64_t* seed);
/* Worker threads used inside a step; never changes results. */
ST_API st_status st_config_set_workers(st_config* config, int workers);
ST_API st_status st_config_plan(const st_config* config, st_plan_info* out);

/* Simulation. st_sim_create fails with ST_ERR_INFEASIBLE for Case 4. */
ST_API st_status st_sim_create(const st_config* config, st_sim** out);
ST_API void st_sim_free(st_sim* sim);
ST_API st_status st_sim_step(st_sim* sim);
/* Steps until the configured step count is reached. */
ST_API st_status st_sim_run(st_sim* sim);
ST_API st_status st_sim_summary(const st_sim* sim, st_summary* out);
ST_API st_status st_sim_metrics_csv(const st_sim* sim, st_buffer** out);
ST_API st_status st_sim_events_csv(const st_sim* sim, st_buffer** out);
/* metrics.csv and events.csv into `dir`, created if missing. */
ST_API st_status st_sim_write_outputs(const st_sim* sim, const char* dir);
ST_API st_status st_summary_format(const st_summary* summary, st_buffer** out);

#ifdef __cplusplus
}
#endif

#endif /* SWARMTRACK_H */
