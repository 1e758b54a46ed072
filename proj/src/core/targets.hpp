#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geometry.hpp"
#include "rng.hpp"

namespace swarmtrack {

struct Target {
    std::int64_t id = 0;
    Vec2 pos;
    Vec2 vel;
    bool alive = true;
};

/// Weighted-steering boids parameters. Targets drift toward the exit edge
/// (+x) at cruise speed while cohering, aligning, and separating.
struct FlockParams {
    double neighbor_radius = 5.0;
    double sep_radius = 1.0;
    double w_cohesion = 1.0;
    double w_alignment = 1.0;
    double w_separation = 1.5;
    double w_drift = 0.5;
    double v_max = 2.0;
    double v_cruise = 1.0;
    Vec2 drift{1.0, 0.0};
    double spawn_jitter = 0.1;  // max per-axis velocity jitter at spawn, as a fraction of v_cruise

    void validate() const;
};

/// Hands out target ids; never reuses one within a run.
class IdCounter {
public:
    std::int64_t next() { return next_++; }
    std::int64_t peek() const { return next_; }

private:
    std::int64_t next_ = 0;
};

/// Places `count` targets in the entry band [0, sep_radius] x (0, b).
std::vector<Target> spawn_wave(Rng& rng, int count, const Rect& field, const FlockParams& params,
                               IdCounter& ids);

/// One synchronous boids update: every target's steering is computed from
/// the previous state. Dead targets are carried through untouched. Work may
/// be split over `workers` threads without changing the result.
std::vector<Target> flock_step(std::span<const Target> targets, const FlockParams& params,
                               const Rect& field, double dt, int workers = 1);

}  // namespace swarmtrack
