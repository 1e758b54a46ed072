#include "targets.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "error.hpp"

namespace swarmtrack {

namespace {

Vec2 clamp_speed(Vec2 v, double v_max) {
    const double speed = v.norm();
    if (speed > v_max) return v * (v_max / speed);
    return v;
}

Target advance(std::span<const Target> all, std::size_t self, const FlockParams& p, const Rect& field,
               double dt) {
    Target t = all[self];
    if (!t.alive) return t;

    const double nr2 = p.neighbor_radius * p.neighbor_radius;
    const double sr2 = p.sep_radius * p.sep_radius;

    Vec2 pos_sum;
    Vec2 vel_sum;
    Vec2 push;
    int neighbors = 0;
    for (std::size_t j = 0; j < all.size(); ++j) {
        if (j == self || !all[j].alive) continue;
        const Vec2 d = t.pos - all[j].pos;
        const double d2 = d.norm2();
        if (d2 > nr2) continue;
        pos_sum += all[j].pos;
        vel_sum += all[j].vel;
        ++neighbors;
        if (d2 < sr2 && d2 > 0.0) push += d / d2;
    }

    Vec2 steer = p.w_drift * (p.v_cruise * p.drift - t.vel);
    if (neighbors > 0) {
        const double inv = 1.0 / neighbors;
        steer += p.w_cohesion * (pos_sum * inv - t.pos);
        steer += p.w_alignment * (vel_sum * inv - t.vel);
        steer += p.w_separation * push;
    }

    t.vel = clamp_speed(t.vel + steer * dt, p.v_max);
    t.pos += t.vel * dt;

    // lateral walls and the entry edge reflect
    if (t.pos.y < 0.0) {
        t.pos.y = -t.pos.y;
        t.vel.y = -t.vel.y;
    } else if (t.pos.y > field.breadth) {
        t.pos.y = 2.0 * field.breadth - t.pos.y;
        t.vel.y = -t.vel.y;
    }
    t.pos.y = std::clamp(t.pos.y, 0.0, field.breadth);
    if (t.pos.x < 0.0) {
        t.pos.x = -t.pos.x;
        t.vel.x = -t.vel.x;
    }
    if (t.pos.x > field.length) t.alive = false;
    return t;
}

}  // namespace

void FlockParams::validate() const {
    if (!(neighbor_radius > 0.0) || !(sep_radius > 0.0)) fail(ErrorKind::Domain, "flock radii must be positive");
    if (sep_radius > neighbor_radius) fail(ErrorKind::Domain, "sep_radius must not exceed neighbor_radius");
    if (!(v_max > 0.0) || v_cruise < 0.0 || v_cruise > v_max) {
        fail(ErrorKind::Domain, "flock speeds must satisfy 0 <= v_cruise <= v_max, v_max > 0");
    }
    if (w_cohesion < 0.0 || w_alignment < 0.0 || w_separation < 0.0 || w_drift < 0.0) {
        fail(ErrorKind::Domain, "flock weights must be non-negative");
    }
    if (spawn_jitter < 0.0) fail(ErrorKind::Domain, "spawn_jitter must be non-negative");
    if (std::abs(drift.norm() - 1.0) > 1e-9) fail(ErrorKind::Domain, "drift must be a unit vector");
}

std::vector<Target> spawn_wave(Rng& rng, int count, const Rect& field, const FlockParams& params,
                               IdCounter& ids) {
    std::vector<Target> out;
    if (count <= 0) return out;
    out.reserve(static_cast<std::size_t>(count));
    const double band = std::min(params.sep_radius, field.length);
    const double jitter = params.spawn_jitter * params.v_cruise;
    for (int i = 0; i < count; ++i) {
        Target t;
        t.id = ids.next();
        t.pos.x = rng.uniform() * band;
        // open interval (0, b)
        do {
            t.pos.y = rng.uniform() * field.breadth;
        } while (t.pos.y <= 0.0);
        const Vec2 jit{rng.uniform(-jitter, jitter), rng.uniform(-jitter, jitter)};
        t.vel = clamp_speed(params.v_cruise * params.drift + jit, params.v_max);
        out.push_back(t);
    }
    return out;
}

std::vector<Target> flock_step(std::span<const Target> targets, const FlockParams& params, const Rect& field,
                               double dt, int workers) {
    if (!(dt > 0.0)) fail(ErrorKind::Domain, "flock_step needs dt > 0");
    std::vector<Target> next(targets.size());
    const std::size_t n = targets.size();
    const auto n_workers = static_cast<std::size_t>(std::max(1, workers));
    if (n_workers == 1 || n < 2 * n_workers) {
        for (std::size_t i = 0; i < n; ++i) next[i] = advance(targets, i, params, field, dt);
        return next;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w * n / n_workers; i < (w + 1) * n / n_workers; ++i) {
                next[i] = advance(targets, i, params, field, dt);
            }
        });
    }
    pool.clear();
    return next;
}

}  // namespace swarmtrack
