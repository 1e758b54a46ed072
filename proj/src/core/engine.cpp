#include "engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace swarmtrack {

void SimConfig::validate() const {
    Rect::make(field.length, field.breadth);
    spec.validate();
    flock.validate();
    if (sensor_count && *sensor_count < 1) fail(ErrorKind::Config, "sensor_count must be at least 1");
    if (target_count < 0) fail(ErrorKind::Config, "target_count must be non-negative");
    if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::Config, "dt must be positive");
    if (steps < 1) fail(ErrorKind::Config, "steps must be at least 1");
    if (window < 2) fail(ErrorKind::Config, "tracking window must be at least 2");
    if (miss_threshold < 0.0 || miss_threshold > 1.0) fail(ErrorKind::Config, "miss_threshold must lie in [0, 1]");
    if (workers < 1) fail(ErrorKind::Config, "workers must be at least 1");
    if (!spawn_schedule.empty()) {
        std::int64_t total = 0;
        for (const auto& w : spawn_schedule) {
            if (w.step < 0 || w.count < 0) fail(ErrorKind::Config, "spawn waves need non-negative step and count");
            total += w.count;
        }
        if (total != target_count) {
            fail(ErrorKind::Config, "spawn schedule releases " + std::to_string(total) + " targets, target_count is " +
                                        std::to_string(target_count));
        }
    }
}

std::vector<SpawnWave> SimConfig::schedule() const {
    if (spawn_schedule.empty()) return {{0, target_count}};
    auto s = spawn_schedule;
    std::stable_sort(s.begin(), s.end(), [](const SpawnWave& a, const SpawnWave& b) { return a.step < b.step; });
    return s;
}

Plan SimConfig::plan() const {
    return sensor_count ? plan_for_count(field, spec, *sensor_count) : optimal_plan(field, spec);
}

World::World(const SimConfig& config, Plan plan, Deployment deployment)
    : config_(config),
      plan_(std::move(plan)),
      deployment_(std::move(deployment)),
      graph_(deployment_.sensors),
      book_(deployment_.sensors.size(), static_cast<std::size_t>(config.window), deployment_.covered_depth),
      spawn_rng_(Rng::substream(config.seed, "spawn")),
      schedule_(config.schedule()) {}

World World::init(const SimConfig& config) {
    config.validate();
    Plan plan = config.plan();
    Deployment deployment = deploy(plan);
    return World(config, std::move(plan), std::move(deployment));
}

void World::step() {
    for (const auto& wave : schedule_) {
        if (wave.step != step_) continue;
        for (auto& t : spawn_wave(spawn_rng_, wave.count, config_.field, config_.flock, ids_)) {
            book_.open(t.id);
            events_.push_back({step_, EventKind::Spawn, t.id, kNoSensor, kNoSensor});
            targets_.push_back(t);
        }
    }

    targets_ = flock_step(targets_, config_.flock, config_.field, config_.dt, config_.workers);

    auto tracked = update_tracks(book_, step_, deployment_.sensors, graph_, targets_);
    for (const auto& e : tracked) {
        if (e.kind == EventKind::Handoff) ++handoffs_;
    }
    events_.insert(events_.end(), tracked.begin(), tracked.end());
    std::erase_if(targets_, [](const Target& t) { return !t.alive; });

    StepMetrics m;
    m.step = step_;
    m.in_field = static_cast<std::int64_t>(targets_.size());
    for (const auto& t : targets_) {
        if (book_.record(t.id).owner) ++m.owned;
    }
    m.coverage_ratio = m.in_field == 0 ? 1.0 : static_cast<double>(m.owned) / static_cast<double>(m.in_field);
    m.handoffs_cum = handoffs_;
    metrics_.push_back(m);

    ++step_;
}

Summary World::summary() const {
    Summary s;
    s.steps = step_;
    s.spawned = ids_.peek();
    s.alive = static_cast<std::int64_t>(targets_.size());
    s.total_handoffs = handoffs_;
    double continuity_sum = 0.0;
    std::int64_t front_obs = 0;
    std::int64_t front_all = 0;
    for (const auto& [id, rec] : book_.records()) {
        front_obs += rec.front_observed_steps;
        front_all += rec.front_steps;
        s.min_front_continuity = std::min(s.min_front_continuity, rec.front_continuity());
        if (!rec.exited) continue;
        ++s.exited;
        continuity_sum += rec.continuity();
        if (rec.continuity() < config_.miss_threshold) ++s.missed;
    }
    if (s.exited > 0) s.mean_continuity = continuity_sum / static_cast<double>(s.exited);
    if (front_all > 0) s.front_continuity = static_cast<double>(front_obs) / static_cast<double>(front_all);
    return s;
}

World run(const SimConfig& config) {
    World world = World::init(config);
    for (std::int64_t i = 0; i < config.steps; ++i) world.step();
    return world;
}

}  // namespace swarmtrack
