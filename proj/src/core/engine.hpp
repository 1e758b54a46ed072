#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "network.hpp"
#include "planner.hpp"
#include "rng.hpp"
#include "targets.hpp"
#include "tracking.hpp"

namespace swarmtrack {

struct SpawnWave {
    std::int64_t step = 0;
    int count = 0;
};

struct SimConfig {
    Rect field{50.0, 20.0};
    SensorSpec spec{2.0, 4.0, 5};
    std::optional<std::int64_t> sensor_count;  // empty: use required_sensor_count
    FlockParams flock;
    int target_count = 20;
    std::vector<SpawnWave> spawn_schedule;  // empty: all targets at step 0
    double dt = 0.1;
    std::int64_t steps = 2000;
    std::uint64_t seed = 1;
    int window = 3;
    double miss_threshold = 0.5;
    int workers = 1;  // execution only; results do not depend on it

    void validate() const;
    std::vector<SpawnWave> schedule() const;
    Plan plan() const;
};

struct StepMetrics {
    std::int64_t step = 0;
    std::int64_t in_field = 0;
    std::int64_t owned = 0;
    double coverage_ratio = 1.0;
    std::int64_t handoffs_cum = 0;

    bool operator==(const StepMetrics&) const = default;
};

struct Summary {
    std::int64_t steps = 0;
    std::int64_t spawned = 0;
    std::int64_t alive = 0;
    std::int64_t exited = 0;
    std::int64_t total_handoffs = 0;
    std::int64_t missed = 0;
    double mean_continuity = 1.0;     // over exited targets
    double front_continuity = 1.0;    // pooled over every target's steps in the covered entry strip
    double min_front_continuity = 1.0;
};

/// Full simulation state at a step boundary.
class World {
public:
    /// Plans, deploys, and seeds a run. Throws an infeasible error for Case 4.
    static World init(const SimConfig& config);

    /// spawn -> flock -> track -> record metrics -> advance the counter.
    void step();

    const SimConfig& config() const { return config_; }
    const Plan& plan() const { return plan_; }
    const Deployment& deployment() const { return deployment_; }
    std::span<const Sensor> sensors() const { return deployment_.sensors; }
    const NeighborGraph& graph() const { return graph_; }
    std::span<const Target> targets() const { return targets_; }
    const TrackBook& tracks() const { return book_; }
    std::int64_t step_count() const { return step_; }
    std::int64_t spawned() const { return ids_.peek(); }

    const std::vector<StepMetrics>& metrics() const { return metrics_; }
    const std::vector<TrackEvent>& events() const { return events_; }

    Summary summary() const;

private:
    World(const SimConfig& config, Plan plan, Deployment deployment);

    SimConfig config_;
    Plan plan_;
    Deployment deployment_;
    NeighborGraph graph_;
    TrackBook book_;
    Rng spawn_rng_;
    IdCounter ids_;
    std::vector<SpawnWave> schedule_;
    std::vector<Target> targets_;
    std::int64_t step_ = 0;
    std::int64_t handoffs_ = 0;
    std::vector<StepMetrics> metrics_;
    std::vector<TrackEvent> events_;
};

/// init followed by config.steps calls to step.
World run(const SimConfig& config);

}  // namespace swarmtrack
