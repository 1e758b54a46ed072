#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geometry.hpp"
#include "planner.hpp"
#include "targets.hpp"

namespace swarmtrack {

enum class SensorRole { FrontCover, RearRelay, Resting };

std::string_view to_string(SensorRole role);

struct Sensor {
    std::int64_t id = 0;  // equals the sensor's index in its deployment
    Vec2 pos;
    SensorSpec spec;
    SensorRole role = SensorRole::FrontCover;
    bool secondary_active = false;

    bool observes() const { return role != SensorRole::Resting; }
};

struct Deployment {
    std::vector<Sensor> sensors;
    /// Depth of the entry strip [0, depth] x [0, b] that the front sensors
    /// cover completely. The whole field length for Case 1/2.
    double covered_depth = 0.0;
};

/// Places plan.n sensors according to the plan's case. Throws an infeasible
/// error for Case 4 and for plans whose geometry cannot be realized (the
/// covering lattice needs more sensors than available, or rear relays would
/// not form a connected secondary-zone chain).
Deployment deploy(const Plan& plan);

/// Undirected graph over sensors: an edge joins two observing sensors whose
/// secondary zones overlap (center distance <= 2R). Resting sensors are
/// isolated vertices.
class NeighborGraph {
public:
    NeighborGraph() = default;
    explicit NeighborGraph(std::span<const Sensor> sensors);

    std::span<const std::int64_t> neighbors(std::int64_t id) const { return adjacency_.at(id); }
    bool adjacent(std::int64_t a, std::int64_t b) const;
    std::size_t size() const { return adjacency_.size(); }

    /// True when the induced subgraph over `ids` is connected (empty and
    /// single-vertex subsets count as connected).
    bool connected(std::span<const std::int64_t> ids) const;

private:
    std::vector<std::vector<std::int64_t>> adjacency_;  // sorted ascending
};

inline NeighborGraph neighbor_graph(std::span<const Sensor> sensors) { return NeighborGraph(sensors); }

/// Ids of alive targets within the sensor's primary radius (boundary
/// inclusive), nearest first, ties by lower id, at most spec.capacity.
std::vector<std::int64_t> observed_targets(const Sensor& sensor, std::span<const Target> targets);

}  // namespace swarmtrack
