#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "network.hpp"
#include "targets.hpp"

namespace swarmtrack {

/// max(0, 1 - d/r): 1 at the sensor, 0 on and beyond the primary-zone edge.
double zonal_strength(const Sensor& sensor, const Target& target);

/// The last W strength samples of one sensor with respect to one target.
class StrengthWindow {
public:
    explicit StrengthWindow(std::size_t length = 3);

    void push(double strength);
    void clear() { samples_.clear(); }

    std::size_t size() const { return samples_.size(); }
    std::size_t length() const { return length_; }
    double latest() const { return samples_.back(); }
    const std::deque<double>& samples() const { return samples_; }

    bool strictly_decreasing() const;
    bool strictly_increasing() const;

private:
    std::size_t length_;
    std::deque<double> samples_;
};

/// Handoff trigger: the owner's strength falls across its whole window while
/// the candidate's rises across its window and already exceeds the owner's.
/// Throws a not-ready error when either window holds fewer than two samples.
bool should_handoff(const StrengthWindow& current, const StrengthWindow& candidate, bool candidate_has_capacity);

enum class EventKind { Spawn, Claim, Handoff, Release, Exit };

std::string_view to_string(EventKind kind);

inline constexpr std::int64_t kNoSensor = -1;

struct TrackEvent {
    std::int64_t step = 0;
    EventKind kind = EventKind::Spawn;
    std::int64_t target_id = 0;
    std::int64_t from_sensor = kNoSensor;
    std::int64_t to_sensor = kNoSensor;

    bool operator==(const TrackEvent&) const = default;
};

struct Handoff {
    std::int64_t step = 0;
    std::int64_t from_sensor = kNoSensor;
    std::int64_t to_sensor = kNoSensor;
};

struct TrackRecord {
    std::int64_t target_id = 0;
    std::optional<std::int64_t> owner;
    std::vector<Handoff> handoffs;
    std::int64_t observed_steps = 0;
    std::int64_t total_in_field_steps = 0;
    std::int64_t front_observed_steps = 0;  // steps inside the covered entry strip while owned
    std::int64_t front_steps = 0;           // steps inside the covered entry strip
    bool exited = false;
    std::int64_t exit_step = -1;

    double continuity() const {
        return total_in_field_steps == 0 ? 1.0
                                         : static_cast<double>(observed_steps) / static_cast<double>(total_in_field_steps);
    }
    double front_continuity() const {
        return front_steps == 0 ? 1.0 : static_cast<double>(front_observed_steps) / static_cast<double>(front_steps);
    }
};

/// Ownership bookkeeping for every target seen in a run.
class TrackBook {
public:
    TrackBook() = default;
    TrackBook(std::size_t sensor_count, std::size_t window, double front_depth);

    void open(std::int64_t target_id);

    const std::map<std::int64_t, TrackRecord>& records() const { return records_; }
    const TrackRecord& record(std::int64_t target_id) const { return records_.at(target_id); }
    std::int64_t load(std::int64_t sensor_id) const { return load_.at(sensor_id); }
    std::span<const std::int64_t> loads() const { return load_; }

    /// Strength window of `sensor_id` for `target_id`, if the target is
    /// currently inside that sensor's primary zone.
    const StrengthWindow* window(std::int64_t target_id, std::int64_t sensor_id) const;

    std::size_t window_length() const { return window_; }
    double front_depth() const { return front_depth_; }

private:
    friend std::vector<TrackEvent> update_tracks(TrackBook&, std::int64_t, std::span<const Sensor>,
                                                 const NeighborGraph&, std::span<const Target>);

    std::size_t window_ = 3;
    double front_depth_ = 0.0;
    std::map<std::int64_t, TrackRecord> records_;
    std::map<std::int64_t, std::map<std::int64_t, StrengthWindow>> windows_;  // target -> sensor -> window
    std::vector<std::int64_t> load_;
};

/// One tracking phase over the post-motion target snapshot. In ascending
/// target id order it closes tracks of exited targets, refreshes strength
/// windows, releases owners whose strength hit zero, lets the strongest
/// observing sensor with spare capacity claim unowned targets, applies
/// handoffs between neighbor-graph neighbors, and advances the continuity
/// counters.
std::vector<TrackEvent> update_tracks(TrackBook& book, std::int64_t step, std::span<const Sensor> sensors,
                                      const NeighborGraph& graph, std::span<const Target> targets);

}  // namespace swarmtrack
