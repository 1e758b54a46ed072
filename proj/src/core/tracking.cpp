#include "tracking.hpp"

#include <algorithm>

#include "error.hpp"

namespace swarmtrack {

double zonal_strength(const Sensor& sensor, const Target& target) {
    const double d = distance(sensor.pos, target.pos);
    return std::max(0.0, 1.0 - d / sensor.spec.primary_radius);
}

StrengthWindow::StrengthWindow(std::size_t length) : length_(length) {
    if (length_ < 2) fail(ErrorKind::Domain, "strength window must hold at least two samples");
}

void StrengthWindow::push(double strength) {
    samples_.push_back(std::clamp(strength, 0.0, 1.0));
    if (samples_.size() > length_) samples_.pop_front();
}

bool StrengthWindow::strictly_decreasing() const {
    return std::adjacent_find(samples_.begin(), samples_.end(), std::less_equal<>{}) == samples_.end();
}

bool StrengthWindow::strictly_increasing() const {
    return std::adjacent_find(samples_.begin(), samples_.end(), std::greater_equal<>{}) == samples_.end();
}

bool should_handoff(const StrengthWindow& current, const StrengthWindow& candidate, bool candidate_has_capacity) {
    if (current.size() < 2 || candidate.size() < 2) {
        fail(ErrorKind::NotReady, "handoff test needs at least two samples in each window");
    }
    return current.strictly_decreasing() && candidate.strictly_increasing() &&
           candidate.latest() > current.latest() && candidate_has_capacity;
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Spawn: return "SPAWN";
        case EventKind::Claim: return "CLAIM";
        case EventKind::Handoff: return "HANDOFF";
        case EventKind::Release: return "RELEASE";
        case EventKind::Exit: return "EXIT";
    }
    return "?";
}

TrackBook::TrackBook(std::size_t sensor_count, std::size_t window, double front_depth)
    : window_(window), front_depth_(front_depth), load_(sensor_count, 0) {
    if (window_ < 2) fail(ErrorKind::Domain, "strength window must hold at least two samples");
}

void TrackBook::open(std::int64_t target_id) {
    auto [it, inserted] = records_.try_emplace(target_id);
    if (!inserted) fail(ErrorKind::Domain, "target id reused: " + std::to_string(target_id));
    it->second.target_id = target_id;
}

const StrengthWindow* TrackBook::window(std::int64_t target_id, std::int64_t sensor_id) const {
    const auto t = windows_.find(target_id);
    if (t == windows_.end()) return nullptr;
    const auto s = t->second.find(sensor_id);
    return s == t->second.end() ? nullptr : &s->second;
}

std::vector<TrackEvent> update_tracks(TrackBook& book, std::int64_t step, std::span<const Sensor> sensors,
                                      const NeighborGraph& graph, std::span<const Target> targets) {
    std::vector<TrackEvent> events;
    std::map<std::int64_t, const Target*> alive;
    for (const auto& t : targets) {
        if (t.alive) alive.emplace(t.id, &t);
    }

    auto has_capacity = [&](std::int64_t s) { return book.load_[s] < sensors[s].spec.capacity; };

    // exits
    for (auto& [id, rec] : book.records_) {
        if (rec.exited || alive.contains(id)) continue;
        rec.exited = true;
        rec.exit_step = step;
        const auto from = rec.owner.value_or(kNoSensor);
        if (rec.owner) --book.load_[*rec.owner];
        rec.owner.reset();
        book.windows_.erase(id);
        events.push_back({step, EventKind::Exit, id, from, kNoSensor});
    }

    // strength windows; a sensor's window exists only while the target is strictly inside its zone
    for (const auto& [id, target] : alive) {
        auto& per_sensor = book.windows_[id];
        for (const auto& s : sensors) {
            if (!s.observes()) continue;
            const double strength = zonal_strength(s, *target);
            if (strength > 0.0) {
                per_sensor.try_emplace(s.id, book.window_).first->second.push(strength);
            } else {
                per_sensor.erase(s.id);
            }
        }
    }

    for (const auto& [id, target] : alive) {
        if (!book.records_.contains(id)) book.open(id);
        auto& rec = book.records_.at(id);
        auto& per_sensor = book.windows_[id];

        // release
        if (rec.owner && !per_sensor.contains(*rec.owner)) {
            events.push_back({step, EventKind::Release, id, *rec.owner, kNoSensor});
            --book.load_[*rec.owner];
            rec.owner.reset();
        }

        // claim
        if (!rec.owner) {
            std::optional<std::int64_t> best;
            double best_strength = 0.0;
            for (const auto& [sid, win] : per_sensor) {  // ascending sensor id
                if (!has_capacity(sid)) continue;
                if (!best || win.latest() > best_strength) {
                    best = sid;
                    best_strength = win.latest();
                }
            }
            if (best) {
                rec.owner = best;
                ++book.load_[*best];
                events.push_back({step, EventKind::Claim, id, kNoSensor, *best});
            }
        }

        // handoff
        if (rec.owner) {
            const auto owner = *rec.owner;
            const auto& current = per_sensor.at(owner);
            if (current.size() >= 2) {
                std::optional<std::int64_t> best;
                double best_strength = 0.0;
                for (auto nb : graph.neighbors(owner)) {
                    const auto it = per_sensor.find(nb);
                    if (it == per_sensor.end() || it->second.size() < 2) continue;
                    if (!should_handoff(current, it->second, has_capacity(nb))) continue;
                    if (!best || it->second.latest() > best_strength) {
                        best = nb;
                        best_strength = it->second.latest();
                    }
                }
                if (best) {
                    --book.load_[owner];
                    ++book.load_[*best];
                    rec.owner = best;
                    rec.handoffs.push_back({step, owner, *best});
                    events.push_back({step, EventKind::Handoff, id, owner, *best});
                }
            }
        }

        ++rec.total_in_field_steps;
        if (rec.owner) ++rec.observed_steps;
        if (target->pos.x <= book.front_depth_) {
            ++rec.front_steps;
            if (rec.owner) ++rec.front_observed_steps;
        }
    }
    return events;
}

}  // namespace swarmtrack
