#include "network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace swarmtrack {

namespace {

struct StripLattice {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    double depth = 0.0;
};

// Best rows x cols rectangular lattice covering [0, depth] x [0, b] with at
// most `budget` disks of radius r, depth capped at `wanted`. A cell of height
// h is covered by its center disk iff its width is at most sqrt(4r^2 - h^2).
StripLattice best_strip(double wanted, double b, double r, std::int64_t budget) {
    StripLattice best;
    const auto min_rows = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(b / (2.0 * r))));
    for (std::int64_t rows = min_rows; rows <= budget; ++rows) {
        const double h = b / static_cast<double>(rows);
        if (h >= 2.0 * r) continue;
        const double w = std::sqrt(4.0 * r * r - h * h);
        const std::int64_t max_cols = budget / rows;
        if (max_cols < 1) break;
        const double depth = std::min(wanted, static_cast<double>(max_cols) * w);
        const auto cols = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(depth / w - 1e-12)));
        const bool deeper = depth > best.depth + 1e-12;
        const bool cheaper = std::abs(depth - best.depth) <= 1e-12 && rows * cols < best.rows * best.cols;
        if (deeper || cheaper) best = {rows, cols, depth};
    }
    return best;
}

void place_grid(std::vector<Vec2>& out, double x0, double len, double b, std::int64_t rows, std::int64_t cols,
                std::int64_t count) {
    const double dx = len / static_cast<double>(cols);
    const double dy = b / static_cast<double>(rows);
    for (std::int64_t q = 0; q < count; ++q) {
        const auto c = q / rows;
        const auto j = q % rows;
        out.push_back({x0 + (static_cast<double>(c) + 0.5) * dx, (static_cast<double>(j) + 0.5) * dy});
    }
}

// Evenly spaced column of `count` points at x.
void place_column(std::vector<Vec2>& out, double x, double b, std::int64_t count) {
    for (std::int64_t j = 0; j < count; ++j) {
        out.push_back({x, (static_cast<double>(j) + 0.5) * b / static_cast<double>(count)});
    }
}

void append(Deployment& d, std::span<const Vec2> positions, const SensorSpec& spec, SensorRole role) {
    for (const Vec2& p : positions) {
        d.sensors.push_back({static_cast<std::int64_t>(d.sensors.size()), p, spec, role,
                             role == SensorRole::RearRelay});
    }
}

Deployment deploy_full_cover(const Plan& plan) {
    const Rect& f = plan.field;
    const auto cover = cover_rectangle(f, plan.spec.primary_radius);
    const auto needed = static_cast<std::int64_t>(cover.size());
    if (needed > plan.n) {
        fail(ErrorKind::Infeasible, "covering the field needs " + std::to_string(needed) + " sensors but the plan has " +
                                        std::to_string(plan.n) + "; tracking will not be possible");
    }
    Deployment d;
    d.covered_depth = f.length;
    append(d, cover, plan.spec, SensorRole::FrontCover);
    // sensors left over after covering the field rest at the exit edge
    std::vector<Vec2> parked;
    place_column(parked, f.length, f.breadth, plan.n - needed);
    append(d, parked, plan.spec, SensorRole::Resting);
    return d;
}

Deployment deploy_front_and_relays(const Plan& plan) {
    const Rect& f = plan.field;
    const double r = plan.spec.primary_radius;
    std::int64_t front = (plan.n + 1) / 2;
    const double wanted = *plan.front_depth;

    std::vector<Vec2> front_pos;
    double covered = 0.0;
    const Rect front_rect{wanted, f.breadth};
    if (cover_count(front_rect, r) <= front) {
        front_pos = cover_rectangle(front_rect, r);
        covered = wanted;
    } else {
        auto strip = best_strip(wanted, f.breadth, r, front);
        // borrow relays until the front line spans the entry edge
        while (strip.rows == 0 && front < plan.n) strip = best_strip(wanted, f.breadth, r, ++front);
        if (strip.rows == 0) {
            fail(ErrorKind::Infeasible, std::to_string(plan.n) + " sensors cannot span the entry edge; "
                                        "tracking will not be possible");
        }
        covered = strip.depth;
        place_grid(front_pos, 0.0, covered, f.breadth, strip.rows, strip.cols, strip.rows * strip.cols);
    }
    // front sensors not needed by the lattice form a partial column just behind it
    const auto spare = front - static_cast<std::int64_t>(front_pos.size());
    place_column(front_pos, std::min(f.length, covered + 0.5 * r), f.breadth, spare);

    const std::int64_t relays = plan.n - front;
    std::vector<Vec2> relay_pos;
    if (relays > 0) {
        const double len = f.length - covered;
        const double pitch = std::sqrt(len * f.breadth / static_cast<double>(relays));
        const auto rows = std::clamp<std::int64_t>(std::llround(f.breadth / pitch), 1, relays);
        const auto cols = (relays + rows - 1) / rows;
        place_grid(relay_pos, covered, len, f.breadth, rows, cols, relays);
    }

    Deployment d;
    d.covered_depth = covered;
    append(d, front_pos, plan.spec, SensorRole::FrontCover);
    append(d, relay_pos, plan.spec, SensorRole::RearRelay);

    std::vector<std::int64_t> relay_ids;
    for (const auto& s : d.sensors) {
        if (s.role == SensorRole::RearRelay) relay_ids.push_back(s.id);
    }
    if (!NeighborGraph(d.sensors).connected(relay_ids)) {
        fail(ErrorKind::Infeasible, "rear relays cannot overlap their secondary zones; tracking will not be possible");
    }
    return d;
}

}  // namespace

std::string_view to_string(SensorRole role) {
    switch (role) {
        case SensorRole::FrontCover: return "FrontCover";
        case SensorRole::RearRelay: return "RearRelay";
        case SensorRole::Resting: return "Resting";
    }
    return "?";
}

Deployment deploy(const Plan& plan) {
    switch (plan.label) {
        case CaseLabel::Case1:
        case CaseLabel::Case2: return deploy_full_cover(plan);
        case CaseLabel::Case3: return deploy_front_and_relays(plan);
        case CaseLabel::Case4: break;
    }
    fail(ErrorKind::Infeasible, "plan is Case4 (n=" + std::to_string(plan.n) + ", k=" + std::to_string(plan.k) +
                                    "): tracking will not be possible");
}

NeighborGraph::NeighborGraph(std::span<const Sensor> sensors) : adjacency_(sensors.size()) {
    for (std::size_t i = 0; i < sensors.size(); ++i) {
        if (!sensors[i].observes()) continue;
        for (std::size_t j = i + 1; j < sensors.size(); ++j) {
            if (!sensors[j].observes()) continue;
            const double reach = sensors[i].spec.secondary_radius + sensors[j].spec.secondary_radius;
            if (distance(sensors[i].pos, sensors[j].pos) <= reach) {
                adjacency_[i].push_back(sensors[j].id);
                adjacency_[j].push_back(sensors[i].id);
            }
        }
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool NeighborGraph::adjacent(std::int64_t a, std::int64_t b) const {
    const auto& adj = adjacency_.at(a);
    return std::binary_search(adj.begin(), adj.end(), b);
}

bool NeighborGraph::connected(std::span<const std::int64_t> ids) const {
    if (ids.size() <= 1) return true;
    std::vector<char> member(adjacency_.size(), 0);
    std::vector<char> seen(adjacency_.size(), 0);
    for (auto id : ids) member.at(id) = 1;
    std::vector<std::int64_t> stack{ids.front()};
    seen[ids.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto u : adjacency_[v]) {
            if (member[u] && !seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == ids.size();
}

std::vector<std::int64_t> observed_targets(const Sensor& sensor, std::span<const Target> targets) {
    if (!sensor.observes()) fail(ErrorKind::Domain, "resting sensors do not observe");
    std::vector<std::pair<double, std::int64_t>> hits;
    const double r = sensor.spec.primary_radius;
    for (const auto& t : targets) {
        if (!t.alive) continue;
        const double d = distance(sensor.pos, t.pos);
        if (d <= r) hits.emplace_back(d, t.id);
    }
    std::sort(hits.begin(), hits.end());
    if (hits.size() > static_cast<std::size_t>(sensor.spec.capacity)) hits.resize(sensor.spec.capacity);
    std::vector<std::int64_t> ids;
    ids.reserve(hits.size());
    for (const auto& h : hits) ids.push_back(h.second);
    return ids;
}

}  // namespace swarmtrack
