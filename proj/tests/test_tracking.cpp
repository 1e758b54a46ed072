#include <gtest/gtest.h>

#include <set>

#include "core/error.hpp"
#include "core/tracking.hpp"

namespace swarmtrack {
namespace {

Sensor at(std::int64_t id, Vec2 pos, int capacity = 5) {
    return {id, pos, SensorSpec{2, 4, capacity}, SensorRole::FrontCover, false};
}

StrengthWindow window_of(std::initializer_list<double> xs) {
    StrengthWindow w(3);
    for (double x : xs) w.push(x);
    return w;
}

TEST(ZonalStrength, LinearInDistance) {
    const auto s = at(0, {0, 0});
    EXPECT_DOUBLE_EQ(zonal_strength(s, Target{0, {0, 0}, {}, true}), 1.0);
    EXPECT_DOUBLE_EQ(zonal_strength(s, Target{0, {2, 0}, {}, true}), 0.0);
    EXPECT_DOUBLE_EQ(zonal_strength(s, Target{0, {1, 0}, {}, true}), 0.5);
    EXPECT_DOUBLE_EQ(zonal_strength(s, Target{0, {0, 7}, {}, true}), 0.0);
}

TEST(StrengthWindow, KeepsLastSamples) {
    auto w = window_of({0.1, 0.2, 0.3, 0.4});
    EXPECT_EQ(w.size(), 3u);
    EXPECT_EQ(w.samples().front(), 0.2);
    EXPECT_TRUE(w.strictly_increasing());
    w.push(0.4);
    EXPECT_FALSE(w.strictly_increasing());
    EXPECT_FALSE(w.strictly_decreasing());
    EXPECT_THROW(StrengthWindow(1), Error);
}

TEST(ShouldHandoff, AllClausesHold) {
    EXPECT_TRUE(should_handoff(window_of({0.6, 0.5, 0.4}), window_of({0.2, 0.3, 0.5}), true));
}

TEST(ShouldHandoff, OwnerStrengthRising) {
    EXPECT_FALSE(should_handoff(window_of({0.4, 0.5}), window_of({0.2, 0.3}), true));
}

TEST(ShouldHandoff, CandidateFull) {
    EXPECT_FALSE(should_handoff(window_of({0.6, 0.4}), window_of({0.3, 0.5}), false));
    EXPECT_TRUE(should_handoff(window_of({0.6, 0.4}), window_of({0.3, 0.5}), true));
}

TEST(ShouldHandoff, CandidateMustOvertake) {
    EXPECT_FALSE(should_handoff(window_of({0.8, 0.7}), window_of({0.3, 0.5}), true));
}

TEST(ShouldHandoff, NotReadyWithShortWindows) {
    try {
        should_handoff(window_of({0.6}), window_of({0.2, 0.3}), true);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotReady);
    }
}

struct Scenario {
    std::vector<Sensor> sensors;
    NeighborGraph graph;
    TrackBook book;
    std::vector<TrackEvent> events;

    explicit Scenario(std::vector<Sensor> s, double front_depth = 0.0)
        : sensors(std::move(s)), graph(sensors), book(sensors.size(), 3, front_depth) {}

    void step(std::int64_t k, std::span<const Target> targets) {
        auto ev = update_tracks(book, k, sensors, graph, targets);
        events.insert(events.end(), ev.begin(), ev.end());
    }
    std::size_t count(EventKind kind) const {
        return std::count_if(events.begin(), events.end(), [&](const TrackEvent& e) { return e.kind == kind; });
    }
};

TEST(UpdateTracks, SingleSensorCrossing) {
    Scenario sc({at(0, {0, 0})});
    sc.book.open(0);
    std::int64_t k = 0;
    for (double x = -3.0; x <= 3.0; x += 0.1, ++k) {
        const std::vector<Target> t{{0, {x, 0.3}, {1, 0}, true}};
        sc.step(k, t);
        const auto& rec = sc.book.record(0);
        const double d = std::hypot(x, 0.3);
        EXPECT_EQ(rec.owner.has_value(), d < 2.0) << x;
    }
    EXPECT_EQ(sc.count(EventKind::Claim), 1u);
    EXPECT_EQ(sc.count(EventKind::Release), 1u);
    EXPECT_EQ(sc.count(EventKind::Handoff), 0u);
    EXPECT_EQ(sc.book.load(0), 0);
}

TEST(UpdateTracks, ConstantVelocityBetweenOverlappingSensorsHandsOffOnce) {
    // Sensors 3 apart with r = 2. Oracle: owner strength 1 - x/2 falls and
    // the candidate's 1 - (3 - x)/2 rises, so the first step with x > 1.5
    // (and two candidate samples, x > 1) triggers the only handoff.
    Scenario sc({at(0, {0, 0}), at(1, {3, 0})});
    sc.book.open(42);
    double handoff_x = -1;
    std::int64_t in_zone = 0;
    for (int k = 0; k <= 70; ++k) {
        const double x = -1.9 + 0.1 * k;
        if (std::abs(x) < 2.0 || std::abs(x - 3.0) < 2.0) ++in_zone;
        const std::vector<Target> t{{42, {x, 0}, {1, 0}, true}};
        sc.step(k, t);
        if (sc.count(EventKind::Handoff) == 1 && handoff_x < 0) handoff_x = x;
    }
    ASSERT_EQ(sc.count(EventKind::Handoff), 1u);
    EXPECT_GE(handoff_x, 1.5 - 1e-9);
    EXPECT_LT(handoff_x, 1.7);
    const auto& rec = sc.book.record(42);
    ASSERT_EQ(rec.handoffs.size(), 1u);
    EXPECT_EQ(rec.handoffs[0].from_sensor, 0);
    EXPECT_EQ(rec.handoffs[0].to_sensor, 1);
    EXPECT_EQ(rec.target_id, 42);
    EXPECT_EQ(rec.observed_steps, in_zone);
    EXPECT_EQ(rec.total_in_field_steps, 71);
}

TEST(UpdateTracks, CapacityLeavesSecondTargetUnowned) {
    Scenario sc({at(0, {0, 0}, 1)});
    const std::vector<Target> t{{0, {0.5, 0}, {}, true}, {1, {0.2, 0}, {}, true}};
    sc.step(0, t);
    EXPECT_TRUE(sc.book.record(0).owner.has_value());
    EXPECT_FALSE(sc.book.record(1).owner.has_value());
    EXPECT_EQ(sc.book.load(0), 1);
}

TEST(UpdateTracks, ClaimPrefersStrongestThenLowerId) {
    Scenario sc({at(0, {0, 0}), at(1, {1, 0}), at(2, {2, 0})});
    const std::vector<Target> t{{0, {1.5, 0}, {}, true}};
    sc.step(0, t);
    EXPECT_EQ(sc.book.record(0).owner, 1);  // sensors 1 and 2 tie at 0.75
}

TEST(UpdateTracks, ExitClosesTrack) {
    Scenario sc({at(0, {0, 0})});
    std::vector<Target> t{{0, {0.5, 0}, {}, true}};
    sc.step(0, t);
    t[0].alive = false;
    sc.step(1, t);
    const auto& rec = sc.book.record(0);
    EXPECT_TRUE(rec.exited);
    EXPECT_EQ(rec.exit_step, 1);
    EXPECT_FALSE(rec.owner);
    EXPECT_EQ(sc.book.load(0), 0);
    ASSERT_EQ(sc.events.back().kind, EventKind::Exit);
    EXPECT_EQ(sc.events.back().from_sensor, 0);
    EXPECT_EQ(rec.continuity(), 1.0);
}

TEST(UpdateTracks, RandomWalkInvariants) {
    // grid of sensors, many wandering targets: single ownership, capacity,
    // neighbor-only handoffs, owner always has the target in its zone
    std::vector<Sensor> sensors;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 4; ++j) sensors.push_back(at(i * 4 + j, {1.5 + 3.0 * i, 1.5 + 3.0 * j}, 2));
    }
    Scenario sc(sensors);
    Rng rng(8);
    std::vector<Target> ts;
    for (int i = 0; i < 25; ++i) ts.push_back({i, {rng.uniform(0, 18), rng.uniform(0, 12)}, {}, true});
    for (int k = 0; k < 600; ++k) {
        for (auto& t : ts) {
            t.vel = t.vel * 0.9 + Vec2{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
            t.pos += t.vel * 0.1;
            t.pos.x = std::clamp(t.pos.x, 0.0, 18.0);
            t.pos.y = std::clamp(t.pos.y, 0.0, 12.0);
        }
        const auto before = sc.events.size();
        sc.step(k, ts);
        std::vector<std::int64_t> load(sensors.size(), 0);
        for (const auto& [id, rec] : sc.book.records()) {
            if (!rec.owner) continue;
            ++load[*rec.owner];
            ASSERT_GT(zonal_strength(sensors[*rec.owner], ts[id]), 0.0);
        }
        for (const auto& s : sensors) {
            ASSERT_EQ(load[s.id], sc.book.load(s.id));
            ASSERT_LE(load[s.id], s.spec.capacity);
        }
        for (auto e = sc.events.begin() + before; e != sc.events.end(); ++e) {
            if (e->kind == EventKind::Handoff) ASSERT_TRUE(sc.graph.adjacent(e->from_sensor, e->to_sensor));
        }
    }
    std::size_t handoffs = 0;
    for (const auto& [id, rec] : sc.book.records()) {
        for (std::size_t i = 1; i < rec.handoffs.size(); ++i) EXPECT_LT(rec.handoffs[i - 1].step, rec.handoffs[i].step);
        handoffs += rec.handoffs.size();
    }
    EXPECT_EQ(handoffs, sc.count(EventKind::Handoff));
    EXPECT_GT(handoffs, 0u);
}

TEST(UpdateTracks, FrontCountersUseCoveredDepth) {
    Scenario sc({at(0, {0, 0})}, 1.0);
    const std::vector<Target> in{{0, {0.5, 0}, {}, true}};
    const std::vector<Target> out{{0, {1.5, 0}, {}, true}};
    sc.step(0, in);
    sc.step(1, out);
    const auto& rec = sc.book.record(0);
    EXPECT_EQ(rec.front_steps, 1);
    EXPECT_EQ(rec.front_observed_steps, 1);
    EXPECT_EQ(rec.total_in_field_steps, 2);
}

}  // namespace
}  // namespace swarmtrack
