#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/error.hpp"
#include "core/geometry.hpp"

namespace swarmtrack {
namespace {

// Largest distance from any grid point of the field to its nearest center.
// Test-side oracle; independent of the Monte Carlo path.
double worst_gap(const std::vector<Vec2>& centers, const Rect& field, int resolution) {
    double worst = 0.0;
    for (int i = 0; i <= resolution; ++i) {
        for (int j = 0; j <= resolution; ++j) {
            const Vec2 p{field.length * i / resolution, field.breadth * j / resolution};
            double best = INFINITY;
            for (const auto& c : centers) best = std::min(best, distance(p, c));
            worst = std::max(worst, best);
        }
    }
    return worst;
}

TEST(DiskArea, MatchesPublishedZoneAreas) {
    EXPECT_NEAR(disk_area(2.0), 12.566, 0.001);
    EXPECT_NEAR(disk_area(3.0), 28.274, 0.001);
    EXPECT_NEAR(disk_area(1.0), 3.142, 0.001);
}

TEST(DiskArea, RejectsNonPositiveRadius) {
    EXPECT_THROW(disk_area(0.0), Error);
    EXPECT_THROW(disk_area(-1.0), Error);
    EXPECT_THROW(disk_area(NAN), Error);
}

TEST(DiskArea, StrictlyIncreasing) {
    double prev = 0.0;
    for (double r = 0.01; r < 50.0; r *= 1.37) {
        const double a = disk_area(r);
        EXPECT_GT(a, prev);
        prev = a;
    }
}

TEST(Rect, MakeValidates) {
    EXPECT_DOUBLE_EQ(Rect::make(50, 20).area(), 1000.0);
    EXPECT_THROW(Rect::make(0, 1), Error);
    EXPECT_THROW(Rect::make(1, -2), Error);
    EXPECT_THROW(Rect::make(INFINITY, 2), Error);
}

TEST(CoverRectangle, SingleCenterWhenLatticeSpacingExceedsField) {
    const auto c = cover_rectangle(Rect{2.8, 2.8}, 2.0);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_NEAR(c[0].x, 1.4, 1e-12);
    EXPECT_NEAR(c[0].y, 1.4, 1e-12);
}

TEST(CoverRectangle, TenByTenNeedsFourByFour) {
    EXPECT_EQ(cover_rectangle(Rect{10, 10}, 2.0).size(), 16u);
    EXPECT_EQ(cover_count(Rect{10, 10}, 2.0), 16);
}

TEST(CoverRectangle, CountMatchesCeilFormulaAndCoversEveryGridPoint) {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> side(0.5, 60.0);
    std::uniform_real_distribution<double> radius(0.3, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Rect f{side(gen), side(gen)};
        const double r = radius(gen);
        const double s = r * std::numbers::sqrt2;
        const auto centers = cover_rectangle(f, r);
        const auto expected = static_cast<std::size_t>(std::ceil(f.length / s) * std::ceil(f.breadth / s));
        ASSERT_EQ(centers.size(), expected);
        for (const auto& c : centers) EXPECT_TRUE(f.contains(c));
        if (trial < 40) EXPECT_LE(worst_gap(centers, f, 80), r * (1.0 + 1e-12));
    }
}

TEST(CoverageFraction, EmptyCoverIsZero) {
    EXPECT_EQ(coverage_fraction({}, 1.0, Rect{5, 5}, 1, 1000), 0.0);
}

TEST(CoverageFraction, DiskContainingFieldIsOne) {
    const Rect f{6, 8};
    const Vec2 center{3, 4};
    EXPECT_EQ(coverage_fraction(std::span(&center, 1), 5.0, f, 9, 10'000), 1.0);
}

TEST(CoverageFraction, CoverRectangleOutputIsCovered) {
    const Rect f{10, 10};
    const auto c = cover_rectangle(f, 2.0);
    EXPECT_GE(coverage_fraction(c, 2.0, f, 42, 1'000'000), 0.99);
}

TEST(CoverageFraction, HalfPlaneDiskEstimate) {
    // quarter disk of radius 1 in the unit square: pi/4
    const Vec2 origin{0, 0};
    const double est = coverage_fraction(std::span(&origin, 1), 1.0, Rect{1, 1}, 3, 400'000);
    EXPECT_NEAR(est, std::numbers::pi / 4.0, 0.005);
}

TEST(CoverageFraction, DeterministicAndWorkerIndependent) {
    const Rect f{20, 12};
    const std::vector<Vec2> c{{3, 3}, {10, 6}, {17, 2}};
    const double one = coverage_fraction(c, 3.0, f, 77, 50'000, 1);
    EXPECT_EQ(one, coverage_fraction(c, 3.0, f, 77, 50'000, 1));
    EXPECT_EQ(one, coverage_fraction(c, 3.0, f, 77, 50'000, 4));
    EXPECT_EQ(one, coverage_fraction(c, 3.0, f, 77, 50'000, 64));
}

TEST(CoverageFraction, MonotoneUnderAddingCenters) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> ux(0, 30), uy(0, 15);
    const Rect f{30, 15};
    std::vector<Vec2> c;
    double prev = 0.0;
    for (int i = 0; i < 25; ++i) {
        c.push_back({ux(gen), uy(gen)});
        const double cur = coverage_fraction(c, 2.5, f, 123, 20'000);
        EXPECT_GE(cur, prev);
        prev = cur;
    }
}

TEST(CoverageFraction, RejectsZeroSamples) {
    const Vec2 c{1, 1};
    EXPECT_THROW(coverage_fraction(std::span(&c, 1), 1.0, Rect{2, 2}, 1, 0), Error);
}

}  // namespace
}  // namespace swarmtrack
