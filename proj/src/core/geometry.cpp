#include "geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>
#include <thread>

#include "error.hpp"
#include "rng.hpp"

namespace swarmtrack {

namespace {

constexpr std::uint64_t kCoverageBlocks = 64;

struct LatticeShape {
    std::int64_t cols;
    std::int64_t rows;
};

LatticeShape lattice_shape(const Rect& field, double r) {
    const double s = r * std::numbers::sqrt2;
    return {static_cast<std::int64_t>(std::ceil(field.length / s)),
            static_cast<std::int64_t>(std::ceil(field.breadth / s))};
}

}  // namespace

Rect Rect::make(double length, double breadth) {
    if (!(length > 0.0) || !(breadth > 0.0) || !std::isfinite(length) || !std::isfinite(breadth)) {
        fail(ErrorKind::Domain, "field sides must be positive and finite (got " + std::to_string(length) +
                                    " x " + std::to_string(breadth) + ")");
    }
    return Rect{length, breadth};
}

double disk_area(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        fail(ErrorKind::Domain, "disk radius must be positive, got " + std::to_string(r));
    }
    return std::numbers::pi * r * r;
}

double coverage_fraction(std::span<const Vec2> centers, double r, const Rect& field,
                         std::uint64_t sample_seed, std::uint64_t samples, int workers) {
    if (samples < 1) fail(ErrorKind::Domain, "coverage_fraction needs at least one sample");
    disk_area(r);
    if (centers.empty()) return 0.0;

    const double r2 = r * r;
    std::vector<std::uint64_t> hits(kCoverageBlocks, 0);

    // Bucket centers on an r-sized grid: a sample can only be within r of
    // centers in its own or an adjacent bucket.
    const auto nx = static_cast<std::int64_t>(std::ceil(field.length / r)) + 1;
    const auto ny = static_cast<std::int64_t>(std::ceil(field.breadth / r)) + 1;
    std::vector<std::vector<Vec2>> buckets(static_cast<std::size_t>(nx * ny));
    auto bucket_of = [&](double v, std::int64_t n) {
        return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor(v / r)), 0, n - 1);
    };
    for (const Vec2& c : centers) {
        buckets[bucket_of(c.x, nx) * ny + bucket_of(c.y, ny)].push_back(c);
    }
    auto covered = [&](Vec2 p) {
        const auto bx = bucket_of(p.x, nx);
        const auto by = bucket_of(p.y, ny);
        for (auto i = std::max<std::int64_t>(0, bx - 1); i <= std::min(nx - 1, bx + 1); ++i) {
            for (auto j = std::max<std::int64_t>(0, by - 1); j <= std::min(ny - 1, by + 1); ++j) {
                for (const Vec2& c : buckets[i * ny + j]) {
                    if ((p - c).norm2() <= r2) return true;
                }
            }
        }
        return false;
    };

    auto run_block = [&](std::uint64_t block) {
        const std::uint64_t begin = samples * block / kCoverageBlocks;
        const std::uint64_t end = samples * (block + 1) / kCoverageBlocks;
        Rng rng = Rng::substream(sample_seed, "coverage", block);
        std::uint64_t count = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const Vec2 p{rng.uniform() * field.length, rng.uniform() * field.breadth};
            if (covered(p)) ++count;
        }
        hits[block] = count;
    };

    const int n_workers = std::clamp(workers, 1, static_cast<int>(kCoverageBlocks));
    if (n_workers == 1) {
        for (std::uint64_t b = 0; b < kCoverageBlocks; ++b) run_block(b);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < n_workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t b = w; b < kCoverageBlocks; b += n_workers) run_block(b);
            });
        }
    }

    std::uint64_t total = 0;
    for (auto h : hits) total += h;
    return static_cast<double>(total) / static_cast<double>(samples);
}

std::int64_t cover_count(const Rect& field, double r) {
    disk_area(r);  // validates r
    const auto shape = lattice_shape(field, r);
    return shape.cols * shape.rows;
}

std::vector<Vec2> cover_rectangle(const Rect& field, double r) {
    disk_area(r);
    const auto [cols, rows] = lattice_shape(field, r);
    const double dx = field.length / static_cast<double>(cols);
    const double dy = field.breadth / static_cast<double>(rows);

    std::vector<Vec2> centers;
    centers.reserve(static_cast<std::size_t>(cols * rows));
    for (std::int64_t i = 0; i < cols; ++i) {
        for (std::int64_t j = 0; j < rows; ++j) {
            centers.push_back({(static_cast<double>(i) + 0.5) * dx, (static_cast<double>(j) + 0.5) * dy});
        }
    }
    return centers;
}

}  // namespace swarmtrack
