#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace swarmtrack {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }

    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
inline Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Axis-aligned field anchored at the origin. x runs along `length` (entry at
/// x = 0, exit at x = length), y along `breadth`.
struct Rect {
    double length = 0.0;
    double breadth = 0.0;

    double area() const { return length * breadth; }
    bool contains(Vec2 p) const { return p.x >= 0.0 && p.x <= length && p.y >= 0.0 && p.y <= breadth; }

    /// Throws a domain error unless both sides are positive and finite.
    static Rect make(double length, double breadth);
};

struct Disk {
    Vec2 center;
    double radius = 0.0;

    bool contains(Vec2 p) const { return (p - center).norm2() <= radius * radius; }
};

/// pi * r^2; r must be positive.
double disk_area(double r);

/// Monte Carlo estimate of the fraction of `field` lying within `r` of some
/// center. Samples are split into fixed blocks with their own substreams, so
/// the estimate depends only on (seed, samples) and not on `workers`.
double coverage_fraction(std::span<const Vec2> centers, double r, const Rect& field,
                         std::uint64_t sample_seed, std::uint64_t samples = 100'000, int workers = 1);

/// Square-lattice covering of `field` by disks of radius r: ceil(l/(r*sqrt2))
/// columns by ceil(b/(r*sqrt2)) rows, one center per lattice cell. Cells are
/// stretched evenly over the field so each is at most r*sqrt2 on a side.
std::vector<Vec2> cover_rectangle(const Rect& field, double r);

/// Lattice size used by cover_rectangle, without materializing the centers.
std::int64_t cover_count(const Rect& field, double r);

}  // namespace swarmtrack
