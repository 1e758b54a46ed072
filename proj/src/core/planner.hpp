#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace swarmtrack {

/// Dual-zone sensor: targets are sensed inside the primary radius, peer
/// sensors inside the secondary radius.
struct SensorSpec {
    double primary_radius = 0.0;
    double secondary_radius = 0.0;
    int capacity = 5;

    /// Throws a domain error unless 0 < r < R and capacity >= 1.
    void validate() const;
};

enum class CaseLabel { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

std::string_view to_string(CaseLabel c);

struct Plan {
    Rect field;
    SensorSpec spec;
    std::int64_t n = 0;
    double k = 0.0;
    CaseLabel label = CaseLabel::Case4;
    std::optional<double> front_depth;  // Case 3 only: l / (2k)
    std::int64_t surplus = 0;           // Case 2 only: sensors beyond the covering lattice
};

// K-value thresholds separating the fleet-sufficiency cases.
inline constexpr double kSurplusThreshold = 0.25;
inline constexpr double kSufficientThreshold = 0.5;

/// ceil(2A / (pi (R^2 - r^2))), bumped to the next even integer when it is
/// odd and above one so the fleet can split into equal halves.
std::int64_t required_sensor_count(const Rect& field, const SensorSpec& spec);

/// A / (n pi r^2).
double k_value(double area, std::int64_t n, double r);

CaseLabel classify(const Rect& field, const SensorSpec& spec, std::int64_t n);

/// Plan for a caller-chosen fleet size.
Plan plan_for_count(const Rect& field, const SensorSpec& spec, std::int64_t n);

/// Plan using required_sensor_count.
Plan optimal_plan(const Rect& field, const SensorSpec& spec);

struct SweepRow {
    double x = 0.0;  // the swept quantity (area or primary radius)
    Plan plan;
};

/// Square field of the given area, the shape used when only A is known.
Rect square_field(double area);

std::vector<SweepRow> sweep_area(const SensorSpec& spec, std::span<const double> areas);
std::vector<SweepRow> sweep_radius(double area, std::span<const SensorSpec> specs);

}  // namespace swarmtrack
