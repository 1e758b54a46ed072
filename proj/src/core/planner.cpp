#include "planner.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace swarmtrack {

void SensorSpec::validate() const {
    const double r = primary_radius;
    const double big_r = secondary_radius;
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(big_r) || !(r < big_r)) {
        fail(ErrorKind::Domain, "sensor radii must satisfy 0 < r < R (got r=" + std::to_string(r) +
                                    ", R=" + std::to_string(big_r) + ")");
    }
    if (capacity < 1) fail(ErrorKind::Domain, "sensor capacity must be at least 1");
}

std::string_view to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        case CaseLabel::Case4: return "Case4";
    }
    return "Case?";
}

std::int64_t required_sensor_count(const Rect& field, const SensorSpec& spec) {
    spec.validate();
    const double r = spec.primary_radius;
    const double big_r = spec.secondary_radius;
    const double raw = 2.0 * field.area() / (std::numbers::pi * (big_r * big_r - r * r));
    auto n = static_cast<std::int64_t>(std::ceil(raw));
    if (n < 1) n = 1;
    if (n > 1 && n % 2 != 0) ++n;
    return n;
}

double k_value(double area, std::int64_t n, double r) {
    if (n < 1) fail(ErrorKind::Domain, "k_value needs at least one sensor");
    if (!(area > 0.0)) fail(ErrorKind::Domain, "k_value needs a positive area");
    return area / (static_cast<double>(n) * disk_area(r));
}

CaseLabel classify(const Rect& field, const SensorSpec& spec, std::int64_t n) {
    spec.validate();
    const double area = field.area();
    const double k = k_value(area, n, spec.primary_radius);
    if (k <= kSurplusThreshold) return CaseLabel::Case2;
    if (k <= kSufficientThreshold) return CaseLabel::Case1;

    // Rear relays must sit close enough for neighbouring secondary zones to overlap.
    const double rear_area = area * (2.0 * k - 1.0) / (2.0 * k);
    const auto relays = std::max<std::int64_t>(1, n / 2);
    const double pitch = std::sqrt(rear_area / static_cast<double>(relays));
    return pitch <= 2.0 * spec.secondary_radius ? CaseLabel::Case3 : CaseLabel::Case4;
}

Plan plan_for_count(const Rect& field, const SensorSpec& spec, std::int64_t n) {
    spec.validate();
    Plan plan;
    plan.field = field;
    plan.spec = spec;
    plan.n = n;
    plan.k = k_value(field.area(), n, spec.primary_radius);
    plan.label = classify(field, spec, n);
    if (plan.label == CaseLabel::Case3) plan.front_depth = field.length / (2.0 * plan.k);
    if (plan.label == CaseLabel::Case2) {
        plan.surplus = std::max<std::int64_t>(0, n - cover_count(field, spec.primary_radius));
    }
    return plan;
}

Plan optimal_plan(const Rect& field, const SensorSpec& spec) {
    return plan_for_count(field, spec, required_sensor_count(field, spec));
}

Rect square_field(double area) {
    const double side = std::sqrt(area);
    return Rect::make(side, side);
}

std::vector<SweepRow> sweep_area(const SensorSpec& spec, std::span<const double> areas) {
    if (areas.empty()) fail(ErrorKind::Domain, "area sweep needs at least one area");
    std::vector<SweepRow> rows;
    rows.reserve(areas.size());
    for (double a : areas) rows.push_back({a, optimal_plan(square_field(a), spec)});
    return rows;
}

std::vector<SweepRow> sweep_radius(double area, std::span<const SensorSpec> specs) {
    if (specs.empty()) fail(ErrorKind::Domain, "radius sweep needs at least one sensor spec");
    const Rect field = square_field(area);
    std::vector<SweepRow> rows;
    rows.reserve(specs.size());
    for (const auto& s : specs) rows.push_back({s.primary_radius, optimal_plan(field, s)});
    return rows;
}

}  // namespace swarmtrack
