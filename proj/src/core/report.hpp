#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "engine.hpp"
#include "planner.hpp"

namespace swarmtrack {

/// One line of the sensor-count table: inputs, zone areas, and the plan.
struct TableRow {
    double area = 0.0;
    double r = 0.0;
    double big_r = 0.0;
    double primary_area = 0.0;
    double secondary_area = 0.0;
    std::int64_t n = 0;
    double k = 0.0;
    CaseLabel label = CaseLabel::Case4;
};

inline constexpr std::string_view kTableHeader = "area,r,R,primary_area,secondary_area,n,k,case";

/// Plans a square field of `area` and fills a row.
TableRow compute_row(double area, double r, double big_r);

/// `area,r,R,primary_area,secondary_area,n,k,case` with zone areas to three
/// decimals and k to two.
std::string format_row(const TableRow& row);

/// The published 17-row table, in its original order.
std::span<const TableRow> reference_table();

/// Reads rows in format_row's layout; a leading header line is skipped.
std::vector<TableRow> parse_table_csv(std::string_view text);

struct TableCheck {
    std::vector<TableRow> computed;
    std::vector<std::string> mismatches;  // one human-readable diff line per bad field

    bool ok() const { return mismatches.empty(); }
};

/// Recomputes every expected row from its (area, r, R) inputs and compares:
/// n and case exactly, k within 0.005, zone areas within 0.001.
TableCheck check_table(std::span<const TableRow> expected);

std::string table_csv(std::span<const TableRow> rows);

std::string sweep_csv(std::span<const SweepRow> rows);

enum class SweepAxis { K, N };

/// Static line chart of k (or n) against the swept quantity. The x axis
/// switches to log scale when the data spans three or more decades.
std::string sweep_svg(std::span<const SweepRow> rows, std::string_view x_label, SweepAxis y);

std::string metrics_csv(const World& world);
std::string events_csv(const World& world);
std::string summary_line(const Summary& s);

/// Writes `text` to `path`, throwing an I/O error on failure.
void write_text(const std::filesystem::path& path, std::string_view text);

/// Writes metrics.csv and events.csv into `dir` (created if missing).
void write_outputs(const World& world, const std::filesystem::path& dir);

}  // namespace swarmtrack
