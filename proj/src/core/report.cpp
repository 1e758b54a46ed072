#include "report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "error.hpp"

namespace swarmtrack {

namespace {

constexpr double kKTolerance = 0.005;
constexpr double kAreaTolerance = 0.001;

TableRow published(double area, double r, double big_r, double primary, double secondary, std::int64_t n, double k,
                   CaseLabel label) {
    return {area, r, big_r, primary, secondary, n, k, label};
}

const std::vector<TableRow> kPublished = {
    published(4, 2, 4, 12.566, 50.265, 1, 0.32, CaseLabel::Case1),
    published(10, 2, 4, 12.566, 50.265, 1, 0.8, CaseLabel::Case3),
    published(20, 2, 4, 12.566, 50.265, 2, 0.8, CaseLabel::Case3),
    published(40, 2, 4, 12.566, 50.265, 4, 0.8, CaseLabel::Case3),
    published(50, 2, 4, 12.566, 50.265, 4, 0.99, CaseLabel::Case3),
    published(80, 2, 4, 12.566, 50.265, 6, 1.06, CaseLabel::Case3),
    published(90, 2, 4, 12.566, 50.265, 6, 1.19, CaseLabel::Case3),
    published(160, 2, 4, 12.566, 50.265, 10, 1.27, CaseLabel::Case3),
    published(210, 2, 4, 12.566, 50.265, 12, 1.39, CaseLabel::Case3),
    published(250, 2, 4, 12.566, 50.265, 14, 1.42, CaseLabel::Case3),
    published(1000, 1, 3, 3.142, 28.274, 80, 3.98, CaseLabel::Case3),
    published(1000, 2, 4, 12.566, 50.265, 54, 1.47, CaseLabel::Case3),
    published(1000, 3, 5, 28.274, 78.54, 40, 0.88, CaseLabel::Case3),
    published(1000, 4, 6, 50.265, 113.097, 32, 0.62, CaseLabel::Case3),
    published(1000, 5, 7, 78.54, 153.938, 28, 0.45, CaseLabel::Case1),
    published(1000, 6, 8, 113.097, 201.062, 24, 0.37, CaseLabel::Case1),
    published(1000, 7, 9, 153.938, 254.469, 20, 0.32, CaseLabel::Case1),
};

double parse_number(std::string_view s, int line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(ErrorKind::Config, fmt::format("table line {}: bad number '{}'", line, s));
    }
    return v;
}

CaseLabel parse_case(std::string_view s, int line) {
    for (auto c : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4}) {
        if (s == to_string(c)) return c;
    }
    fail(ErrorKind::Config, fmt::format("table line {}: bad case label '{}'", line, s));
}

std::string num(double v) { return fmt::format("{:.10g}", v); }

std::string escape_xml(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

TableRow compute_row(double area, double r, double big_r) {
    const SensorSpec spec{r, big_r, 1};
    const Plan plan = optimal_plan(square_field(area), spec);
    return {area, r, big_r, disk_area(r), disk_area(big_r), plan.n, plan.k, plan.label};
}

std::string format_row(const TableRow& row) {
    return fmt::format("{},{},{},{:.3f},{:.3f},{},{:.2f},{}", num(row.area), num(row.r), num(row.big_r),
                       row.primary_area, row.secondary_area, row.n, row.k, to_string(row.label));
}

std::span<const TableRow> reference_table() { return kPublished; }

std::vector<TableRow> parse_table_csv(std::string_view text) {
    std::vector<TableRow> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line == kTableHeader) continue;

        std::array<std::string_view, 8> cells;
        std::size_t count = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            if (count == cells.size()) fail(ErrorKind::Config, fmt::format("table line {}: too many columns", line_no));
            cells[count++] = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (count != cells.size()) fail(ErrorKind::Config, fmt::format("table line {}: expected 8 columns", line_no));
        TableRow row;
        row.area = parse_number(cells[0], line_no);
        row.r = parse_number(cells[1], line_no);
        row.big_r = parse_number(cells[2], line_no);
        row.primary_area = parse_number(cells[3], line_no);
        row.secondary_area = parse_number(cells[4], line_no);
        row.n = static_cast<std::int64_t>(parse_number(cells[5], line_no));
        row.k = parse_number(cells[6], line_no);
        row.label = parse_case(cells[7], line_no);
        rows.push_back(row);
    }
    return rows;
}

TableCheck check_table(std::span<const TableRow> expected) {
    TableCheck check;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& want = expected[i];
        const auto got = compute_row(want.area, want.r, want.big_r);
        check.computed.push_back(got);
        const auto where = fmt::format("row {} (A={}, r={}, R={})", i + 1, num(want.area), num(want.r), num(want.big_r));
        if (got.n != want.n) check.mismatches.push_back(fmt::format("{}: n {} != expected {}", where, got.n, want.n));
        if (std::abs(got.k - want.k) > kKTolerance) {
            check.mismatches.push_back(fmt::format("{}: k {:.4f} != expected {}", where, got.k, want.k));
        }
        if (std::abs(got.primary_area - want.primary_area) > kAreaTolerance) {
            check.mismatches.push_back(
                fmt::format("{}: primary area {:.4f} != expected {}", where, got.primary_area, want.primary_area));
        }
        if (std::abs(got.secondary_area - want.secondary_area) > kAreaTolerance) {
            check.mismatches.push_back(
                fmt::format("{}: secondary area {:.4f} != expected {}", where, got.secondary_area, want.secondary_area));
        }
        if (got.label != want.label) {
            check.mismatches.push_back(
                fmt::format("{}: case {} != expected {}", where, to_string(got.label), to_string(want.label)));
        }
    }
    return check;
}

std::string table_csv(std::span<const TableRow> rows) {
    std::string out(kTableHeader);
    out += '\n';
    for (const auto& row : rows) {
        out += format_row(row);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::string out = "x,n,k,case\n";
    for (const auto& row : rows) {
        out += fmt::format("{},{},{:.6f},{}\n", num(row.x), row.plan.n, row.plan.k, to_string(row.plan.label));
    }
    return out;
}

std::string sweep_svg(std::span<const SweepRow> rows, std::string_view x_label, SweepAxis y) {
    constexpr double width = 640.0;
    constexpr double height = 420.0;
    constexpr double left = 70.0;
    constexpr double right = 20.0;
    constexpr double top = 30.0;
    constexpr double bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    auto y_of = [y](const SweepRow& r) { return y == SweepAxis::K ? r.plan.k : static_cast<double>(r.plan.n); };
    double x_min = rows.front().x;
    double x_max = rows.front().x;
    double y_max = y_of(rows.front());
    for (const auto& r : rows) {
        x_min = std::min(x_min, r.x);
        x_max = std::max(x_max, r.x);
        y_max = std::max(y_max, y_of(r));
    }
    const bool log_x = x_min > 0.0 && x_max / x_min >= 1000.0;
    auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
    const double lo = tx(x_min);
    const double hi = tx(x_max) > lo ? tx(x_max) : lo + 1.0;
    const double y_top = y_max > 0.0 ? y_max * 1.1 : 1.0;
    auto px = [&](double v) { return left + (tx(v) - lo) / (hi - lo) * plot_w; };
    auto py = [&](double v) { return top + plot_h - v / y_top * plot_h; };

    const std::string y_name = y == SweepAxis::K ? "K value" : "number of sensors";
    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<line x1=\"{2}\" y1=\"{3}\" x2=\"{4}\" y2=\"{3}\" stroke=\"black\"/>\n"
        "<line x1=\"{2}\" y1=\"{5}\" x2=\"{2}\" y2=\"{3}\" stroke=\"black\"/>\n",
        width, height, left, top + plot_h, left + plot_w, top);

    for (int i = 0; i <= 5; ++i) {
        const double fy = y_top * i / 5.0;
        svg += fmt::format(
            "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#ddd\"/>"
            "<text x=\"{3:.2f}\" y=\"{4:.2f}\" font-size=\"11\" text-anchor=\"end\">{5:.3g}</text>\n",
            left, py(fy), left + plot_w, left - 6, py(fy) + 4, fy);
        const double fx = lo + (hi - lo) * i / 5.0;
        const double label = log_x ? std::pow(10.0, fx) : fx;
        svg += fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\" text-anchor=\"middle\">{:.3g}</text>\n",
            left + (fx - lo) / (hi - lo) * plot_w, top + plot_h + 16, label);
    }

    std::string points;
    for (const auto& r : rows) points += fmt::format("{:.2f},{:.2f} ", px(r.x), py(y_of(r)));
    if (!points.empty()) points.pop_back();
    svg += fmt::format("<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"{}\"/>\n", points);
    for (const auto& r : rows) {
        svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"#1f5fa8\"/>\n", px(r.x), py(y_of(r)));
    }
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"13\" text-anchor=\"middle\">{}{}</text>\n", left + plot_w / 2,
        height - 18, escape_xml(x_label), log_x ? " (log scale)" : "");
    svg += fmt::format(
        "<text x=\"18\" y=\"{0:.2f}\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0:.2f})\">{1}</text>\n",
        top + plot_h / 2, y_name);
    svg += "</svg>\n";
    return svg;
}

std::string metrics_csv(const World& world) {
    std::string out = "step,in_field,owned,coverage_ratio,handoffs_cum\n";
    for (const auto& m : world.metrics()) {
        out += fmt::format("{},{},{},{:.6f},{}\n", m.step, m.in_field, m.owned, m.coverage_ratio, m.handoffs_cum);
    }
    return out;
}

std::string events_csv(const World& world) {
    std::string out = "step,kind,target_id,from_sensor,to_sensor\n";
    for (const auto& e : world.events()) {
        out += fmt::format("{},{},{},{},{}\n", e.step, to_string(e.kind), e.target_id, e.from_sensor, e.to_sensor);
    }
    return out;
}

std::string summary_line(const Summary& s) {
    return fmt::format(
        "steps={} spawned={} exited={} mean_continuity={:.6f} front_continuity={:.6f} total_handoffs={} missed={}",
        s.steps, s.spawned, s.exited, s.mean_continuity, s.front_continuity, s.total_handoffs, s.missed);
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) fail(ErrorKind::Io, "failed writing " + path.string());
}

void write_outputs(const World& world, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorKind::Io, "cannot create output directory " + dir.string() + ": " + ec.message());
    write_text(dir / "metrics.csv", metrics_csv(world));
    write_text(dir / "events.csv", events_csv(world));
}

}  // namespace swarmtrack
