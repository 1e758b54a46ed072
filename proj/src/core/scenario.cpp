#include "scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "error.hpp"

namespace swarmtrack {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad(int line, const std::string& what) {
    fail(ErrorKind::Config, "scenario line " + std::to_string(line) + ": " + what);
}

double to_double(std::string_view v, int line) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out)) bad(line, "not a finite number: '" + std::string(v) + "'");
    return out;
}

template <typename Int>
Int to_int(std::string_view v, int line) {
    Int out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end) bad(line, "not an integer: '" + std::string(v) + "'");
    return out;
}

struct WaveSpec {
    std::optional<int> size;
    std::optional<std::int64_t> interval;
};

using Setter = std::function<void(SimConfig&, WaveSpec&, std::string_view, int)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"scenario.length", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.field.length = to_double(v, l); }},
        {"scenario.breadth", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.field.breadth = to_double(v, l); }},
        {"scenario.primary_radius",
         [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.spec.primary_radius = to_double(v, l); }},
        {"scenario.secondary_radius",
         [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.spec.secondary_radius = to_double(v, l); }},
        {"scenario.sensor_count",
         [](SimConfig& c, WaveSpec&, std::string_view v, int l) {
             if (v == "auto") {
                 c.sensor_count.reset();
             } else {
                 c.sensor_count = to_int<std::int64_t>(v, l);
             }
         }},
        {"scenario.target_count", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.target_count = to_int<int>(v, l); }},
        {"scenario.wave_size", [](SimConfig&, WaveSpec& w, std::string_view v, int l) { w.size = to_int<int>(v, l); }},
        {"scenario.wave_interval",
         [](SimConfig&, WaveSpec& w, std::string_view v, int l) { w.interval = to_int<std::int64_t>(v, l); }},
        {"scenario.steps", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.steps = to_int<std::int64_t>(v, l); }},
        {"scenario.dt", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.dt = to_double(v, l); }},
        {"scenario.seed", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.seed = to_int<std::uint64_t>(v, l); }},
        {"flock.neighbor_radius",
         [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.neighbor_radius = to_double(v, l); }},
        {"flock.sep_radius", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.sep_radius = to_double(v, l); }},
        {"flock.w_cohesion", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.w_cohesion = to_double(v, l); }},
        {"flock.w_alignment", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.w_alignment = to_double(v, l); }},
        {"flock.w_separation",
         [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.w_separation = to_double(v, l); }},
        {"flock.w_drift", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.w_drift = to_double(v, l); }},
        {"flock.v_max", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.v_max = to_double(v, l); }},
        {"flock.v_cruise", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.v_cruise = to_double(v, l); }},
        {"flock.spawn_jitter", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.flock.spawn_jitter = to_double(v, l); }},
        {"tracking.capacity", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.spec.capacity = to_int<int>(v, l); }},
        {"tracking.window", [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.window = to_int<int>(v, l); }},
        {"tracking.miss_threshold",
         [](SimConfig& c, WaveSpec&, std::string_view v, int l) { c.miss_threshold = to_double(v, l); }},
    };
    return table;
}

}  // namespace

SimConfig parse_scenario(std::string_view text) {
    SimConfig config;
    WaveSpec waves;
    std::string section;
    std::set<std::string> seen;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto line = raw;
        if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') bad(line_no, "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "scenario" && section != "flock" && section != "tracking") {
                bad(line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) bad(line_no, "expected 'key = value'");
        if (section.empty()) bad(line_no, "key outside of any section");
        const auto key = section + "." + std::string(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) bad(line_no, "unknown key '" + key + "'");
        if (!seen.insert(key).second) bad(line_no, "duplicate key '" + key + "'");
        if (value.empty()) bad(line_no, "empty value for '" + key + "'");
        it->second(config, waves, value, line_no);
    }

    if (waves.size || waves.interval) {
        const int size = waves.size.value_or(config.target_count);
        const std::int64_t interval = waves.interval.value_or(0);
        if (size < 1) fail(ErrorKind::Config, "wave_size must be at least 1");
        if (interval < 0) fail(ErrorKind::Config, "wave_interval must be non-negative");
        int left = config.target_count;
        for (std::int64_t i = 0; left > 0; ++i) {
            const int n = std::min(size, left);
            config.spawn_schedule.push_back({i * interval, n});
            left -= n;
        }
    }

    try {
        config.validate();
    } catch (const Error& e) {
        fail(ErrorKind::Config, e.what());
    }
    return config;
}

SimConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot read scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace swarmtrack
