#pragma once

#include <filesystem>
#include <string_view>

#include "engine.hpp"

namespace swarmtrack {

/// Parses an INI-style scenario document:
///
///     [scenario]
///     length = 50
///     breadth = 20
///     primary_radius = 2
///     secondary_radius = 4
///     sensor_count = auto      # or an integer
///     target_count = 20
///     wave_size = 4            # optional: release targets in waves ...
///     wave_interval = 150      # ... of wave_size every wave_interval steps
///     steps = 2000
///     dt = 0.1
///     seed = 7
///
///     [flock]     neighbor_radius, sep_radius, w_cohesion, w_alignment,
///                 w_separation, w_drift, v_max, v_cruise, spawn_jitter
///     [tracking]  capacity, window, miss_threshold
///
/// Keys not listed are rejected, as are duplicate keys and non-finite
/// numbers. Numbers always use '.' as the decimal separator. Lines starting
/// with '#' or ';' are comments. Missing keys keep SimConfig defaults.
SimConfig parse_scenario(std::string_view text);

SimConfig load_scenario(const std::filesystem::path& path);

}  // namespace swarmtrack
