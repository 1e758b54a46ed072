#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace swarmtrack {

/// Seeded 64-bit generator. Every consumer (target spawning, Monte Carlo
/// sampling, ...) draws from its own substream derived from the master seed
/// and a stream name, so adding draws in one module never shifts another.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng substream(std::uint64_t seed, std::string_view name, std::uint64_t index = 0);

    /// Uniform double in [0, 1) built from the top 53 bits; independent of the
    /// standard library's distribution implementations.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next() { return engine_(); }

    bool operator==(const Rng&) const = default;

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace swarmtrack
