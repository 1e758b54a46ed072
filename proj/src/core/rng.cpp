#include "rng.hpp"

namespace swarmtrack {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::string_view name, std::uint64_t index) {
    // FNV-1a over the stream name
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return Rng(splitmix64(splitmix64(seed ^ h) + index));
}

}  // namespace swarmtrack
