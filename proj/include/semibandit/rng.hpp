#pragma once

#include <cstdint>

namespace semibandit {

// Counter-based randomness: every draw is a pure function of (seed, slot, arm).
// There is no mutable stream, so replaying a round with a different strategy
// never shifts any other arm's draws, and traces are identical across
// platforms and execution orders.
//
// The mixer is the splitmix64 finalizer (Steele, Lea, Flood 2014):
//   gamma = 0x9e3779b97f4a7c15  (2^64 / golden ratio)
//   m1    = 0xbf58476d1ce4e5b9
//   m2    = 0x94d049bb133111eb

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0,1): top 53 bits of the mixed counter, scaled by 2^-53.
// The conversion is exact, so cross-platform determinism reduces to integer ops.
inline double uniform01(std::uint64_t seed, std::uint64_t slot, std::uint64_t arm) {
    const std::uint64_t h = mix64(mix64(mix64(seed) ^ slot) ^ arm);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

} // namespace semibandit
