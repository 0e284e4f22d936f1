#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace diffmax {

// Purpose tags for deriving independent substreams from one master seed.
// A run consumes randomness through per-(purpose, slot) generators, so a
// config edit that adds draws in one stage never shifts another stage.
inline constexpr std::uint64_t kChannelStream = 0x11;
inline constexpr std::uint64_t kArrivalStream = 0x22;
inline constexpr std::uint64_t kMacStream = 0x33;
inline constexpr std::uint64_t kTopologyStream = 0x44;

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t purpose,
                                    std::uint64_t index = 0) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ purpose);
  h = mix64(h ^ index);
  return h;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased draw in [0, n). Rejection sampling keeps the result identical
// across standard libraries, unlike std::uniform_int_distribution.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

}  // namespace diffmax
