#pragma once

#include <cstdint>
#include <random>

namespace cmela {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator for (master seed, stream index). Every walk, run and sample plan
/// takes its own stream, so results never depend on scheduling.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

/// Uniform double in [0, 1) from the top 53 bits. Spelled out so the stream is identical
/// across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by rejection.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % n;
}

// Well-known stream indices so unrelated consumers of one master seed never collide.
namespace streams {
inline constexpr std::uint64_t kSpaceFill = 1;
inline constexpr std::uint64_t kInfoContent = 2;
inline constexpr std::uint64_t kTourStart = 3;
inline constexpr std::uint64_t kAdaptiveWalk = 4;
inline constexpr std::uint64_t kRandomWalkBase = 1000;
}  // namespace streams

}  // namespace cmela
