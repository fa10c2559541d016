#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace graphdist {

// Stateless 64-bit mixer (splitmix64). Used to derive independent substream
// seeds from (seed, stream, index) tuples so that per-row / per-task RNGs
// never depend on a shared stream order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) + index);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(seed, stream, index));
}

// Uniform double in [0, 1). Hand-rolled so results do not depend on the
// standard library's distribution implementation.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound). bound >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
  const std::uint64_t rem =
      std::numeric_limits<std::uint64_t>::max() % bound + 1;
  const std::uint64_t limit =
      rem == bound ? std::numeric_limits<std::uint64_t>::max()
                   : std::numeric_limits<std::uint64_t>::max() - rem;
  std::uint64_t x = g();
  while (x > limit) x = g();
  return x % bound;
}

// Uniform integer in [lo, hi] inclusive.
inline std::uint64_t uniform_int(std::mt19937_64& g, std::uint64_t lo,
                                 std::uint64_t hi) {
  return lo + uniform_below(g, hi - lo + 1);
}

}  // namespace graphdist
