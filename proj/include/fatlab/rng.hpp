#pragma once

#include <cstdint>

namespace fatlab {

/// Deterministic 64-bit generator (splitmix64).  Every sampling loop derives
/// one stream per sample index from (seed, index), so results are identical
/// regardless of thread count or iteration order.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    mix.next();
    mix.next();
    return mix;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], rejection-sampled; lo <= hi.
  long long uniform(long long lo, long long hi) {
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    const std::uint64_t limit = (~0ull / span) * span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + (long long)(x % span);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

  /// Standard normal via Box-Muller on uniform01.
  double gaussian();

private:
  std::uint64_t state_;
};

}  // namespace fatlab
