#pragma once

// Test-only oracles, independent of the library's decision procedures.

#include "fatlab/spin.hpp"

#include <numeric>

namespace oracles {

/// Brute-force freeness: searches every Z_N subgroup with N <= max_order for a
/// nontrivial element fixing a coordinate point (e_{2i}, e_{2j}).  The element
/// theta = 2 pi k / N fixes that point iff N | l_i k and N | r_j k, which has a
/// nonzero solution k iff lcm(N / gcd(l_i, N), N / gcd(r_j, N)) < N.
inline bool free_by_subgroup_search(const fatlab::spin::CirclePattern& p,
                                    long long max_order) {
  auto a = [](long long x) { return x < 0 ? -x : x; };
  for (long long n = 2; n <= max_order; ++n)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        long long ki = n / std::gcd(a(p.l[i]), n);  // gcd(0, n) = n
        long long kj = n / std::gcd(a(p.r[j]), n);
        long long need = ki / std::gcd(ki, kj) * kj;
        if (need < n) return false;
      }
  return true;
}

}  // namespace oracles
