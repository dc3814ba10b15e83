#include "fatlab/parallel.hpp"

#include "fatlab/rng.hpp"

#include <cmath>

namespace fatlab {

namespace {
Exec g_exec = Exec::Parallel;
}

Exec default_exec() { return g_exec; }
void set_default_exec(Exec e) { g_exec = e; }

double Rng::gaussian() {
  double u1, u2;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace fatlab
