#pragma once

#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fatlab {

/// Execution mode for the sampling kernels.  Serial is the reference
/// implementation; Parallel runs the same per-index work under OpenMP and must
/// produce bit-identical results (per-index RNG streams, order-free merges).
enum class Exec { Serial, Parallel };

/// Process-wide default, settable from the CLI (--threads 1 forces Serial).
Exec default_exec();
void set_default_exec(Exec e);

/// Maximum over fn(0..budget-1); fn must be pure w.r.t. the index.
/// Returns {max_value, smallest index attaining it}; {-1, -1} on empty budget.
template <class Fn>
std::pair<long long, long long> scan_max(std::uint64_t budget, Fn&& fn, Exec exec) {
  long long best = -1, best_idx = -1;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      long long lbest = -1, lidx = -1;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < (long long)budget; ++i) {
        long long v = fn((std::uint64_t)i);
        if (v > lbest || (v == lbest && i < lidx)) {
          lbest = v;
          lidx = i;
        }
      }
#pragma omp critical
      {
        if (lbest > best || (lbest == best && lidx != -1 && (best_idx == -1 || lidx < best_idx))) {
          best = lbest;
          best_idx = lidx;
        }
      }
    }
    return {best, best_idx};
  }
#else
  (void)exec;
#endif
  for (std::uint64_t i = 0; i < budget; ++i) {
    long long v = fn(i);
    if (v > best) {
      best = v;
      best_idx = (long long)i;
    }
  }
  return {best, best_idx};
}

/// First index in [0, budget) where pred(index) is true, or -1.  Parallel runs
/// merge by minimum index, so the answer matches the serial scan.
template <class Pred>
long long scan_find(std::uint64_t budget, Pred&& pred, Exec exec) {
  long long found = -1;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      long long lfound = -1;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < (long long)budget; ++i) {
        if (lfound != -1) continue;
        if (pred((std::uint64_t)i)) lfound = i;
      }
#pragma omp critical
      {
        if (lfound != -1 && (found == -1 || lfound < found)) found = lfound;
      }
    }
    return found;
  }
#else
  (void)exec;
#endif
  for (std::uint64_t i = 0; i < budget; ++i)
    if (pred(i)) return (long long)i;
  return -1;
}

/// Runs fn(index) for every index; fn writes only to its own slot.
template <class Fn>
void scan_apply(std::uint64_t budget, Fn&& fn, Exec exec) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)budget; ++i) fn((std::uint64_t)i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::uint64_t i = 0; i < budget; ++i) fn(i);
}

/// Count of indices in [0, budget) where pred holds.
template <class Pred>
std::uint64_t scan_count(std::uint64_t budget, Pred&& pred, Exec exec) {
  std::uint64_t count = 0;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
    long long c = 0;
#pragma omp parallel for schedule(static) reduction(+ : c)
    for (long long i = 0; i < (long long)budget; ++i)
      if (pred((std::uint64_t)i)) ++c;
    return (std::uint64_t)c;
  }
#else
  (void)exec;
#endif
  for (std::uint64_t i = 0; i < budget; ++i)
    if (pred(i)) ++count;
  return count;
}

}  // namespace fatlab
