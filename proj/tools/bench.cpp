// Benchmark comparing the serial reference kernels against the OpenMP paths.

#include "fatlab/curvature.hpp"
#include "fatlab/liealg.hpp"
#include "fatlab/presets.hpp"
#include "fatlab/spin.hpp"

#include <chrono>
#include <cstdio>

using namespace fatlab;
using namespace fatlab::lie;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   results %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              identical ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  const auto& cat = Catalog::builtin();
  std::printf("%-34s %13s %13s\n", "kernel", "serial", "openmp");

  {
    const auto& rec = cat.pair("g2<so8");
    CentralizerScanner sc(rec.pair.g, rec.pair.hperp_basis, rec.pair.hperp_basis);
    int rs = 0, rp = 0;
    double ts = time_ms([&] { rs = sc.sampled_max(20000, 2024, Exec::Serial); });
    double tp = time_ms([&] { rp = sc.sampled_max(20000, 2024, Exec::Parallel); });
    row("centralizer scan, 2x10^4 samples", ts, tp, rs == rp);
  }
  {
    const auto& rec = cat.triple("g2<so7<so8");
    curv::DeformedMetric dm(rec, std::nullopt);
    bool fs = false, fp = false;
    double ts = time_ms([&] {
      fs = curv::ric_k_certificate(dm, 1, 1, 1, 100000, 2024, Exec::Serial).falsified;
    });
    double tp = time_ms([&] {
      fp = curv::ric_k_certificate(dm, 1, 1, 1, 100000, 2024, Exec::Parallel).falsified;
    });
    row("flat-frame search, 10^5 samples", ts, tp, fs == fp);
  }
  {
    const auto& tri = cat.triple("g2<so7<so8").triple;
    curv::FrameSampler fs(tri);
    auto scan = [&](Exec e) {
      std::vector<double> mins(100000);
      scan_apply(
          100000,
          [&](std::uint64_t i) {
            auto t = fs.random_orthonormal_triple(2024, i);
            mins[i] = fs.sec_float(t[0], t[1]) + fs.sec_float(t[0], t[2]);
          },
          e);
      double lo = 1e300;
      for (double v : mins) lo = std::min(lo, v);
      return lo;
    };
    double vs = 0, vp = 0;
    double ts = time_ms([&] { vs = scan(Exec::Serial); });
    double tp = time_ms([&] { vp = scan(Exec::Parallel); });
    row("curvature positivity, 10^5 triples", ts, tp, vs == vp);
  }
  {
    std::vector<spin::EnumeratedPattern> ls, lp;
    double ts = time_ms([&] { ls = spin::enumerate_free_circles(10, Exec::Serial); });
    double tp = time_ms([&] { lp = spin::enumerate_free_circles(10, Exec::Parallel); });
    bool same = ls.size() == lp.size();
    for (size_t i = 0; same && i < ls.size(); ++i)
      same = ls[i].pattern.n == lp[i].pattern.n && ls[i].p1 == lp[i].p1;
    row("free-circle enumeration, bound 10", ts, tp, same);
  }
  return 0;
}
