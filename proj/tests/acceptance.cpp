// Acceptance suite: one line per criterion, each run at its stated budget and
// time limit.  Exit status is nonzero when any criterion fails.

#include "fatlab/curvature.hpp"
#include "fatlab/liealg.hpp"
#include "fatlab/octonion.hpp"
#include "fatlab/presets.hpp"
#include "fatlab/registry.hpp"
#include "fatlab/rng.hpp"
#include "fatlab/spin.hpp"
#include "fatlab/topology.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace fatlab;
using namespace fatlab::lie;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, double secs, double limit,
            const std::string& detail) {
  bool ok = pass && secs <= limit;
  std::printf("[%s] criterion %d: %s (%.2fs / limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", idx,
              name.c_str(), secs, limit, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

template <class Fn>
void criterion(int idx, const std::string& name, double limit, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(idx, name, pass, secs, limit, detail);
}

}  // namespace

int main() {
  const auto& cat = Catalog::builtin();

  // 1. Table of su2/so3 subgroups reproduced exactly.
  criterion(1, "subgroup table reproduction", 1.0, [&](std::string& detail) {
    auto rows = spin::su2_table();
    if (rows.size() != 9) return false;
    using A4 = std::array<long long, 4>;
    struct Row {
      A4 w, a, b;
      bool free;
      int wi, wj;
      long long wval;
      bool undef;
    };
    const std::vector<Row> expect = {
        {{4, 2, 0, 0}, {-1, -1, -3, 3}, {-3, 3, 1, -1}, false, 3, 1, 3, false},
        {{3, 3, 1, 1}, {0, 0, -2, 4}, {-3, 3, 1, 1}, false, 1, 1, 3, false},
        {{2, 1, 1, 0}, {0, -1, -1, 2}, {-2, 1, 1, 0}, false, 1, 1, 2, false},
        {{2, 0, 0, 0}, {-1, -1, -1, 1}, {-1, 1, 1, -1}, true, 0, 0, 0, false},
        {{1, 1, 1, 1}, {0, 0, 0, 2}, {-1, 1, 1, 1}, true, 0, 0, 0, false},
        {{1, 1, 0, 0}, {0, 0, -1, 1}, {-1, 1, 0, 0}, false, 1, 3, 0, true},
        {{6, 4, 2, 0}, {0, -2, -4, 6}, {-6, 4, 2, 0}, false, 1, 1, 6, false},
        {{4, 2, 2, 0}, {0, -2, -2, 4}, {-4, 2, 2, 0}, false, 1, 1, 4, false},
        {{2, 2, 0, 0}, {0, 0, -2, 2}, {-2, 2, 0, 0}, false, 1, 1, 2, false},
    };
    for (size_t i = 0; i < 9; ++i) {
      const auto& r = rows[i];
      const auto& e = expect[i];
      if (r.torus_weights != e.w || r.lift_a != e.a || r.lift_b != e.b || r.free != e.free)
        return false;
      if (!e.free) {
        if (e.undef != r.witness.undefined) return false;
        if (r.witness.i != e.wi || r.witness.j != e.wj) return false;
        if (!e.undef && r.witness.value != e.wval) return false;
      }
    }
    detail = "9 rows, lifts and gcd witnesses exact";
    return true;
  });

  // 2. Invariant values of b and f.
  criterion(2, "b and f invariant values", 30.0, [&](std::string& detail) {
    auto fs = [&](const char* name, int expected) {
      const auto& rec = cat.triple(name);
      auto rep = compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m, 500, 2024,
                           rec.f_claimed);
      return rep.status == CertStatus::Certified && rep.certified_lower == expected;
    };
    if (!fs("su3<g2<so7", 1)) return false;
    if (!fs("g2<so7<so8", 1)) return false;
    if (!fs("0+so3<so3+so3<so3+so4", 3)) return false;
    {
      const auto& rec = cat.triple("so3<so4<so5");
      auto rep = compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m, 500, 2024);
      if (rep.certified_lower < 2) return false;
    }
    {
      const auto& rec = cat.pair("g2<so8");
      auto rep = compute_b(rec.pair.g, rec.pair.hperp_basis, rec.b_hints, 10000, 2024,
                           rec.b_claimed);
      if (rep.status != CertStatus::Certified || rep.certified_lower != 2) return false;
      if (rep.sampled_max > 2) return false;
      std::ostringstream os;
      os << "b(g2<so8) = 2 with sampled max " << rep.sampled_max << " over 10^4";
      detail = os.str();
    }
    {
      const auto& rec = cat.pair("su3<so7");
      auto rep = compute_b(rec.pair.g, rec.pair.hperp_basis, rec.b_hints, 1000, 2024);
      if (rep.certified_lower < 3) return false;
    }
    return true;
  });

  // 3. Classification replay.
  criterion(3, "classification replay", 60.0, [&](std::string& detail) {
    reg::RunConfig cfg;
    auto table = reg::classify_triples(cfg);
    if (!table.all_pass || table.survivors.size() != 6) return false;
    int dim_route = 0, wit = 0, split = 0;
    for (const auto& row : table.rows) {
      if (!row.pass) return false;
      if (row.entry.route == "dimension") ++dim_route;
      if (row.entry.route == "witness") ++wit;
      if (row.entry.route == "ideal-split") ++split;
    }
    std::ostringstream os;
    os << "6 survivors; routes: " << dim_route << " dimension, " << wit << " witness, "
       << split << " ideal-split";
    detail = os.str();
    return true;
  });

  // 4. Freeness oracle equivalence.
  criterion(4, "freeness oracle equivalence", 120.0, [&](std::string& detail) {
    long long checked = 0;
    for (long long n1 = -4; n1 <= 4; ++n1)
      for (long long n2 = -4; n2 <= 4; ++n2)
        for (long long n3 = -4; n3 <= 4; ++n3)
          for (long long n4 = -4; n4 <= 4; ++n4) {
            long long g = std::gcd(std::gcd(std::llabs(n1), std::llabs(n2)),
                                   std::gcd(std::llabs(n3), std::llabs(n4)));
            if (g != 1) continue;
            auto p = spin::CirclePattern::from_n({n1, n2, n3, n4});
            if (spin::is_free_circle(p) != oracles::free_by_subgroup_search(p, 1000))
              return false;
            ++checked;
          }
    detail = std::to_string(checked) + " primitive patterns, zero disagreements";
    return true;
  });

  // 5. Pontryagin arithmetic.
  criterion(5, "Pontryagin arithmetic", 60.0, [&](std::string& detail) {
    Poly k = Poly::variable(0, 1), one = Poly::constant(Rational(1));
    Poly two = Poly::constant(Rational(2)), three = Poly::constant(Rational(3));
    Poly sum;
    for (const Poly& x : {one, two + k, two - k, one}) sum += x * x;
    for (const Poly& x : {one, k, -k, three}) sum += x * x;
    if (!(sum == Poly::constant(Rational(4)) * (k * k + Poly::constant(Rational(5)))))
      return false;
    auto list = spin::enumerate_free_circles(10);
    std::set<long long> values;
    for (const auto& e : list) {
      if (e.p1 % 8 != 0) return false;
      values.insert(e.p1);
    }
    if (values.size() < 5) return false;
    if (topo::p1_su2_s7s7() != 4 || topo::p1_su2_s6s7() != 4) return false;
    if (topo::p1_circle_s6s7() != 8) return false;
    std::ostringstream os;
    os << "4(k^2+5) symbolic; " << list.size() << " patterns at bound 10, all p1 = 0 mod 8, "
       << values.size() << " distinct values; su2 value 4; S6xS7 circle value 8";
    detail = os.str();
    return true;
  });

  // 6. Triality exactness.
  criterion(6, "triality exactness", 10.0, [&](std::string& detail) {
    Rng rng(2024);
    for (int t = 0; t < 100; ++t) {
      std::array<CirclePoint, 4> alpha;
      for (auto& a : alpha) {
        long long pp = rng.uniform(-9, 9), qq = rng.uniform(-9, 9);
        if (pp == 0 && qq == 0) pp = 1;
        a = CirclePoint::from_pair(pp, qq);
      }
      spin::torus_element(alpha);  // throws on any residual
    }
    // proposition-specified lifts
    auto l3 = spin::lift_C_diagonal({0, 0, 2, 0}, CirclePoint::from_pair(3, 1));
    if (l3.a_coeff != std::array<long long, 4>{1, -1, 1, 1}) return false;
    auto l1 = spin::lift_C_diagonal({4, 2, 0, 0}, CirclePoint::from_pair(5, 2));
    if (l1.b_coeff != std::array<long long, 4>{-3, 3, 1, -1}) return false;
    for (const auto& part : spin::su2_partitions())
      spin::su2_table_row(part);  // lifts verified on construction
    MatQ id = MatQ::identity(8), neg = Rational(-1) * id;
    MatQ s(8, 8);
    for (int i = 0; i < 8; ++i) s.at(i, i) = Rational(i % 2 == 0 ? 1 : -1);
    if (!spin::triality_check(neg, id, neg)) return false;
    if (!spin::triality_check(s, s, s)) return false;
    detail = "100 torus points, all lifts, and both finite elements at zero residual";
    return true;
  });

  // 7. Curvature properties.
  criterion(7, "curvature properties", 120.0, [&](std::string& detail) {
    const auto& rec8 = cat.triple("g2<so7<so8");
    curv::FrameSampler fs(rec8.triple);
    const long long budget = 100000;
    std::vector<double> sums(budget);
    scan_apply(
        std::uint64_t(budget),
        [&](std::uint64_t i) {
          auto t = fs.random_orthonormal_triple(2024, i);
          sums[i] = fs.sec_float(t[0], t[1]) + fs.sec_float(t[0], t[2]);
        },
        default_exec());
    double lo = 1e300;
    for (double v : sums) lo = std::min(lo, v);
    if (lo <= 1e-9) return false;

    // witness plane exactly flat
    VecQ e3(7), e1(7);
    e3[2] = Rational(1);
    e1[0] = Rational(1);
    VecQ wx = rec8.triple.g().coords(builders::M_vector(e3));
    VecQ wy = rec8.triple.g().coords(
        builders::direct_sum(builders::A_perp(e1), MatQ::zero(1, 1)));
    if (!curv::normal_sec(wx, wy, rec8.triple).is_zero()) return false;

    curv::DeformedMetric dm8(rec8, std::nullopt);
    auto cert8 = curv::ric_k_certificate(dm8, 1, 1, 1, budget, 2024);
    if (cert8.falsified || cert8.k != 2) return false;

    const auto& rec7 = cat.triple("su3<g2<so7");
    curv::DeformedMetric dm7(rec7, Rational(1));
    auto cert7 = curv::ric_k_certificate(dm7, 1, 1, 1, budget, 2024);
    if (cert7.falsified || cert7.k != 2) return false;

    curv::DeformedMetric dmx(cat.triple("0+so3<so3+so3<so3+so4"), Rational(1));
    auto certx = curv::ric_k_certificate(dmx, 1, 1, 1, 10000, 2024);
    if (!certx.falsified) return false;

    std::ostringstream os;
    os << "min Ric2 sum " << lo << " over 10^5 triples; witness plane flat; no flat 3-frame "
       << "on either headline space; product counterexample falsified";
    detail = os.str();
    return true;
  });

  // 8. Finite quotients.
  criterion(8, "finite quotient freeness", 30.0, [&](std::string& detail) {
    auto p = spin::CirclePattern::from_n({0, 2, -1, 1});
    for (long long d = 1; d <= 50; ++d) {
      if (!spin::finite_action_free(p, d, true, false)) return false;
      if (!spin::finite_action_free(p, d, true, true)) return false;
    }
    Rng rng(2024);
    int tested = 0;
    while (tested < 500) {
      std::array<long long, 4> n;
      for (auto& x : n) x = rng.uniform(-3, 3);
      long long g = 0;
      for (long long x : n) g = std::gcd(g, std::llabs(x));
      if (g != 1) continue;
      auto q = spin::CirclePattern::from_n(n);
      long long d = rng.uniform(1, 12), m = rng.uniform(1, 5);
      bool minus = rng.uniform(0, 1) == 1, s6 = rng.uniform(0, 1) == 1;
      if (!spin::finite_action_free(q, d, minus, s6) &&
          spin::finite_action_free(q, d * m, minus, s6))
        return false;
      ++tested;
    }
    detail = "d = 1..50 free on both variants; monotonicity on 500 random triples";
    return true;
  });

  // 9. Algebra self-tests.
  criterion(9, "algebra self-tests", 30.0, [&](std::string& detail) {
    if (octonion_table_self_test() != 21) return false;
    Rng rng(2024);
    for (int t = 0; t < 1000; ++t) {
      Octonion a, b, c;
      for (int i = 0; i < 8; ++i) {
        a[i] = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
        b[i] = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
        c[i] = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
      }
      if (!check_moufang(a, b, c)) return false;
      if (oct_mul(a, oct_mul(a, b)) != oct_mul(oct_mul(a, a), b)) return false;
      if (oct_mul(oct_mul(b, a), a) != oct_mul(b, oct_mul(a, a))) return false;
    }
    if (cat.pair("g2<so7").pair.h_basis.size() != 14) return false;
    if (cat.pair("su3<g2").pair.h_basis.size() != 8) return false;
    for (const auto& name : cat.triple_names())
      if (!cat.triple(name).triple.g().jacobi_clean()) return false;
    detail = "octonion laws on 1000 triples; g2 and su3 models; Jacobi clean on all presets";
    return true;
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}
