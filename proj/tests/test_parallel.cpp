#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatlab/curvature.hpp"
#include "fatlab/liealg.hpp"
#include "fatlab/presets.hpp"
#include "fatlab/spin.hpp"

using namespace fatlab;
using namespace fatlab::lie;

// The OpenMP kernels must reproduce the serial reference exactly: per-index
// RNG streams and order-free merges make the two paths bit-identical.

TEST_CASE("scan helpers agree across modes") {
  auto f = [](std::uint64_t i) { return (long long)((i * 2654435761u) % 1000); };
  auto s = scan_max(5000, f, Exec::Serial);
  auto p = scan_max(5000, f, Exec::Parallel);
  CHECK(s == p);

  auto pred = [](std::uint64_t i) { return i % 977 == 123; };
  CHECK(scan_find(5000, pred, Exec::Serial) == scan_find(5000, pred, Exec::Parallel));
  CHECK(scan_count(5000, pred, Exec::Serial) == scan_count(5000, pred, Exec::Parallel));
}

TEST_CASE("centralizer sampling agrees across modes") {
  const auto& rec = Catalog::builtin().pair("g2<so8");
  CentralizerScanner sc(rec.pair.g, rec.pair.hperp_basis, rec.pair.hperp_basis);
  for (std::uint64_t seed : {7ull, 2024ull}) {
    CHECK(sc.sampled_max(2000, seed, Exec::Serial) == sc.sampled_max(2000, seed, Exec::Parallel));
  }
}

TEST_CASE("compute_f agrees across modes") {
  const auto& rec = Catalog::builtin().triple("su3<g2<so7");
  auto s = compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m, 300, 5, rec.f_claimed,
                     Exec::Serial);
  auto p = compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m, 300, 5, rec.f_claimed,
                     Exec::Parallel);
  CHECK(s.certified_lower == p.certified_lower);
  CHECK(s.sampled_max == p.sampled_max);
  CHECK((s.status == p.status));
}

TEST_CASE("flat-frame search agrees across modes, including the witness") {
  curv::DeformedMetric dm(Catalog::builtin().triple("0+so3<so3+so3<so3+so4"), Rational(1));
  auto s = curv::ric_k_certificate(dm, 1, 1, 1, 2000, 11, Exec::Serial);
  auto p = curv::ric_k_certificate(dm, 1, 1, 1, 2000, 11, Exec::Parallel);
  REQUIRE(s.falsified);
  REQUIRE(p.falsified);
  REQUIRE(s.witness_frame.size() == p.witness_frame.size());
  for (size_t i = 0; i < s.witness_frame.size(); ++i)
    CHECK(s.witness_frame[i] == p.witness_frame[i]);
}

TEST_CASE("property test agrees across modes") {
  const auto& rec = Catalog::builtin().pair("0<su2");
  auto s = curv::property_P_test(rec, curv::PMode::Falsify, 300, 13, Exec::Serial);
  auto p = curv::property_P_test(rec, curv::PMode::Falsify, 300, 13, Exec::Parallel);
  REQUIRE(s.counterexample.has_value());
  REQUIRE(p.counterexample.has_value());
  CHECK(s.counterexample->first == p.counterexample->first);
  CHECK(s.counterexample->second == p.counterexample->second);
}

TEST_CASE("enumeration agrees across modes") {
  auto s = spin::enumerate_free_circles(5, Exec::Serial);
  auto p = spin::enumerate_free_circles(5, Exec::Parallel);
  REQUIRE(s.size() == p.size());
  for (size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].pattern.n == p[i].pattern.n);
    CHECK(s[i].p1 == p[i].p1);
  }
}
