#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatlab/curvature.hpp"
#include "fatlab/liealg.hpp"
#include "fatlab/presets.hpp"
#include "fatlab/rng.hpp"

using namespace fatlab;
using namespace fatlab::lie;
using namespace fatlab::curv;
using namespace fatlab::lie::builders;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

VecQ g2so8_witness_x() {
  const auto& g = cat().triple("g2<so7<so8").triple.g();
  VecQ e3(7);
  e3[2] = Rational(1);
  return g.coords(M_vector(e3));
}

VecQ g2so8_witness_y() {
  const auto& g = cat().triple("g2<so7<so8").triple.g();
  VecQ e1(7);
  e1[0] = Rational(1);
  return g.coords(direct_sum(A_perp(e1), MatQ::zero(1, 1)));
}

}  // namespace

TEST_CASE("metric_qt evaluation") {
  const auto& rec = cat().triple("su3<g2<so7");
  DeformedMetric dm(rec, Rational(1));
  // a p-vector of unit length: scale M(z)-type... use the Gram to normalize a
  // basis vector exactly when possible, otherwise check the bilinear rule
  const auto& tri = rec.triple;
  const auto& g = tri.g();

  // X = Y in p: q_t = <X, X> regardless of t
  VecQ xp = tri.p_basis()[0];
  CHECK(metric_qt(xp, xp, dm) == g.inner(xp, xp));

  // X = Y in m at t = 1: half the inner product
  VecQ xm = tri.m_basis()[0];
  CHECK(metric_qt(xm, xm, dm) == Rational(1, 2) * g.inner(xm, xm));

  // normal-metric limit agrees with the bi-invariant product on basis pairs
  DeformedMetric norm(rec, std::nullopt);
  for (const auto& u : tri.m_basis())
    for (const auto& v : tri.p_basis()) {
      CHECK(metric_qt(u, v, norm) == g.inner(u, v));
      CHECK(metric_qt(u, u, norm) == g.inner(u, u));
      CHECK(metric_qt(v, v, norm) == g.inner(v, v));
    }

  // h-components are rejected
  CHECK_THROWS(metric_qt(tri.h_basis()[0], xp, dm));
}

TEST_CASE("metric_qt is positive definite on random samples") {
  const auto& rec = cat().triple("g2<so7<so8");
  DeformedMetric dm(rec, Rational(3, 2));
  const auto& tri = rec.triple;
  Rng rng(3);
  auto s = tri.h_perp_basis();
  for (int trial = 0; trial < 40; ++trial) {
    VecQ v(tri.g().dim());
    bool nz = false;
    for (const auto& b : s) {
      long long c = rng.uniform(-5, 5);
      nz |= (c != 0);
      if (c != 0)
        for (int i = 0; i < tri.g().dim(); ++i) v[i] += Rational(c) * b[i];
    }
    if (!nz) continue;
    CHECK(metric_qt(v, v, dm).sign() > 0);
  }
}

TEST_CASE("flat plane test on the explicit commuting witness") {
  const auto& rec = cat().triple("g2<so7<so8");
  DeformedMetric dm(rec, Rational(2));
  VecQ x = g2so8_witness_x(), y = g2so8_witness_y();
  CHECK(rec.triple.g().bracket_coords(x, y) == VecQ(rec.triple.g().dim()));
  CHECK(flat_plane_test(x, y, dm));
  // dependent input errors
  CHECK_THROWS(flat_plane_test(x, x, dm));
}

TEST_CASE("flat plane test rejects generic p-pairs") {
  const auto& rec = cat().triple("g2<so7<so8");
  DeformedMetric dm(rec, std::nullopt);
  const auto& tri = rec.triple;
  Rng rng(11);
  int rejected = 0;
  for (int trial = 0; trial < 30; ++trial) {
    VecQ x(tri.g().dim()), y(tri.g().dim());
    for (const auto& b : tri.p_basis()) {
      long long cx = rng.uniform(-5, 5), cy = rng.uniform(-5, 5);
      for (int i = 0; i < tri.g().dim(); ++i) {
        if (cx) x[i] += Rational(cx) * b[i];
        if (cy) y[i] += Rational(cy) * b[i];
      }
    }
    if (tri.g().bracket_coords(x, y) == VecQ(tri.g().dim())) continue;
    CHECK_FALSE(flat_plane_test(x, y, dm));
    ++rejected;
  }
  CHECK(rejected >= 25);
}

TEST_CASE("flat plane test accepts commuting cross pairs of the split triple") {
  const auto& rec = cat().triple("0+so3<so3+so3<so3+so4");
  DeformedMetric dm(rec, Rational(1));
  VecQ x = rec.triple.m_basis()[0], y = rec.triple.p_basis()[1];
  CHECK(flat_plane_test(x, y, dm));
}

TEST_CASE("flat plane test requires the base pair flag") {
  const auto& rec = cat().triple("su3<so6<so7");  // no (P) flag shipped
  DeformedMetric dm(rec, Rational(1));
  CHECK_THROWS(flat_plane_test(rec.triple.m_basis()[0], rec.triple.p_basis()[0], dm));
}

TEST_CASE("normal_sec: zero exactly on the witness plane, positive nearby") {
  const auto& tri = cat().triple("g2<so7<so8").triple;
  VecQ x = g2so8_witness_x(), y = g2so8_witness_y();
  CHECK(normal_sec(x, y, tri) == Rational(0));

  // two independent m-directions have a rank-6 bracket, so strictly positive
  const auto& g = tri.g();
  VecQ a1 = g.coords(direct_sum(A_perp({Rational(1), Rational(0), Rational(0), Rational(0),
                                        Rational(0), Rational(0), Rational(0)}),
                                MatQ::zero(1, 1)));
  VecQ a2 = g.coords(direct_sum(A_perp({Rational(0), Rational(1), Rational(0), Rational(0),
                                        Rational(0), Rational(0), Rational(0)}),
                                MatQ::zero(1, 1)));
  CHECK(normal_sec(a1, a2, tri).sign() > 0);
  CHECK(rank_exact(bracket(tri.g().realize(a1), tri.g().realize(a2))) == 6);

  // symmetry and invariance under an exact plane rotation
  CHECK(normal_sec(a2, a1, tri) == normal_sec(a1, a2, tri));
  VecQ u(a1.size()), v(a1.size());
  // rotate by the exact angle (3/5, 4/5)
  for (size_t i = 0; i < a1.size(); ++i) {
    u[i] = Rational(3, 5) * a1[i] + Rational(4, 5) * a2[i];
    v[i] = Rational(-4, 5) * a1[i] + Rational(3, 5) * a2[i];
  }
  CHECK(normal_sec(u, v, tri) == normal_sec(a1, a2, tri));
}

TEST_CASE("flat planes have zero normal curvature at t = infinity") {
  const auto& rec = cat().triple("0+so3<so3+so3<so3+so4");
  DeformedMetric dm(rec, std::nullopt);
  Rng rng(13);
  const auto& tri = rec.triple;
  for (int trial = 0; trial < 20; ++trial) {
    VecQ x(tri.g().dim()), y(tri.g().dim());
    for (const auto& b : tri.m_basis()) {
      long long c = rng.uniform(-4, 4);
      for (int i = 0; i < tri.g().dim(); ++i)
        if (c) x[i] += Rational(c) * b[i];
    }
    for (const auto& b : tri.p_basis()) {
      long long c = rng.uniform(-4, 4);
      for (int i = 0; i < tri.g().dim(); ++i)
        if (c) y[i] += Rational(c) * b[i];
    }
    bool zx = true, zy = true;
    for (const auto& q : x) zx = zx && q.is_zero();
    for (const auto& q : y) zy = zy && q.is_zero();
    if (zx || zy) continue;
    if (flat_plane_test(x, y, dm)) CHECK(normal_sec(x, y, tri) == Rational(0));
  }
}

TEST_CASE("property (P) witness mode on the flagged pairs") {
  for (const char* name : {"g2<so7", "su3<g2", "so7<so8", "so3<so4"}) {
    const auto& rec = cat().pair(name);
    auto verdict = property_P_test(rec, PMode::Witness, 300, 5);
    CHECK(verdict.holds_on_samples);
    CHECK_FALSE(verdict.counterexample.has_value());
  }
}

TEST_CASE("the g2 < so7 pairing value is -6 on the A(e1), A(e2) plane") {
  // <[A(e1), A(e2)], T> with T the g2 element of unit first coefficient in
  // the (2,3)/(6,7) slot, under the plain -tr(XY) form
  MatQ x = A_perp({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0),
                   Rational(0), Rational(0)});
  MatQ y = A_perp({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
                   Rational(0), Rational(0)});
  std::vector<Rational> params(14);
  params[12] = Rational(1);  // z1 = 1
  MatQ t = g2_elem(params);
  CHECK(minus_trace_form(bracket(x, y), t) == Rational(-6));
}

TEST_CASE("property (P') falsifier via the intermediate subalgebra") {
  const auto& rec = cat().pair("0<su2");
  auto verdict = property_P_test(rec, PMode::Falsify, 200, 7);
  REQUIRE(verdict.counterexample.has_value());
  const auto& [x, y] = *verdict.counterexample;
  const auto& g = rec.pair.g;
  VecQ br = g.bracket_coords(x, y);
  bool nz = false;
  for (const auto& c : br) nz |= !c.is_zero();
  CHECK(nz);
  for (const auto& hb : rec.pair.h_basis) CHECK(g.inner(br, hb).is_zero());
}

TEST_CASE("symmetric pairs pass witness mode trivially") {
  const auto& rec = cat().pair("so7<so8");
  auto verdict = property_P_test(rec, PMode::Witness, 500, 11);
  CHECK(verdict.holds_on_samples);
}

TEST_CASE("ric_k certificate holds on the headline spaces") {
  {
    const auto& rec = cat().triple("g2<so7<so8");
    DeformedMetric dm(rec, std::nullopt);
    auto cert = ric_k_certificate(dm, 1, 1, 1, 2000, 17);
    CHECK(cert.k == 2);
    CHECK_FALSE(cert.falsified);
    CHECK(cert.to_json("g2<so7<so8").find("\"falsified\": false") != std::string::npos);
  }
  {
    const auto& rec = cat().triple("su3<g2<so7");
    DeformedMetric dm(rec, Rational(1));
    auto cert = ric_k_certificate(dm, 1, 1, 1, 2000, 19);
    CHECK(cert.k == 2);
    CHECK_FALSE(cert.falsified);
  }
}

TEST_CASE("ric_k certificate is falsified on the split product triple") {
  const auto& rec = cat().triple("0+so3<so3+so3<so3+so4");
  DeformedMetric dm(rec, Rational(1));
  // true k for this triple is 1 + 1 + 3 - 1 = 4; asking for k = 2 by feeding
  // f = 1 must be caught by the search
  auto cert = ric_k_certificate(dm, 1, 1, 1, 3000, 23);
  CHECK(cert.k == 2);
  REQUIRE(cert.falsified);
  REQUIRE(cert.witness_frame.size() == 3);
  // the witness planes are exactly flat
  const auto& tri = rec.triple;
  auto s = tri.h_perp_basis();
  auto to_g = [&](const VecQ& coords) {
    VecQ v(tri.g().dim());
    for (size_t a = 0; a < s.size(); ++a)
      for (int i = 0; i < tri.g().dim(); ++i) v[i] += coords[a] * s[a][i];
    return v;
  };
  for (int i = 1; i <= 2; ++i)
    CHECK(flat_plane_test(to_g(cert.witness_frame[0]), to_g(cert.witness_frame[i]), dm));
}

TEST_CASE("ric_k certificate rejects bad inputs") {
  const auto& noP = cat().triple("su3<so6<so7");
  DeformedMetric dm(noP, Rational(1));
  CHECK_THROWS(ric_k_certificate(dm, 1, 1, 1, 10, 3));

  const auto& rec = cat().triple("so2<so3<so4");
  DeformedMetric ok(rec, Rational(1));
  CHECK_THROWS(ric_k_certificate(ok, 3, 3, 1, 10, 3));  // k >= dim G/H = 5
}

TEST_CASE("frame sampler curvature positivity on spin8/g2 samples") {
  const auto& tri = cat().triple("g2<so7<so8").triple;
  FrameSampler fs(tri);
  double min_sum = 1e300;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    auto t = fs.random_orthonormal_triple(29, i);
    double sum = fs.sec_float(t[0], t[1]) + fs.sec_float(t[0], t[2]);
    min_sum = std::min(min_sum, sum);
  }
  CHECK(min_sum > 1e-6);
}

TEST_CASE("frame sampler float screen agrees with exact flat dimension") {
  const auto& tri = cat().triple("0+so3<so3+so3<so3+so4").triple;
  FrameSampler fs(tri);
  // a pure p-direction: flat space is m + span{x}, dimension 4
  VecQ x(fs.dim());
  x[fs.dim_m()] = Rational(1);
  auto ker = fs.flat_space_exact(x);
  CHECK(int(ker.basis.size()) == 4);
  std::vector<double> xf(fs.dim(), 0.0);
  xf[fs.dim_m()] = 1.0;
  CHECK(fs.flat_space_dim_float(xf) == 4);
}
