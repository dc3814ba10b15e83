#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatlab/circle.hpp"
#include "fatlab/matq.hpp"
#include "fatlab/poly.hpp"
#include "fatlab/rational.hpp"
#include "fatlab/rng.hpp"

using namespace fatlab;

TEST_CASE("rational canonical form") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational sqrt") {
  Rational r;
  CHECK(rational_sqrt(Rational(9, 16), r));
  CHECK(r == Rational(3, 4));
  CHECK_FALSE(rational_sqrt(Rational(2), r));
  CHECK_FALSE(rational_sqrt(Rational(-1), r));
}

TEST_CASE("circle compose matches complex multiplication oracle") {
  CirclePoint id = CirclePoint::identity();
  CirclePoint p(Rational(3, 5), Rational(4, 5));

  // identity case
  CHECK(circle_compose(id, p) == p);

  // (3/5,4/5) o (3/5,4/5): oracle is (a+bi)^2 evaluated in plain rational
  // complex arithmetic.
  Rational re = sq(Rational(3, 5)) - sq(Rational(4, 5));
  Rational im = Rational(2) * Rational(3, 5) * Rational(4, 5);
  CirclePoint sqp = circle_compose(p, p);
  CHECK(sqp.c == re);
  CHECK(sqp.s == im);
  CHECK(sqp == CirclePoint(Rational(-7, 25), Rational(24, 25)));

  // inverse case
  CHECK(circle_compose(p, p.inverse()) == id);
}

TEST_CASE("circle compose is associative with two-sided identity") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto rand_pt = [&] {
      long long a = rng.uniform(-9, 9), b = rng.uniform(-9, 9);
      if (a == 0 && b == 0) a = 1;
      return CirclePoint::from_pair(a, b);
    };
    CirclePoint a = rand_pt(), b = rand_pt(), c = rand_pt();
    CHECK(circle_compose(circle_compose(a, b), c) == circle_compose(a, circle_compose(b, c)));
    CHECK(circle_compose(a, CirclePoint::identity()) == a);
    CHECK(circle_compose(CirclePoint::identity(), a) == a);
  }
}

TEST_CASE("circle half angle") {
  CirclePoint t(Rational(-7, 25), Rational(24, 25));
  CirclePoint h;
  REQUIRE(circle_half(t, h));
  CHECK(circle_compose(h, h) == t);
  CHECK(h == CirclePoint(Rational(3, 5), Rational(4, 5)));
}

TEST_CASE("kernel of zero and identity") {
  CHECK(kernel(MatQ::zero(3, 3)).basis.size() == 3);
  CHECK(kernel(MatQ::identity(4)).basis.empty());
  CHECK(rank_exact(MatQ::identity(4)) == 4);
}

TEST_CASE("kernel vectors satisfy M v = 0 exactly") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int r = int(rng.uniform(1, 6)), c = int(rng.uniform(1, 6));
    MatQ m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        m.at(i, j) = Rational(rng.uniform(-9, 9), rng.uniform(1, 9));
    auto k = kernel(m);
    CHECK(k.rank + int(k.basis.size()) == c);
    for (const auto& v : k.basis) {
      VecQ mv = m.apply(v);
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("fraction-free rank agrees with float row reduction") {
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    int r = int(rng.uniform(1, 7)), c = int(rng.uniform(1, 7));
    MatQ m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
    // sprinkle exact dependencies to exercise rank deficiency
    if (r >= 2 && trial % 3 == 0)
      for (int j = 0; j < c; ++j) m.at(r - 1, j) = m.at(0, j) + m.at(r - 2 < 0 ? 0 : r - 2, j);
    CHECK(rank_exact(m) == rank_float(m));
  }
}

TEST_CASE("integer rank paths agree") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    MatZ m;
    m.rows = int(rng.uniform(1, 8));
    m.cols = int(rng.uniform(1, 8));
    m.a.resize(size_t(m.rows) * m.cols);
    for (auto& x : m.a) x = rng.uniform(-9, 9);
    CHECK(rank_mod_p(m) == rank_exact(m));  // equality is generic; screen may only undershoot
    CHECK(rank_exact(m) == rank_exact(to_matq(m)));
  }
}

TEST_CASE("generic rank: diag(v1, 1)") {
  PolyMat p(2, 2, {"v1"});
  p.at(0, 0) = p.var("v1");
  p.at(1, 1) = Poly::constant(Rational(1));
  auto res = generic_rank(p);
  CHECK(res.rank == 2);
  REQUIRE(res.degenerate_loci.size() == 1);
  CHECK(res.degenerate_loci[0].str({"v1"}) == "v1");
  CHECK(res.undecided.empty());
}

TEST_CASE("generic rank: 2x2 slice system has determinant -(1+4 v7^2)") {
  PolyMat p(2, 2, {"v7"});
  Poly v7 = p.var("v7");
  p.at(0, 0) = -(Poly::constant(Rational(2)) * v7);
  p.at(0, 1) = Poly::constant(Rational(-1));
  p.at(1, 0) = Poly::constant(Rational(-1));
  p.at(1, 1) = Poly::constant(Rational(2)) * v7;
  auto res = generic_rank(p);
  CHECK(res.rank == 2);
  CHECK(res.rank_everywhere());  // no real point drops the rank

  // final pivot is the determinant -(1 + 4 v7^2); it has no real roots
  Poly expected = -(Poly::constant(Rational(1)) +
                    Poly::constant(Rational(4)) * v7 * v7);
  REQUIRE(res.pivots.size() == 2);
  CHECK((res.pivots.back() == expected || res.pivots.back() == -expected));
  CHECK(count_real_roots(univariate_coeffs(expected, 0)) == 0);
}

TEST_CASE("generic rank: rank-one matrix of equal entries") {
  PolyMat p(2, 2, {"v1"});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p.at(i, j) = p.var("v1");
  CHECK(generic_rank(p).rank == 1);
}

TEST_CASE("sturm root counting") {
  // (x-1)(x-2)(x-3)
  std::vector<Rational> c = {Rational(-6), Rational(11), Rational(-6), Rational(1)};
  CHECK(count_real_roots(c) == 3);
  // x^2 + 1
  CHECK(count_real_roots({Rational(1), Rational(0), Rational(1)}) == 0);
  // x^2
  CHECK(count_real_roots({Rational(0), Rational(0), Rational(1)}) == 1);
  // 4x^2 + 1 (the slice determinant shape)
  CHECK(count_real_roots({Rational(1), Rational(0), Rational(4)}) == 0);
}

TEST_CASE("polynomial exact division") {
  Poly x = Poly::variable(0, 2), y = Poly::variable(1, 2);
  Poly f = (x + y) * (x - y) * Poly::constant(Rational(3, 2));
  Poly q = f.divide_exact(x + y);
  CHECK(q == (x - y) * Poly::constant(Rational(3, 2)));
  CHECK_THROWS(f.divide_exact(x + Poly::constant(Rational(1))));
}
