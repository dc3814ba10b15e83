#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatlab/rng.hpp"
#include "fatlab/spin.hpp"
#include "oracles.hpp"

#include <set>

using namespace fatlab;
using namespace fatlab::spin;

namespace {

CirclePoint random_circle(Rng& rng) {
  long long p = rng.uniform(-9, 9), q = rng.uniform(-9, 9);
  if (p == 0 && q == 0) p = 1;
  return CirclePoint::from_pair(p, q);
}

MatQ sigma_matrix() {
  MatQ s(8, 8);
  for (int i = 0; i < 8; ++i) s.at(i, i) = Rational(i % 2 == 0 ? 1 : -1);
  return s;
}

}  // namespace

TEST_CASE("triality check basics") {
  MatQ id = MatQ::identity(8);
  CHECK(triality_check(id, id, id));
  CHECK(induced_C(id, id) == id);

  // (-I, I, -I)
  MatQ neg = Rational(-1) * MatQ::identity(8);
  CHECK(triality_check(neg, id, neg));

  // (sigma, sigma, sigma) with sigma = diag(1,-1,1,-1,1,-1,1,-1)
  MatQ s = sigma_matrix();
  CHECK(triality_check(s, s, s));
  CHECK(induced_C(s, s) == s);

  // a wrong C fails
  CHECK_FALSE(triality_check(id, id, neg));
}

TEST_CASE("moufang pairs give spin elements") {
  // (A, B) = (-L_u, R_u) for imaginary unit u satisfies the relation with
  // C = L_u R_conj(u)
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    CirclePoint cp = random_circle(rng);
    int a = int(rng.uniform(1, 7)), b = int(rng.uniform(1, 7));
    while (b == a) b = int(rng.uniform(1, 7));
    Octonion u = cp.c * Octonion::basis(a) + cp.s * Octonion::basis(b);
    SpinElement e(Rational(-1) * left_mult_matrix(u), right_mult_matrix(u));
    CHECK(e.c == left_mult_matrix(u) * right_mult_matrix(conj(u)));
  }
}

TEST_CASE("torus elements satisfy triality exactly, 100 random points") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    std::array<CirclePoint, 4> alpha;
    for (auto& a : alpha) a = random_circle(rng);
    CHECK_NOTHROW(torus_element(alpha));  // construction runs the 64-pair check
  }
}

TEST_CASE("trivial alpha gives the identity element") {
  std::array<CirclePoint, 4> alpha;  // all identity
  SpinElement e = torus_element(alpha);
  CHECK(e.a == MatQ::identity(8));
  CHECK(e.b == MatQ::identity(8));
  CHECK(e.c == MatQ::identity(8));
}

TEST_CASE("alpha1-only torus element matches the block pattern") {
  CirclePoint a1 = CirclePoint::from_pair(2, 1);
  std::array<CirclePoint, 4> alpha = {a1, CirclePoint(), CirclePoint(), CirclePoint()};
  SpinElement e = torus_element(alpha);
  CHECK(e.a == rotation_blocks({a1, a1, CirclePoint(), CirclePoint()}));
  CHECK(e.b == rotation_blocks({CirclePoint(), CirclePoint(), a1.inverse(), a1}));
}

TEST_CASE("spin7 membership: alpha1 trivial forces B = C") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    std::array<CirclePoint, 4> alpha;
    for (int i = 1; i < 4; ++i) alpha[i] = random_circle(rng);
    SpinElement e = torus_element(alpha);
    CHECK(e.in_spin7());
  }
  // and generically fails when alpha1 is nontrivial
  std::array<CirclePoint, 4> alpha;
  alpha[0] = CirclePoint::from_pair(2, 1);
  CHECK_FALSE(torus_element(alpha).in_spin7());
}

TEST_CASE("g2 members among sampled torus points are only the identity") {
  Rng rng(13);
  int g2_count = 0;
  for (int t = 0; t < 60; ++t) {
    std::array<CirclePoint, 4> alpha;
    for (auto& a : alpha) a = random_circle(rng);
    if (torus_element(alpha).in_g2()) ++g2_count;
  }
  CHECK(g2_count == 0);
  CHECK(torus_element({CirclePoint(), CirclePoint(), CirclePoint(), CirclePoint()}).in_g2());
}

TEST_CASE("theta3-only lift matches the stated matrices") {
  CirclePoint th = CirclePoint::from_pair(3, 1);
  auto lift = lift_C_diagonal({0, 0, 2, 0}, th);
  CHECK(lift.coeffs_in_theta);
  CHECK(lift.a_coeff == std::array<long long, 4>{1, -1, 1, 1});
  CHECK(lift.b_coeff == std::array<long long, 4>{-1, -1, 1, 1});
  CHECK(lift.elem.a == rotation_blocks({th, th.inverse(), th, th}));
  CHECK(lift.elem.b == rotation_blocks({th.inverse(), th.inverse(), th, th}));
  // the other preimage is the negation
  CHECK_NOTHROW(lift.elem.negated());
}

TEST_CASE("lift of (4,2,0,0) reproduces the first table row") {
  auto lift = lift_C_diagonal({4, 2, 0, 0}, CirclePoint::from_pair(3, 2));
  CHECK(lift.a_coeff == std::array<long long, 4>{-1, -1, -3, 3});
  CHECK(lift.b_coeff == std::array<long long, 4>{-3, 3, 1, -1});
}

TEST_CASE("zero lift is the identity") {
  auto lift = lift_C_diagonal({0, 0, 0, 0}, CirclePoint::from_pair(5, 2));
  CHECK(lift.elem.a == MatQ::identity(8));
  CHECK(lift.elem.b == MatQ::identity(8));
}

TEST_CASE("odd-sum lift needs a half angle") {
  // theta = (-7/25, 24/25) has the exact half (3/5, 4/5)
  CirclePoint th(Rational(-7, 25), Rational(24, 25));
  auto lift = lift_C_diagonal({1, 0, 0, 0}, th);
  CHECK_FALSE(lift.coeffs_in_theta);
  CHECK(lift.a_coeff == std::array<long long, 4>{-1, -1, -1, 1});
  // a half-less angle with odd sum throws
  CHECK_THROWS(lift_C_diagonal({1, 0, 0, 0}, CirclePoint::from_pair(2, 1)));
}

TEST_CASE("circle pattern derivation") {
  CirclePattern p = CirclePattern::from_n({0, 2, -1, 1});
  CHECK(p.l == std::array<long long, 4>{0, 0, 0, 2});
  CHECK(p.r == std::array<long long, 4>{-1, 1, 1, 1});
  CHECK(is_free_circle(p));

  CirclePattern q = CirclePattern::from_n({1, 1, 1, 3});
  CHECK(q.l == std::array<long long, 4>{1, 5, -1, 1});
  CHECK(q.r == std::array<long long, 4>{1, 3, -3, 3});
  CHECK(is_free_circle(q));

  CHECK_THROWS(CirclePattern::from_n({0, 2, -2, 0}));  // not primitive
}

TEST_CASE("non-free pattern with gcd witness 3") {
  // l = (-1,-1,-3,3), r = (-3,3,1,-1) arises from n = (-1, 3, -3, 3)
  CirclePattern p = CirclePattern::from_n({-1, 3, -3, 3});
  CHECK(p.l == std::array<long long, 4>{-1, -1, -3, 3});
  CHECK(p.r == std::array<long long, 4>{-3, 3, 1, -1});
  CHECK_FALSE(is_free_circle(p));
  auto w = first_gcd_failure(p);
  CHECK(w.found);
  CHECK(w.i == 3);
  CHECK(w.j == 1);
  CHECK(w.value == 3);
}

TEST_CASE("gcd convention: (0, x) and the undefined pair") {
  // l1 = 0 pairs with r, gcd(0, x) = |x|
  CirclePattern p = CirclePattern::from_n({0, 2, -1, 1});
  CHECK(p.l[0] == 0);
  CHECK(is_free_circle(p));  // all |r_j| = 1
  // a pattern with l_i = r_j = 0 is never free
  CirclePattern z = CirclePattern::from_n({0, 1, 0, 0});
  CHECK(z.l[0] == 0);
  CHECK(z.r[0] == 0);
  auto w = first_gcd_failure(z);
  CHECK(w.found);
  CHECK(w.undefined);
}

TEST_CASE("freeness oracle equivalence up to bound 4") {
  // exhaustive over primitive patterns; the oracle searches Z_N subgroups
  long long checked = 0, free_count = 0;
  for (long long n1 = -4; n1 <= 4; ++n1)
    for (long long n2 = -4; n2 <= 4; ++n2)
      for (long long n3 = -4; n3 <= 4; ++n3)
        for (long long n4 = -4; n4 <= 4; ++n4) {
          long long g = std::gcd(std::gcd(std::abs(n1), std::abs(n2)),
                                 std::gcd(std::abs(n3), std::abs(n4)));
          if (g != 1) continue;
          CirclePattern p = CirclePattern::from_n({n1, n2, n3, n4});
          bool lib = is_free_circle(p);
          bool oracle = oracles::free_by_subgroup_search(p, 1000);
          REQUIRE(lib == oracle);
          ++checked;
          free_count += lib;
        }
  CHECK(checked > 1000);
  CHECK(free_count > 0);
}

TEST_CASE("enumeration finds the known patterns and respects mod 8") {
  auto list = enumerate_free_circles(3, Exec::Serial);
  bool has_0211 = false, has_1113 = false;
  for (const auto& e : list) {
    CHECK(e.p1 % 8 == 0);
    std::array<long long, 8> sig;
    for (int i = 0; i < 4; ++i) {
      sig[i] = std::abs(e.pattern.l[i]);
      sig[4 + i] = std::abs(e.pattern.r[i]);
    }
    std::sort(sig.begin(), sig.end());
    if (sig == std::array<long long, 8>{0, 0, 0, 1, 1, 1, 1, 2}) has_0211 = true;
    if (sig == std::array<long long, 8>{1, 1, 1, 1, 3, 3, 3, 5}) has_1113 = true;
  }
  CHECK(has_0211);
  CHECK(has_1113);

  // serial and parallel enumeration agree exactly
  auto par = enumerate_free_circles(3, Exec::Parallel);
  REQUIRE(par.size() == list.size());
  for (size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].pattern.n == list[i].pattern.n);
    CHECK(par[i].p1 == list[i].p1);
  }
}

TEST_CASE("su2 table reproduces all nine rows") {
  auto rows = su2_table();
  REQUIRE(rows.size() == 9);

  using A4 = std::array<long long, 4>;
  struct Expect {
    A4 weights, a, b;
    bool free;
  };
  // torus weights, lift coefficients, and freeness for each partition row
  std::vector<Expect> expect = {
      {{4, 2, 0, 0}, {-1, -1, -3, 3}, {-3, 3, 1, -1}, false},   // 5+1+1+1
      {{3, 3, 1, 1}, {0, 0, -2, 4}, {-3, 3, 1, 1}, false},      // 4+4
      {{2, 1, 1, 0}, {0, -1, -1, 2}, {-2, 1, 1, 0}, false},     // 3+2+2+1
      {{2, 0, 0, 0}, {-1, -1, -1, 1}, {-1, 1, 1, -1}, true},    // 3+1+1+1+1+1
      {{1, 1, 1, 1}, {0, 0, 0, 2}, {-1, 1, 1, 1}, true},        // 2+2+2+2
      {{1, 1, 0, 0}, {0, 0, -1, 1}, {-1, 1, 0, 0}, false},      // 2+2+1+1+1+1
      {{6, 4, 2, 0}, {0, -2, -4, 6}, {-6, 4, 2, 0}, false},     // 7+1
      {{4, 2, 2, 0}, {0, -2, -2, 4}, {-4, 2, 2, 0}, false},     // 5+3
      {{2, 2, 0, 0}, {0, 0, -2, 2}, {-2, 2, 0, 0}, false},      // 3+3+1+1
  };
  for (size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].torus_weights == expect[i].weights);
    CHECK(rows[i].lift_a == expect[i].a);
    CHECK(rows[i].lift_b == expect[i].b);
    CHECK(rows[i].free == expect[i].free);
  }

  // gcd witness column
  CHECK(rows[0].witness.value == 3);  // gcd(l3, r1)
  CHECK(rows[0].witness.i == 3);
  CHECK(rows[0].witness.j == 1);
  CHECK(rows[1].witness.value == 3);
  CHECK(rows[2].witness.value == 2);
  CHECK(rows[5].witness.undefined);  // gcd(l1, r3) undefined
  CHECK(rows[5].witness.i == 1);
  CHECK(rows[5].witness.j == 3);
  CHECK(rows[6].witness.value == 6);
  CHECK(rows[7].witness.value == 4);
  CHECK(rows[8].witness.value == 2);
}

TEST_CASE("su2 table rejects malformed partitions") {
  CHECK_THROWS(su2_table_row({6, 2}));            // even parts with odd multiplicity
  CHECK_THROWS(su2_table_row({8}));               // same
  CHECK_THROWS(su2_table_row({3, 3, 3}));         // wrong sum
  CHECK_THROWS(su2_table_row({1, 1, 1, 1, 1, 1, 1, 1}));  // trivial
}

TEST_CASE("finite Z2 x Zd freeness on the headline pattern") {
  CirclePattern p = CirclePattern::from_n({0, 2, -1, 1});
  for (long long d : {1, 2, 3, 5, 7, 12, 50}) {
    CHECK(finite_action_free(p, d, true, false));  // S7 x S7
    CHECK(finite_action_free(p, d, true, true));   // S6 x S7
  }
  CHECK_THROWS(finite_action_free(p, 0, true, false));
}

TEST_CASE("finite freeness: d = 1 is the antipodal involution alone") {
  // any free circle pattern works; -I on one factor has no fixed vector
  CirclePattern p = CirclePattern::from_n({1, 1, 1, 3});
  CHECK(finite_action_free(p, 1, true, false));
}

TEST_CASE("finite freeness fails when a block is stuck") {
  // l_i = r_j = 0 leaves a fixed 2-plane on both factors for every rotation
  CirclePattern z = CirclePattern::from_n({0, 1, 0, 0});
  for (long long d : {2, 3, 10}) CHECK_FALSE(finite_action_free(z, d, true, false));
}

TEST_CASE("finite freeness is monotone under subgroup inclusion") {
  Rng rng(17);
  int tested = 0;
  while (tested < 500) {
    std::array<long long, 4> n;
    for (auto& x : n) x = rng.uniform(-3, 3);
    long long g = 0;
    for (long long x : n) g = std::gcd(g, std::abs(x));
    if (g != 1) continue;
    CirclePattern p = CirclePattern::from_n(n);
    long long d = rng.uniform(1, 12), m = rng.uniform(1, 5);
    bool minus = rng.uniform(0, 1) == 1;
    bool s6 = rng.uniform(0, 1) == 1;
    if (!finite_action_free(p, d, minus, s6)) CHECK_FALSE(finite_action_free(p, d * m, minus, s6));
    ++tested;
  }
}
