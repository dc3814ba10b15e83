#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatlab/circle.hpp"
#include "fatlab/matq.hpp"
#include "fatlab/octonion.hpp"
#include "fatlab/rng.hpp"

using namespace fatlab;

namespace {

Octonion random_oct(Rng& rng) {
  Octonion o;
  for (int t = 0; t < 8; ++t) o[t] = Rational(rng.uniform(-9, 9), rng.uniform(1, 5));
  return o;
}

// basis indices: 0=1 1=i 2=j 3=k 4=l 5=il 6=jl 7=kl
Octonion e(int t) { return Octonion::basis(t); }

}  // namespace

TEST_CASE("table transcription self-test") {
  CHECK(octonion_table_self_test() == 21);
}

TEST_CASE("pinned product convention: six table entries, (row)(column)") {
  CHECK(oct_mul(e(1), e(2)) == e(3));    // i j = k
  CHECK(oct_mul(e(2), e(1)) == -e(3));   // j i = -k
  CHECK(oct_mul(e(1), e(4)) == e(5));    // i l = il
  CHECK(oct_mul(e(4), e(1)) == -e(5));   // l i = -il
  CHECK(oct_mul(e(6), e(7)) == -e(1));   // (jl)(kl) = -i
  CHECK(oct_mul(e(5), e(3)) == e(6));    // (il) k = jl
}

TEST_CASE("unit law on random elements") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Octonion x = random_oct(rng);
    CHECK(oct_mul(Octonion::one(), x) == x);
    CHECK(oct_mul(x, Octonion::one()) == x);
  }
}

TEST_CASE("conjugation and norm") {
  CHECK(conj(e(1)) == -e(1));
  Octonion x = e(0) + e(1);
  CHECK(norm2(x) == Rational(2));
  CHECK(conj(x) == e(0) - e(1));
}

TEST_CASE("norm is multiplicative on 100 random pairs") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Octonion a = random_oct(rng), b = random_oct(rng);
    CHECK(norm2(oct_mul(a, b)) == norm2(a) * norm2(b));
  }
}

TEST_CASE("alternativity on random pairs") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    Octonion a = random_oct(rng), b = random_oct(rng);
    CHECK(oct_mul(a, oct_mul(a, b)) == oct_mul(oct_mul(a, a), b));
    CHECK(oct_mul(oct_mul(b, a), a) == oct_mul(b, oct_mul(a, a)));
  }
}

TEST_CASE("moufang identities") {
  Rng rng(31);
  // unit first argument is trivially fine
  CHECK(check_moufang(Octonion::one(), random_oct(rng), random_oct(rng)));
  for (int t = 0; t < 200; ++t)
    CHECK(check_moufang(random_oct(rng), random_oct(rng), random_oct(rng)));
}

TEST_CASE("non-associativity witness still satisfies moufang") {
  // (i j) l = kl but i (j l) = -kl
  CHECK(oct_mul(oct_mul(e(1), e(2)), e(4)) == e(7));
  CHECK(oct_mul(e(1), oct_mul(e(2), e(4))) == -e(7));
  CHECK(check_moufang(e(1), e(2), e(4)));
}

TEST_CASE("left/right multiplication matrices") {
  CHECK(left_mult_matrix(Octonion::one()) == MatQ::identity(8));

  // L_i applied to j gives k
  VecQ j(8);
  j[2] = Rational(1);
  VecQ k = left_mult_matrix(e(1)).apply(j);
  CHECK(k[3] == Rational(1));

  // R_l applied to i: i*l = il (row i, column l of the table)
  VecQ i(8);
  i[1] = Rational(1);
  VecQ il = right_mult_matrix(e(4)).apply(i);
  CHECK(il[5] == Rational(1));
  // the opposite order l*i gives -il, distinguishing the two conventions
  CHECK(oct_mul(e(4), e(1)) == -e(5));
}

TEST_CASE("L_u and R_u are orthogonal exactly for unit u") {
  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    long long p = rng.uniform(-9, 9), q = rng.uniform(-9, 9);
    if (p == 0 && q == 0) p = 1;
    CirclePoint cp = CirclePoint::from_pair(p, q);
    int a = int(rng.uniform(1, 7)), b = int(rng.uniform(1, 7));
    while (b == a) b = int(rng.uniform(1, 7));
    Octonion u = cp.c * e(a) + cp.s * e(b);  // unit: c^2+s^2 = 1
    REQUIRE(norm2(u) == Rational(1));
    MatQ L = left_mult_matrix(u), R = right_mult_matrix(u);
    CHECK(L.transpose() * L == MatQ::identity(8));
    CHECK(R.transpose() * R == MatQ::identity(8));
  }
}

TEST_CASE("L_u R_conj(u) fixes 1 and u, acts as -1 on the complement") {
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    long long p = rng.uniform(-9, 9), q = rng.uniform(-9, 9);
    if (p == 0 && q == 0) p = 1;
    CirclePoint cp = CirclePoint::from_pair(p, q);
    int a = int(rng.uniform(1, 7)), b = int(rng.uniform(1, 7));
    while (b == a) b = int(rng.uniform(1, 7));
    Octonion u = cp.c * e(a) + cp.s * e(b);  // purely imaginary unit
    MatQ m = left_mult_matrix(u) * right_mult_matrix(conj(u));

    auto apply = [&](const Octonion& x) {
      VecQ v(x.c.begin(), x.c.end());
      VecQ w = m.apply(v);
      Octonion out;
      for (int s = 0; s < 8; ++s) out[s] = w[s];
      return out;
    };
    CHECK(apply(Octonion::one()) == Octonion::one());
    CHECK(apply(u) == u);
    // complement of span{1, u}: any w with <w,1> = <w,u> = 0
    for (int s = 1; s < 8; ++s) {
      Octonion w = e(s);
      // project away the u component (real part of e_s is zero already)
      Rational coeff = u[s];  // <e_s, u>
      w -= coeff * u;
      if (w.is_zero()) continue;
      CHECK(apply(w) == -w);
    }
  }
}
