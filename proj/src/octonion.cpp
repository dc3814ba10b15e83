#include "fatlab/octonion.hpp"

#include <sstream>
#include <stdexcept>

namespace fatlab {

namespace {

// Signed product table for the seven imaginary units i, j, k, l, il, jl, kl
// (indices 1..7), entry (row)(column).  Value 8*s + t encodes s = sign bit,
// t = target index, with t = 0 meaning the real unit.
// Transcribed once; octonion_table_self_test() guards the transcription.
struct Cell {
  int sign;
  int idx;
};

constexpr Cell T[7][7] = {
    //      i          j          k          l          il         jl         kl
    {{-1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}},   // i
    {{-1, 3}, {-1, 0}, {+1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}},   // j
    {{+1, 2}, {-1, 1}, {-1, 0}, {+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}},   // k
    {{-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},   // l
    {{+1, 4}, {-1, 7}, {+1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {+1, 2}},   // il
    {{+1, 7}, {+1, 4}, {-1, 5}, {-1, 2}, {+1, 3}, {-1, 0}, {-1, 1}},   // jl
    {{-1, 6}, {+1, 5}, {+1, 4}, {-1, 3}, {-1, 2}, {+1, 1}, {-1, 0}}};  // kl

}  // namespace

const std::array<std::string, 8>& octonion_basis_names() {
  static const std::array<std::string, 8> names = {"1", "i", "j", "k", "l", "il", "jl", "kl"};
  return names;
}

Octonion Octonion::operator-() const {
  Octonion o;
  for (int t = 0; t < 8; ++t) o.c[t] = -c[t];
  return o;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (int t = 0; t < 8; ++t) c[t] += o.c[t];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (int t = 0; t < 8; ++t) c[t] -= o.c[t];
  return *this;
}

Octonion operator*(const Rational& s, Octonion a) {
  for (int t = 0; t < 8; ++t) a.c[t] *= s;
  return a;
}

bool Octonion::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

bool Octonion::is_real() const {
  for (int t = 1; t < 8; ++t)
    if (!c[t].is_zero()) return false;
  return true;
}

std::string Octonion::str() const {
  std::ostringstream os;
  bool first = true;
  for (int t = 0; t < 8; ++t) {
    if (c[t].is_zero()) continue;
    if (!first) os << (c[t].sign() > 0 ? " + " : " - ");
    else if (c[t].sign() < 0) os << "-";
    first = false;
    Rational a = abs(c[t]);
    if (!a.is_one() || t == 0) os << a.str();
    if (t != 0) {
      if (!a.is_one()) os << "*";
      os << octonion_basis_names()[t];
    }
  }
  return first ? "0" : os.str();
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (int p = 0; p < 8; ++p) {
    if (a.c[p].is_zero()) continue;
    for (int q = 0; q < 8; ++q) {
      if (b.c[q].is_zero()) continue;
      Rational prod = a.c[p] * b.c[q];
      if (p == 0) {
        out.c[q] += prod;
      } else if (q == 0) {
        out.c[p] += prod;
      } else {
        const Cell& cell = T[p - 1][q - 1];
        out.c[cell.idx] += cell.sign > 0 ? prod : -prod;
      }
    }
  }
  return out;
}

Octonion conj(const Octonion& a) {
  Octonion o = -a;
  o.c[0] = a.c[0];
  return o;
}

Rational norm2(const Octonion& a) {
  Rational n;
  for (int t = 0; t < 8; ++t) n += sq(a.c[t]);
  return n;
}

MatQ left_mult_matrix(const Octonion& u) {
  MatQ m(8, 8);
  for (int j = 0; j < 8; ++j) {
    Octonion col = oct_mul(u, Octonion::basis(j));
    for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
  }
  return m;
}

MatQ right_mult_matrix(const Octonion& u) {
  MatQ m(8, 8);
  for (int j = 0; j < 8; ++j) {
    Octonion col = oct_mul(Octonion::basis(j), u);
    for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
  }
  return m;
}

bool check_moufang(const Octonion& a, const Octonion& b, const Octonion& c) {
  // (ab)(ca) = (a(bc))a
  if (oct_mul(oct_mul(a, b), oct_mul(c, a)) != oct_mul(oct_mul(a, oct_mul(b, c)), a))
    return false;
  // ((ab)a)c = a(b(ac))
  if (oct_mul(oct_mul(oct_mul(a, b), a), c) != oct_mul(a, oct_mul(b, oct_mul(a, c))))
    return false;
  // ((ab)c)b = a(b(cb))
  if (oct_mul(oct_mul(oct_mul(a, b), c), b) != oct_mul(a, oct_mul(b, oct_mul(c, b))))
    return false;
  return true;
}

int octonion_table_self_test() {
  auto fail = [](const std::string& what) {
    throw std::logic_error("octonion table self-test failed: " + what);
  };
  const Octonion one = Octonion::one();
  for (int t = 0; t < 8; ++t) {
    Octonion e = Octonion::basis(t);
    if (oct_mul(one, e) != e || oct_mul(e, one) != e) fail("unit law");
  }
  for (int p = 1; p < 8; ++p) {
    Octonion ep = Octonion::basis(p);
    if (oct_mul(ep, ep) != -one) fail("square of imaginary unit");
    for (int q = 1; q < 8; ++q) {
      if (p == q) continue;
      if (oct_mul(ep, Octonion::basis(q)) != -oct_mul(Octonion::basis(q), ep))
        fail("antisymmetry");
    }
  }
  int pairs = 0;
  for (int p = 1; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q) {
      Octonion a = Octonion::basis(p), b = Octonion::basis(q);
      Octonion ab = oct_mul(a, b);
      bool unit = false;
      for (int t = 1; t < 8; ++t)
        if (ab == Octonion::basis(t) || ab == -Octonion::basis(t)) unit = (t != p && t != q);
      if (!unit) fail("product of distinct units is not a third unit");
      // associativity inside the generated quaternion subalgebra
      const Octonion gens[3] = {a, b, ab};
      for (const auto& x : gens)
        for (const auto& y : gens)
          for (const auto& z : gens)
            if (oct_mul(oct_mul(x, y), z) != oct_mul(x, oct_mul(y, z)))
              fail("quaternionic subalgebra is not associative");
      ++pairs;
    }
  return pairs;
}

}  // namespace fatlab
