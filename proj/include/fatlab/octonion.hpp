#pragma once

#include "fatlab/matq.hpp"
#include "fatlab/rational.hpp"

#include <array>
#include <string>

namespace fatlab {

/// Octonion over the rationals in the ordered basis {1, i, j, k, l, il, jl, kl}.
struct Octonion {
  std::array<Rational, 8> c{};

  Octonion() = default;
  static Octonion basis(int index) {
    Octonion o;
    o.c[index] = Rational(1);
    return o;
  }
  static Octonion one() { return basis(0); }

  Rational& operator[](int i) { return c[i]; }
  const Rational& operator[](int i) const { return c[i]; }

  Octonion operator-() const;
  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(const Rational& s, Octonion a);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
  friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

  bool is_zero() const;
  bool is_real() const;

  std::string str() const;
};

/// Names of the basis units, in order.
const std::array<std::string, 8>& octonion_basis_names();

/// Product by bilinear extension of the multiplication table, (row)(column).
Octonion oct_mul(const Octonion& a, const Octonion& b);

/// Conjugation: negates the seven imaginary coordinates.
Octonion conj(const Octonion& a);

/// Squared norm; multiplicative over products.
Rational norm2(const Octonion& a);

/// 8x8 matrix of x -> u*x (columns are u * e_j).
MatQ left_mult_matrix(const Octonion& u);

/// 8x8 matrix of x -> x*u (columns are e_j * u).
MatQ right_mult_matrix(const Octonion& u);

/// True iff all three Moufang identities hold for (a, b, c):
///   (ab)(ca) = (a(bc))a,  ((ab)a)c = a(b(ac)),  ((ab)c)b = a(b(cb)).
bool check_moufang(const Octonion& a, const Octonion& b, const Octonion& c);

/// Verifies the transcribed table: unit laws, antisymmetry of the imaginary
/// part, e_a^2 = -1, and associativity of every 2-generator (quaternionic)
/// subalgebra -- one check per each of the 21 imaginary pairs.  Throws on
/// failure; returns the number of quaternionic pairs checked.
int octonion_table_self_test();

}  // namespace fatlab
