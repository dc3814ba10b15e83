#pragma once

#include "fatlab/rational.hpp"

#include <stdexcept>

namespace fatlab {

/// Exact point (c, s) on the unit circle, c^2 + s^2 = 1.  Represents a rotation
/// angle without trigonometry; composition is angle addition.
struct CirclePoint {
  Rational c{1};
  Rational s{0};

  CirclePoint() = default;
  CirclePoint(Rational cc, Rational ss) : c(std::move(cc)), s(std::move(ss)) {
    if (sq(c) + sq(s) != Rational(1))
      throw std::invalid_argument("CirclePoint: c^2 + s^2 != 1");
  }

  static CirclePoint identity() { return CirclePoint(); }

  /// Rational point from an integer pair: ((p^2-q^2)/(p^2+q^2), 2pq/(p^2+q^2)).
  static CirclePoint from_pair(long long p, long long q) {
    Rational p2 = sq(Rational(p)), q2 = sq(Rational(q));
    Rational d = p2 + q2;
    if (d.is_zero()) throw std::invalid_argument("CirclePoint::from_pair: p=q=0");
    return CirclePoint((p2 - q2) / d, Rational(2) * Rational(p) * Rational(q) / d);
  }

  bool is_identity() const { return c.is_one() && s.is_zero(); }

  CirclePoint inverse() const { return CirclePoint(c, -s); }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.c == b.c && a.s == b.s;
  }
  friend bool operator!=(const CirclePoint& a, const CirclePoint& b) { return !(a == b); }
};

/// Angle addition: equals complex multiplication (a.c*b.c - a.s*b.s, a.c*b.s + a.s*b.c).
inline CirclePoint circle_compose(const CirclePoint& a, const CirclePoint& b) {
  return CirclePoint(a.c * b.c - a.s * b.s, a.c * b.s + a.s * b.c);
}

/// n-fold composition, n may be negative.
inline CirclePoint circle_pow(const CirclePoint& a, long long n) {
  CirclePoint base = n < 0 ? a.inverse() : a;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                               : static_cast<unsigned long long>(n);
  CirclePoint acc;
  CirclePoint sq = base;
  while (k) {
    if (k & 1ull) acc = circle_compose(acc, sq);
    sq = circle_compose(sq, sq);
    k >>= 1;
  }
  return acc;
}

/// Exact half angle when one exists: phi with phi∘phi = theta.  Requires
/// (1+c)/2 and (1-c)/2 to be rational squares.
inline bool circle_half(const CirclePoint& theta, CirclePoint& out) {
  Rational hc, hs;
  if (!rational_sqrt((Rational(1) + theta.c) / Rational(2), hc)) return false;
  if (!rational_sqrt((Rational(1) - theta.c) / Rational(2), hs)) return false;
  if (theta.s.sign() < 0) hs = -hs;
  // 2*hc*hs must reproduce s; if c = -1 the sign of hs is free.
  CirclePoint cand(hc, hs);
  if (circle_compose(cand, cand) == theta) {
    out = cand;
    return true;
  }
  return false;
}

}  // namespace fatlab
