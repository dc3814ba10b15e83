#include "fatlab/spin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fatlab::spin {

namespace {

Octonion column_oct(const MatQ& m, int j) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o[i] = m.at(i, j);
  return o;
}

Octonion apply_oct(const MatQ& m, const Octonion& x) {
  Octonion out;
  for (int j = 0; j < 8; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < 8; ++i)
      if (!m.at(i, j).is_zero()) out[i] += m.at(i, j) * x[j];
  }
  return out;
}

}  // namespace

MatQ induced_C(const MatQ& a, const MatQ& b) {
  return left_mult_matrix(column_oct(a, 0)) * b;
}

bool triality_check(const MatQ& a, const MatQ& b, const MatQ& c) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Octonion lhs = oct_mul(column_oct(a, i), column_oct(b, j));
      Octonion rhs = apply_oct(c, oct_mul(Octonion::basis(i), Octonion::basis(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

SpinElement::SpinElement(MatQ a_in, MatQ b_in) : a(std::move(a_in)), b(std::move(b_in)) {
  // guards the table transcription once per process before any triality work
  static const int table_ok = octonion_table_self_test();
  (void)table_ok;
  if (a.rows() != 8 || a.cols() != 8 || b.rows() != 8 || b.cols() != 8)
    throw std::invalid_argument("SpinElement: 8x8 matrices required");
  c = induced_C(a, b);
  if (!triality_check(a, b, c))
    throw std::invalid_argument("SpinElement: pair admits no compatible C");
}

SpinElement SpinElement::negated() const {
  return SpinElement(Rational(-1) * a, Rational(-1) * b);
}

MatQ rotation_blocks(const std::array<CirclePoint, 4>& t) {
  MatQ m(8, 8);
  for (int blk = 0; blk < 4; ++blk) {
    m.at(2 * blk, 2 * blk) = t[blk].c;
    m.at(2 * blk, 2 * blk + 1) = -t[blk].s;
    m.at(2 * blk + 1, 2 * blk) = t[blk].s;
    m.at(2 * blk + 1, 2 * blk + 1) = t[blk].c;
  }
  return m;
}

SpinElement torus_element(const std::array<CirclePoint, 4>& al) {
  auto add = [](const CirclePoint& x, const CirclePoint& y) { return circle_compose(x, y); };
  std::array<CirclePoint, 4> ta = {
      al[0],
      add(add(al[0], al[2]), al[3]),
      add(add(al[1], al[2]), al[3].inverse()),
      al[1],
  };
  std::array<CirclePoint, 4> tb = {
      al[2],
      al[3],
      add(add(al[0].inverse(), al[1]), al[3].inverse()),
      add(add(al[0], al[1]), al[2]),
  };
  return SpinElement(rotation_blocks(ta), rotation_blocks(tb));
}

LiftResult lift_C_diagonal(const std::array<long long, 4>& c, const CirclePoint& theta,
                           const std::optional<CirclePoint>& half) {
  const auto [c1, c2, c3, c4] = c;
  // block coefficients in units of the half angle
  std::array<long long, 4> a2 = {-c1 + c2 + c3 - c4, -c1 + c2 - c3 + c4, -c1 - c2 + c3 + c4,
                                 c1 + c2 + c3 + c4};
  std::array<long long, 4> b2 = {-c1 - c2 - c3 + c4, c1 + c2 - c3 + c4, c1 - c2 + c3 + c4,
                                 -c1 + c2 + c3 + c4};
  const long long sum = c1 + c2 + c3 + c4;
  LiftResult out = [&] {
    if (sum % 2 == 0) {
      std::array<CirclePoint, 4> ta, tb;
      std::array<long long, 4> aa, bb;
      for (int i = 0; i < 4; ++i) {
        aa[i] = a2[i] / 2;
        bb[i] = b2[i] / 2;
        ta[i] = circle_pow(theta, aa[i]);
        tb[i] = circle_pow(theta, bb[i]);
      }
      return LiftResult{SpinElement(rotation_blocks(ta), rotation_blocks(tb)), aa, bb, true};
    }
    CirclePoint phi;
    if (half) {
      phi = *half;
      if (circle_compose(phi, phi) != theta)
        throw std::invalid_argument("lift_C_diagonal: supplied half angle does not square");
    } else if (!circle_half(theta, phi)) {
      throw std::invalid_argument("lift_C_diagonal: no exact half angle available");
    }
    std::array<CirclePoint, 4> ta, tb;
    for (int i = 0; i < 4; ++i) {
      ta[i] = circle_pow(phi, a2[i]);
      tb[i] = circle_pow(phi, b2[i]);
    }
    return LiftResult{SpinElement(rotation_blocks(ta), rotation_blocks(tb)), a2, b2, false};
  }();

  // The projection through the triality relation recovers C up to the
  // orientation of the first plane: the block speeds come out as
  // (-c1, c2, c3, c4), an SO(8)-conjugate of diag(R(c_i theta)).  This is the
  // convention under which the subgroup table's lift coefficients are stated;
  // checked exactly here.
  std::array<CirclePoint, 4> tc = {circle_pow(theta, -c[0]), circle_pow(theta, c[1]),
                                   circle_pow(theta, c[2]), circle_pow(theta, c[3])};
  if (!(out.elem.c == rotation_blocks(tc)))
    throw std::logic_error("lift_C_diagonal: projection does not recover C");
  return out;
}

CirclePattern CirclePattern::from_n(const std::array<long long, 4>& n) {
  long long g = 0;
  for (long long x : n) g = std::gcd(g, x < 0 ? -x : x);
  if (g != 1) throw std::invalid_argument("CirclePattern: n must be primitive");
  CirclePattern p;
  p.n = n;
  p.l = {n[0], n[0] + n[2] + n[3], n[1] + n[2] - n[3], n[1]};
  p.r = {n[2], n[3], -n[0] + n[1] - n[3], n[0] + n[1] + n[2]};
  return p;
}

CirclePattern CirclePattern::from_lr(const std::array<long long, 4>& l,
                                     const std::array<long long, 4>& r) {
  CirclePattern p;
  p.n = {l[0], l[3], r[0], r[1]};
  p.l = {p.n[0], p.n[0] + p.n[2] + p.n[3], p.n[1] + p.n[2] - p.n[3], p.n[1]};
  p.r = {p.n[2], p.n[3], -p.n[0] + p.n[1] - p.n[3], p.n[0] + p.n[1] + p.n[2]};
  if (p.l != l || p.r != r)
    throw std::invalid_argument("CirclePattern: speeds violate the torus relations");
  return p;
}

long long CirclePattern::sum_of_squares() const {
  long long s = 0;
  for (int i = 0; i < 4; ++i) s += l[i] * l[i] + r[i] * r[i];
  return s;
}

bool is_free_circle(const CirclePattern& p) { return !first_gcd_failure(p).found; }

GcdWitness first_gcd_failure(const CirclePattern& p) {
  GcdWitness w;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long long li = p.l[i] < 0 ? -p.l[i] : p.l[i];
      long long rj = p.r[j] < 0 ? -p.r[j] : p.r[j];
      if (li == 0 && rj == 0) {
        w.found = true;
        w.undefined = true;
        w.i = i + 1;
        w.j = j + 1;
        return w;
      }
      long long g = std::gcd(li, rj);
      if (g != 1) {
        w.found = true;
        w.i = i + 1;
        w.j = j + 1;
        w.value = g;
        return w;
      }
    }
  return w;
}

std::vector<EnumeratedPattern> enumerate_free_circles(int bound, Exec exec) {
  if (bound < 1) throw std::invalid_argument("enumerate_free_circles: bound >= 1 required");
  if (bound > 32)
    throw std::invalid_argument("enumerate_free_circles: bound > 32 exceeds the lattice budget");
  const long long side = 2 * bound + 1;
  const std::uint64_t total = std::uint64_t(side) * side * side * side;
  std::vector<char> keep(total, 0);
  auto nth = [&](std::uint64_t idx) {
    std::array<long long, 4> n;
    for (int i = 3; i >= 0; --i) {
      n[i] = (long long)(idx % side) - bound;
      idx /= side;
    }
    return n;
  };
  scan_apply(
      total,
      [&](std::uint64_t idx) {
        auto n = nth(idx);
        long long g = 0;
        for (long long x : n) g = std::gcd(g, x < 0 ? -x : x);
        if (g != 1) return;
        if (is_free_circle(CirclePattern::from_n(n))) keep[idx] = 1;
      },
      exec);

  std::vector<EnumeratedPattern> out;
  std::map<std::pair<std::array<long long, 8>, long long>, bool> seen;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!keep[idx]) continue;
    CirclePattern p = CirclePattern::from_n(nth(idx));
    std::array<long long, 8> sig;
    for (int i = 0; i < 4; ++i) {
      sig[i] = p.l[i] < 0 ? -p.l[i] : p.l[i];
      sig[4 + i] = p.r[i] < 0 ? -p.r[i] : p.r[i];
    }
    std::sort(sig.begin(), sig.end());
    long long p1 = p.sum_of_squares();
    if (seen.emplace(std::make_pair(sig, p1), true).second)
      out.push_back(EnumeratedPattern{p, p1});
  }
  return out;
}

const std::vector<std::vector<int>>& su2_partitions() {
  static const std::vector<std::vector<int>> parts = {
      {5, 1, 1, 1}, {4, 4},  {3, 2, 2, 1}, {3, 1, 1, 1, 1, 1}, {2, 2, 2, 2},
      {2, 2, 1, 1, 1, 1}, {7, 1}, {5, 3},  {3, 3, 1, 1},
  };
  return parts;
}

Su2Rep su2_table_row(const std::vector<int>& partition) {
  int sum = 0;
  std::map<int, int> mult;
  for (int d : partition) {
    if (d <= 0) throw std::invalid_argument("su2_table_row: parts must be positive");
    sum += d;
    ++mult[d];
  }
  if (sum != 8) throw std::invalid_argument("su2_table_row: partition must sum to 8");
  for (auto [d, m] : mult)
    if (d % 2 == 0 && m % 2 != 0)
      throw std::invalid_argument("su2_table_row: even parts need even multiplicity");
  bool trivial = true;
  for (int d : partition) trivial = trivial && (d == 1);
  if (trivial) throw std::invalid_argument("su2_table_row: trivial representation");

  // rotation speeds: odd part d gives d-1, d-3, ..., 2 plus a fixed direction;
  // a pair of even parts d, d gives d-1, d-3, ..., 1 twice each
  std::vector<long long> speeds;
  int fixed = 0;
  for (auto [d, m] : mult) {
    if (d % 2 ==  1) {
      for (int rep = 0; rep < m; ++rep) {
        for (int w = d - 1; w >= 2; w -= 2) speeds.push_back(w);
        ++fixed;
      }
    } else {
      for (int rep = 0; rep < m / 2; ++rep)
        for (int w = d - 1; w >= 1; w -= 2) {
          speeds.push_back(w);
          speeds.push_back(w);
        }
    }
  }
  for (int i = 0; i < fixed / 2; ++i) speeds.push_back(0);
  if (speeds.size() != 4) throw std::logic_error("su2_table_row: weight bookkeeping error");
  std::sort(speeds.rbegin(), speeds.rend());

  Su2Rep rep;
  rep.partition = partition;
  std::copy(speeds.begin(), speeds.end(), rep.torus_weights.begin());

  // exact lift at a sample angle; the coefficient arrays are angle-free
  CirclePoint theta = CirclePoint::from_pair(2, 1);  // (3/5, 4/5)
  auto lift = lift_C_diagonal(rep.torus_weights, theta);
  if (!lift.coeffs_in_theta) throw std::logic_error("su2_table_row: lift not integral");
  rep.lift_a = lift.a_coeff;
  rep.lift_b = lift.b_coeff;
  rep.pattern = CirclePattern::from_lr(lift.a_coeff, lift.b_coeff);
  rep.free = is_free_circle(rep.pattern);
  rep.witness = first_gcd_failure(rep.pattern);
  return rep;
}

std::vector<Su2Rep> su2_table() {
  std::vector<Su2Rep> rows;
  for (const auto& part : su2_partitions()) rows.push_back(su2_table_row(part));
  return rows;
}

bool finite_action_free(const CirclePattern& p, long long d, bool minus_on_first,
                        bool sphere6) {
  if (d < 1) throw std::invalid_argument("finite_action_free: d >= 1 required");
  // Element (eps, k): first factor acts by (-1)^(eps * on_first) diag(R(l_i 2pi k / d)),
  // second by (-1)^(eps * on_second) diag(R(r_j 2pi k / d)).  A block R(w 2pi k/d)
  // scaled by (-1)^eps contains the eigenvalue 1 iff 2 w k + eps d = 0 mod 2d.
  auto block_fixed = [&](long long w, long long k, bool minus) {
    long long lhs = (2 * w * k % (2 * d) + (minus ? d : 0)) % (2 * d);
    if (lhs < 0) lhs += 2 * d;
    return lhs == 0;
  };
  for (int eps = 0; eps < 2; ++eps)
    for (long long k = 0; k < d; ++k) {
      if (eps == 0 && k == 0) continue;
      bool minus_first = (eps == 1) && minus_on_first;
      bool minus_second = (eps == 1) && !minus_on_first;
      int first_dim = 0;
      for (int i = 0; i < 4; ++i)
        if (block_fixed(p.l[i], k, minus_first))
          first_dim += (sphere6 && i == 0) ? 1 : 2;  // block (e1, e2) meets Im O in e2 only
      int second_dim = 0;
      for (int j = 0; j < 4; ++j)
        if (block_fixed(p.r[j], k, minus_second)) second_dim += 2;
      if (first_dim >= 1 && second_dim >= 1) return false;
    }
  return true;
}

}  // namespace fatlab::spin
