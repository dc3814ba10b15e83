#pragma once

#include "fatlab/circle.hpp"
#include "fatlab/matq.hpp"
#include "fatlab/octonion.hpp"
#include "fatlab/parallel.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fatlab::spin {

/// Candidate third matrix from the triality relation A(x) B(y) = C(xy) at
/// x = 1: C = L_{A(1)} composed with B.  Callers confirm with triality_check.
MatQ induced_C(const MatQ& a, const MatQ& b);

/// True iff A(e_i) * B(e_j) = C(e_i e_j) for all 64 basis pairs; bilinearity
/// makes the basis check sufficient.
bool triality_check(const MatQ& a, const MatQ& b, const MatQ& c);

/// A point of the double cover of SO(8): a pair (A, B) admitting a compatible
/// C.  Construction recovers C from (A, B) and verifies all 64 pairs exactly.
struct SpinElement {
  MatQ a, b, c;
  SpinElement(MatQ a_in, MatQ b_in);

  /// B = C: membership in the stabilizer copy of Spin(7).
  bool in_spin7() const { return b == c; }
  /// A = B = C: membership in G2.
  bool in_g2() const { return a == b && b == c; }

  SpinElement negated() const;  ///< the other preimage of the same C
};

/// Exact maximal-torus element from four angle parameters:
///   A = diag(R(a1), R(a1+a3+a4), R(a2+a3-a4), R(a2)),
///   B = diag(R(a3), R(a4), R(-a1+a2-a4), R(a1+a2+a3)).
SpinElement torus_element(const std::array<CirclePoint, 4>& alpha);

/// Block-diagonal rotation matrix diag(R(t1), ..., R(t4)).
MatQ rotation_blocks(const std::array<CirclePoint, 4>& t);

struct LiftResult {
  SpinElement elem;
  /// Rotation coefficients of the A and B blocks, in units of theta when
  /// integral there (the common case), otherwise in units of the half angle.
  std::array<long long, 4> a_coeff{};
  std::array<long long, 4> b_coeff{};
  bool coeffs_in_theta = true;
};

/// The lift of C = diag(R(c1 t), ..., R(c4 t)) connected to the identity.
/// When the coefficient sum is odd an exact half angle of theta is required
/// (supply it, or one is derived when theta admits a rational half).
LiftResult lift_C_diagonal(const std::array<long long, 4>& c, const CirclePoint& theta,
                           const std::optional<CirclePoint>& half = std::nullopt);

/// Rotation speeds of a circle subgroup on the two sphere factors, derived
/// from the primitive lattice vector (n1..n4).
struct CirclePattern {
  std::array<long long, 4> n{};
  std::array<long long, 4> l{};
  std::array<long long, 4> r{};

  static CirclePattern from_n(const std::array<long long, 4>& n);

  /// Pattern from explicit block speeds; they must satisfy the torus linear
  /// relations.  Unlike from_n no primitivity is required: subgroups factoring
  /// through so3 double-wrap the parameter circle and carry even speeds.
  static CirclePattern from_lr(const std::array<long long, 4>& l,
                               const std::array<long long, 4>& r);

  long long sum_of_squares() const;

  friend bool operator==(const CirclePattern& a, const CirclePattern& b) {
    return a.n == b.n;
  }
};

/// First (i, j) in scan order whose gcd breaks freeness, when one exists.
struct GcdWitness {
  bool found = false;
  bool undefined = false;  ///< the (0, 0) pair
  int i = 0, j = 0;        ///< 1-based block indices
  long long value = 0;
};

/// Free iff gcd(l_i, r_j) = 1 for all 16 pairs, with gcd(0, x) = |x| and the
/// pair (0, 0) never free.
bool is_free_circle(const CirclePattern& p);
GcdWitness first_gcd_failure(const CirclePattern& p);

struct EnumeratedPattern {
  CirclePattern pattern;
  long long p1;  ///< sum of l_i^2 + r_i^2
};

/// All primitive n with max |n_i| <= bound acting freely, deduplicated by the
/// multiset of |l| and |r| values together with p1.  Deterministic order.
std::vector<EnumeratedPattern> enumerate_free_circles(int bound, Exec exec = default_exec());

/// A row of the table of su2/so3 subgroups, keyed by the partition of 8.
struct Su2Rep {
  std::vector<int> partition;
  std::array<long long, 4> torus_weights{};  ///< descending rotation speeds
  std::array<long long, 4> lift_a{};
  std::array<long long, 4> lift_b{};
  CirclePattern pattern;
  bool free = false;
  GcdWitness witness;
};

/// The nine valid nontrivial partitions (even parts with even multiplicity),
/// in table order.
const std::vector<std::vector<int>>& su2_partitions();

Su2Rep su2_table_row(const std::vector<int>& partition);
std::vector<Su2Rep> su2_table();

/// Freeness of the Z2 x Z_d subgroup generated by the antipodal involution on
/// one factor and the Z_d subaction of the circle pattern.  Pure congruence
/// arithmetic on half angles mod 2d.
bool finite_action_free(const CirclePattern& p, long long d, bool minus_on_first,
                        bool sphere6);

}  // namespace fatlab::spin
