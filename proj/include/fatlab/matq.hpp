#pragma once

#include "fatlab/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fatlab {

using VecQ = std::vector<Rational>;

/// Dense rational matrix, row-major.
class MatQ {
public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static MatQ identity(int n);
  static MatQ zero(int rows, int cols) { return MatQ(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_skew() const;

  MatQ transpose() const;
  Rational trace() const;

  MatQ& operator+=(const MatQ& o);
  MatQ& operator-=(const MatQ& o);
  friend MatQ operator+(MatQ a, const MatQ& b) { return a += b; }
  friend MatQ operator-(MatQ a, const MatQ& b) { return a -= b; }
  friend MatQ operator*(const MatQ& a, const MatQ& b);
  friend MatQ operator*(const Rational& s, MatQ a);
  friend bool operator==(const MatQ& a, const MatQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Applies the matrix to a column vector.
  VecQ apply(const VecQ& v) const;

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Commutator XY - YX; shapes must agree and be square.
MatQ bracket(const MatQ& x, const MatQ& y);

/// -tr(XY); the bilinear form used throughout for so(n)-type blocks.
Rational minus_trace_form(const MatQ& x, const MatQ& y);

/// Column-stacks a list of equal-shape matrices into one (n*n) x k matrix.
MatQ column_stack(const std::vector<MatQ>& mats);

struct KernelResult {
  int rank = 0;
  std::vector<VecQ> basis;  ///< exact kernel basis, each of length cols
};

/// Exact kernel via fraction-free (Bareiss) forward elimination on the
/// denominator-cleared matrix, then exact back-substitution.  Pivot rule:
/// first nonzero column; among rows, smallest height wins.
KernelResult kernel(const MatQ& m);

/// Exact rank, same elimination backend.
int rank_exact(const MatQ& m);

/// Rank over doubles with partial pivoting; independent crosscheck path.
int rank_float(const MatQ& m, double tol = 1e-9);

/// Integer matrix view used by the sampling hot paths.  Entries must fit in
/// int64; overflow in intermediate arithmetic is avoided by the mod-p screen
/// plus exact confirmation.
struct MatZ {
  int rows = 0, cols = 0;
  std::vector<long long> a;  // row-major
  long long& at(int i, int j) { return a[size_t(i) * cols + j]; }
  long long at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

/// Rank of an integer matrix modulo the prime 2^31 - 1.  Always >= nothing:
/// satisfies rank_mod_p <= true rank, so kernel dimension is overestimated,
/// never underestimated.
int rank_mod_p(const MatZ& m);

/// Exact rank of an integer matrix (GMP Bareiss).
int rank_exact(const MatZ& m);

MatQ to_matq(const MatZ& m);

}  // namespace fatlab
