#include "fatlab/matq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fatlab {

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool MatQ::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool MatQ::is_skew() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational MatQ::trace() const {
  Rational t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

MatQ& MatQ::operator+=(const MatQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatQ: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

MatQ& MatQ::operator-=(const MatQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatQ: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("MatQ: shape mismatch in product");
  MatQ c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

MatQ operator*(const Rational& s, MatQ a) {
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) a.at(i, j) *= s;
  return a;
}

VecQ MatQ::apply(const VecQ& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("MatQ::apply: size mismatch");
  VecQ out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

MatQ bracket(const MatQ& x, const MatQ& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw std::invalid_argument("bracket: shape mismatch");
  return x * y - y * x;
}

Rational minus_trace_form(const MatQ& x, const MatQ& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("minus_trace_form: shape mismatch");
  Rational t;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) t += x.at(i, j) * y.at(j, i);
  return -t;
}

MatQ column_stack(const std::vector<MatQ>& mats) {
  if (mats.empty()) return MatQ(0, 0);
  const int n = mats[0].rows(), m = mats[0].cols();
  MatQ out(n * m, int(mats.size()));
  for (int k = 0; k < int(mats.size()); ++k) {
    if (mats[k].rows() != n || mats[k].cols() != m)
      throw std::invalid_argument("column_stack: shape mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) out.at(i * m + j, k) = mats[k].at(i, j);
  }
  return out;
}

namespace {

// Clears denominators row by row; preserves the null space.
std::vector<std::vector<mpz_class>> to_integer_rows(const MatQ& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      mpz_class d = m.at(i, j).den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      rows[i][j] = q.num() * (l / q.den());
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<mpz_class>> r;  // echelon rows (fraction-free)
  std::vector<int> pivot_col;             // per echelon row
  int rank = 0;
};

// Fraction-free row echelon (Bareiss).  Pivot: first column with a nonzero
// candidate; among candidate rows the one of smallest |entry| wins.
Echelon bareiss_echelon(std::vector<std::vector<mpz_class>> a, int cols) {
  Echelon e;
  int row = 0;
  const int nrows = int(a.size());
  mpz_class prev(1);
  for (int col = 0; col < cols && row < nrows; ++col) {
    int best = -1;
    for (int i = row; i < nrows; ++i) {
      if (a[i][col] == 0) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      mpz_class ab = ::abs(a[i][col]), bb = ::abs(a[best][col]);
      if (ab < bb) best = i;
    }
    if (best < 0) continue;
    std::swap(a[row], a[best]);
    const mpz_class pivot = a[row][col];
    for (int i = row + 1; i < nrows; ++i) {
      const mpz_class head = a[i][col];
      for (int j = col; j < cols; ++j) {
        mpz_class t = a[i][j] * pivot - head * a[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    e.r.push_back(a[row]);
    e.pivot_col.push_back(col);
    prev = pivot;
    ++row;
  }
  e.rank = row;
  return e;
}

}  // namespace

KernelResult kernel(const MatQ& m) {
  KernelResult res;
  const int cols = m.cols();
  Echelon e = bareiss_echelon(to_integer_rows(m), cols);
  res.rank = e.rank;

  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;

  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    VecQ v(cols);
    v[free_col] = Rational(1);
    // back-substitute through echelon rows above
    for (int r = e.rank - 1; r >= 0; --r) {
      const int pc = e.pivot_col[r];
      if (pc > free_col) continue;
      Rational acc;
      for (int j = pc + 1; j < cols; ++j)
        if (!v[j].is_zero() && e.r[r][j] != 0) acc += Rational(e.r[r][j]) * v[j];
      v[pc] = -acc / Rational(e.r[r][pc]);
    }
    res.basis.push_back(std::move(v));
  }
  return res;
}

int rank_exact(const MatQ& m) {
  return bareiss_echelon(to_integer_rows(m), m.cols()).rank;
}

int rank_float(const MatQ& m, double tol) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<double>> a(R, std::vector<double>(C));
  double scale = 0;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      a[i][j] = m.at(i, j).to_double();
      scale = std::max(scale, std::fabs(a[i][j]));
    }
  if (scale == 0) return 0;
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int best = -1;
    double bv = 0;
    for (int i = rank; i < R; ++i)
      if (std::fabs(a[i][col]) > bv) {
        bv = std::fabs(a[i][col]);
        best = i;
      }
    if (best < 0 || bv <= tol * scale) continue;
    std::swap(a[rank], a[best]);
    for (int i = rank + 1; i < R; ++i) {
      double f = a[i][col] / a[rank][col];
      for (int j = col; j < C; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

int rank_mod_p(const MatZ& m) {
  static constexpr long long P = 2147483647LL;  // 2^31 - 1
  const int R = m.rows, C = m.cols;
  std::vector<long long> a(m.a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    long long v = m.a[i] % P;
    a[i] = v < 0 ? v + P : v;
  }
  auto at = [&](int i, int j) -> long long& { return a[size_t(i) * C + j]; };
  auto powmod = [&](long long b, long long e) {
    long long r = 1;
    while (e) {
      if (e & 1) r = (__int128)r * b % P;
      b = (__int128)b * b % P;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int i = rank; i < R; ++i)
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < C; ++j) std::swap(at(rank, j), at(piv, j));
    const long long inv = powmod(at(rank, col), P - 2);
    for (int i = rank + 1; i < R; ++i) {
      if (at(i, col) == 0) continue;
      long long f = (__int128)at(i, col) * inv % P;
      for (int j = col; j < C; ++j) {
        long long t = at(i, j) - (__int128)f * at(rank, j) % P;
        at(i, j) = t < 0 ? t + P : t;
      }
    }
    ++rank;
  }
  return rank;
}

int rank_exact(const MatZ& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows, std::vector<mpz_class>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) rows[i][j] = mpz_class(static_cast<long>(m.at(i, j)));
  return bareiss_echelon(std::move(rows), m.cols).rank;
}

MatQ to_matq(const MatZ& m) {
  MatQ out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = Rational(m.at(i, j));
  return out;
}

}  // namespace fatlab
