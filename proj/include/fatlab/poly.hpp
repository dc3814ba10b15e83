#pragma once

#include "fatlab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace fatlab {

/// Multivariate polynomial over Rational.  Variables are shared by name; the
/// exponent key is aligned to the owning context's variable list.
class Poly {
public:
  using Exponents = std::vector<unsigned>;

  Poly() = default;
  explicit Poly(Rational c) {
    if (!c.is_zero()) terms_[{}] = std::move(c);
  }

  /// The monomial x_index within a context of `nvars` variables.
  static Poly variable(int index, int nvars);
  static Poly constant(Rational c) { return Poly(std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  int degree_in(int var) const;
  /// Indices of variables that actually occur.
  std::vector<int> support() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Exact division; throws if the divisor does not divide exactly.
  Poly divide_exact(const Poly& divisor) const;

  /// Substitutes values for a subset of variables (index -> value); the result
  /// lives in the same variable context.
  Poly substitute(const std::map<int, Rational>& values) const;

  Rational eval(const std::vector<Rational>& point) const;

  std::string str(const std::vector<std::string>& var_names) const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

private:
  // lex-ordered by exponent vector; shorter keys padded conceptually with 0
  std::map<Exponents, Rational> terms_;

  static Exponents add_exp(const Exponents& a, const Exponents& b);
  void prune(const Exponents& k);
};

/// Univariate view: coefficient list (ascending degree) of a Poly supported on
/// one variable.  Throws when more variables occur.
std::vector<Rational> univariate_coeffs(const Poly& p, int var);

/// Number of real roots of a univariate polynomial with these coefficients
/// (ascending degree), by Sturm's theorem.
int count_real_roots(std::vector<Rational> coeffs);

struct RationalRoots {
  std::vector<Rational> roots;  ///< distinct rational roots
  /// True when the deflated polynomial has no further real roots, i.e. the
  /// list above is ALL real roots.
  bool complete = false;
};

/// Rational roots of a univariate polynomial, with a completeness certificate.
RationalRoots rational_roots(std::vector<Rational> coeffs);

/// Matrix with polynomial entries, used for parametric slice analysis.
class PolyMat {
public:
  PolyMat(int rows, int cols, std::vector<std::string> var_names)
      : rows_(rows), cols_(cols), vars_(std::move(var_names)), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return int(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }

  Poly& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Poly& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Poly var(const std::string& name) const;

private:
  int rows_, cols_;
  std::vector<std::string> vars_;
  std::vector<Poly> a_;
};

struct GenericRankResult {
  int rank = 0;                       ///< over the rational function field
  std::vector<Poly> pivots;           ///< Bareiss pivots, in elimination order
  std::vector<Poly> degenerate_loci;  ///< normalized pivots vanishing at some real point
  std::vector<Poly> undecided;        ///< pivots whose real vanishing was not decided
  bool certified = false;             ///< the final pivot minor never vanishes over R
  /// True when the generic rank provably holds at every real parameter value.
  bool rank_everywhere() const { return certified; }
};

/// Rank over Q(vars) via fraction-free elimination; pivots recorded.  The final
/// Bareiss pivot is (up to sign) an rxr minor of the input; when it has no real
/// zero the generic rank holds at every real point and the result is certified.
/// Otherwise the real-vanishing pivots are reported as candidate degenerate
/// loci (decided by Sturm for univariate pivots, undecided for multivariate).
GenericRankResult generic_rank(const PolyMat& p);

}  // namespace fatlab
