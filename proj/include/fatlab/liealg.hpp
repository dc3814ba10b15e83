#pragma once

#include "fatlab/matq.hpp"
#include "fatlab/parallel.hpp"
#include "fatlab/poly.hpp"
#include "fatlab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fatlab::lie {

/// The i-th coordinate vector of length dim.
VecQ coords_identity(int index, int dim);

/// A compact Lie algebra given by an explicit matrix basis inside so(n)-type
/// ambient matrices, with an Ad-invariant inner product
///   <X,Y> = sum over ideal blocks of  scale_b * (-tr(X_b Y_b)).
class AlgebraPresentation {
public:
  AlgebraPresentation(std::string name, int ambient_dim, std::vector<MatQ> basis,
                      std::vector<std::vector<int>> ideal_blocks,
                      std::vector<Rational> metric_scales);

  const std::string& name() const { return name_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<MatQ>& basis() const { return basis_; }
  const std::vector<std::vector<int>>& ideal_blocks() const { return blocks_; }
  const std::vector<Rational>& metric_scales() const { return scales_; }

  /// Realizes a coordinate vector as an ambient matrix.
  MatQ realize(const VecQ& coords) const;
  /// Coordinates of an ambient matrix; throws when it is not in the span.
  VecQ coords(const MatQ& x) const;
  bool in_span(const MatQ& x) const;

  /// Scaled Ad-invariant inner product, in coordinates.
  Rational inner(const VecQ& x, const VecQ& y) const;
  const MatQ& gram() const { return gram_; }

  /// Structure constants: coords of [basis_i, basis_j].
  const VecQ& structure(int i, int j) const { return c_[size_t(i) * basis_.size() + j]; }
  VecQ bracket_coords(const VecQ& x, const VecQ& y) const;

  /// Max |[[x,y],z] + [[y,z],x] + [[z,x],y]| residual over all basis triples;
  /// exact, zero for a genuine Lie algebra.
  bool jacobi_clean() const;

private:
  void validate_and_freeze();

  std::string name_;
  int ambient_;
  std::vector<MatQ> basis_;
  std::vector<std::vector<int>> blocks_;
  std::vector<Rational> scales_;
  MatQ gram_;              // dim x dim
  MatQ solver_;            // dim x ambient^2: coords = solver * vec(X)
  std::vector<VecQ> c_;    // structure constants, row-major (i,j)
};

/// Nested bases h in k in g with the derived splitting m = h-perp within k and
/// p = k-perp.  All vectors are coordinates over g's basis.
class TriplePresentation {
public:
  TriplePresentation(std::string name, AlgebraPresentation g, std::vector<VecQ> k_basis,
                     std::vector<VecQ> h_basis);

  const std::string& name() const { return name_; }
  const AlgebraPresentation& g() const { return g_; }
  const std::vector<VecQ>& k_basis() const { return k_; }
  const std::vector<VecQ>& h_basis() const { return h_; }
  const std::vector<VecQ>& m_basis() const { return m_; }
  const std::vector<VecQ>& p_basis() const { return p_; }
  /// m followed by p: the tangent space of the total pair.
  std::vector<VecQ> h_perp_basis() const;

  int dim_m() const { return int(m_.size()); }
  int dim_p() const { return int(p_.size()); }
  int dim_gh() const { return int(m_.size() + p_.size()); }

  /// True when every [m_i, p_j] vanishes (m and p live in complementary ideals).
  bool mp_brackets_vanish() const;

  /// Exact orthogonal projections, in g coordinates.
  VecQ project(const VecQ& x, const std::vector<VecQ>& subspace_basis) const;
  VecQ project_m(const VecQ& x) const { return project(x, m_); }
  VecQ project_p(const VecQ& x) const { return project(x, p_); }
  VecQ project_k(const VecQ& x) const { return project(x, k_); }
  VecQ project_h(const VecQ& x) const { return project(x, h_); }

private:
  std::string name_;
  AlgebraPresentation g_;
  std::vector<VecQ> k_, h_, m_, p_;
};

/// A pair h in g, as used for the b-invariant.
struct PairPresentation {
  std::string name;
  AlgebraPresentation g;
  std::vector<VecQ> h_basis;
  std::vector<VecQ> hperp_basis;  // derived

  PairPresentation(std::string n, AlgebraPresentation gg, std::vector<VecQ> h);
};

/// Trusted data accompanying a presentation: explicit witnesses, slice
/// parametrizations, and orbit-transitivity claims.  Hints are data, never
/// inferred; each carries its provenance.
struct WitnessHint {
  enum class Kind { ExplicitVector, Slice, TransitivityClaim };
  Kind kind = Kind::ExplicitVector;
  /// ExplicitVector / TransitivityClaim: witness vectors in g coordinates.
  std::vector<VecQ> vectors;
  /// Slice: parametrized family sum_i var_i * slice_vectors[i] meeting every
  /// orbit; at most 2 variables are case-split.
  std::vector<VecQ> slice_vectors;
  std::vector<std::string> slice_vars;
  /// TransitivityClaim: the exact value this hint pins, conditional on the
  /// claimed orbit fact.
  int claimed = -1;
  std::string provenance;

  static WitnessHint explicit_vec(std::vector<VecQ> vs, std::string why);
  static WitnessHint slice(std::vector<VecQ> vs, std::vector<std::string> vars, std::string why);
  static WitnessHint transitivity(int value, std::vector<VecQ> witnesses, std::string why);
};

using Hints = std::vector<WitnessHint>;

enum class CertStatus { Certified, LowerBound };

struct BReport {
  int certified_lower = 0;  ///< exact max over hint witnesses and samples
  int sampled_max = 0;
  std::optional<int> claimed;
  CertStatus status = CertStatus::LowerBound;
  long long samples_run = 0;
};

using FReport = BReport;

/// dim ker of y -> [x, y] restricted to the span of subspace_basis; exact.
int centralizer_dim(const AlgebraPresentation& g, const VecQ& x,
                    const std::vector<VecQ>& subspace_basis);

/// Precomputed integer pair-bracket tensor for fast repeated centralizer
/// dimension queries: x ranges over integer combinations of the source basis,
/// centralizers are taken in the target span.  Mod-p screen with exact
/// confirmation keeps the reported maxima exact.
class CentralizerScanner {
public:
  CentralizerScanner(const AlgebraPresentation& g, const std::vector<VecQ>& source_basis,
                     const std::vector<VecQ>& target_basis);

  int source_dim() const { return ns_; }
  int target_dim() const { return nt_; }

  /// Exact dim Z_target(x) for x = sum coords_i source_i.
  int dim_exact(const std::vector<long long>& coords) const;
  /// Upper screen: >= the exact value, from a single mod-p elimination.
  int dim_screen(const std::vector<long long>& coords) const;

  /// Max of dim_exact over `samples` random nonzero integer coordinate vectors
  /// with entries in [-9, 9]; deterministic in (seed); exact via screen+confirm.
  int sampled_max(long long samples, std::uint64_t seed, Exec exec) const;

private:
  MatZ ad_matrix(const std::vector<long long>& coords) const;
  int ns_, nt_, d_;
  std::vector<long long> pz_;  // [s][t][component] integer pair brackets
};

/// b(h in g) = max over nonzero x in S of dim Z_S(x), reported as a certified
/// lower bound (witnesses + samples) plus hint-conditional certification.
/// S is the perp space of the pair under consideration.
BReport compute_b(const AlgebraPresentation& g, const std::vector<VecQ>& s_basis,
                  const Hints& hints, long long samples, std::uint64_t seed,
                  std::optional<int> claimed = std::nullopt, Exec exec = default_exec());

/// Fatness coindex of a triple: the larger of max dim Z_m(x) over p and
/// max dim Z_p(y) over m.  Hints are per direction.
FReport compute_f(const TriplePresentation& t, const Hints& hints_x_in_p,
                  const Hints& hints_y_in_m, long long samples, std::uint64_t seed,
                  std::optional<int> claimed = std::nullopt, Exec exec = default_exec());

struct DimensionObstruction {
  int dim_m = 0, dim_p = 0;
  bool f0_allowed = false;  ///< dim p even and dim m <= dim p - 1
  bool f1_allowed = false;  ///< dim p odd and dim m <= dim p
};

DimensionObstruction dimension_obstruction(int dim_m, int dim_p);
DimensionObstruction dimension_obstruction(const TriplePresentation& t);

namespace builders {

/// Standard basis of so(n): E_ij - E_ji for i < j, lexicographic.
std::vector<MatQ> so_basis(int n);

/// The so(n+1) matrix with last column z over the zero block.
MatQ M_vector(const VecQ& z);

/// Element of the 14-dimensional g2 inside so(7); params ordered
/// (x1..x6, y1..y6, z1, z2).
MatQ g2_elem(const std::vector<Rational>& params);
std::vector<MatQ> g2_basis();

/// Complement of g2 in so(7): A(v), v in Q^7.
MatQ A_perp(const VecQ& v);

/// The 8-dimensional su3 inside g2: first row and column vanish; params
/// ordered (x1, x3, x5, y1, y3, y5, z1, z2).
MatQ su3_elem(const std::vector<Rational>& params);
std::vector<MatQ> su3_basis();

/// Complement of su3 in g2: C(z), z in Q^6.
MatQ C_perp(const VecQ& z);

MatQ direct_sum(const MatQ& a, const MatQ& b);

}  // namespace builders

}  // namespace fatlab::lie
