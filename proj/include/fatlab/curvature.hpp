#pragma once

#include "fatlab/liealg.hpp"
#include "fatlab/parallel.hpp"
#include "fatlab/presets.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fatlab::curv {

/// Submersion metric data on G/H: the fiber directions m are shrunk by
/// t/(t+1); no value means the normal metric (the t -> infinity limit).
struct DeformedMetric {
  const lie::TriplePresentation* triple = nullptr;
  std::optional<Rational> t;   ///< engaged: finite deformation parameter, > 0
  bool base_pair_P = false;    ///< the base pair satisfies Property (P)

  DeformedMetric(const lie::TripleRecord& rec, std::optional<Rational> t_in);
};

/// q_t(X, Y) = t/(t+1) <X_m, Y_m> + <X_p, Y_p> on m (+) p; exact.
/// Throws when an argument has a nonzero h-component.
Rational metric_qt(const VecQ& x, const VecQ& y, const DeformedMetric& dm);

/// Zero-curvature plane criterion for the deformed metric: true iff
/// [x,y] = [x_m, y_m] = [x_p, y_p] = 0 exactly.  Requires the base pair
/// flagged with Property (P) and linearly independent inputs in m (+) p.
bool flat_plane_test(const VecQ& x, const VecQ& y, const DeformedMetric& dm);

/// Sectional curvature of the normal homogeneous metric on the plane spanned
/// by independent x, y in the perp of h:
///   ((1/4)|[x,y]_{h-perp}|^2 + |[x,y]_h|^2) / (|x|^2 |y|^2 - <x,y>^2).
/// Reduces to the plain numerator on orthonormal input; basis-invariant, so
/// planes with irrational unit vectors stay exactly computable.
Rational normal_sec(const VecQ& x, const VecQ& y, const lie::TriplePresentation& t);

enum class PMode { Witness, Falsify };

struct PVerdict {
  bool holds_on_samples = false;
  std::optional<std::pair<VecQ, VecQ>> counterexample;  ///< g-coordinate pair
  long long pairs_checked = 0;
};

/// Witness mode samples pairs x, y in the perp of the subalgebra and checks
/// that [x,y]_k = 0 forces [x,y] = 0 (basis pairs are always included).
/// Falsify mode uses the record's intermediate subalgebra, when present, to
/// search for x in f-perp, y in f with [x,y]_k = 0 but [x,y] != 0; without an
/// intermediate it falls back to random search and may be inconclusive.
PVerdict property_P_test(const lie::PairRecord& rec, PMode mode, long long budget,
                         std::uint64_t seed, Exec exec = default_exec());

struct RicCertificate {
  int k = 0;
  int b_fiber = 0, b_base = 0, f = 0;
  std::string t_desc = "inf";
  long long samples = 0;
  bool falsified = false;
  /// Exactly verified frame {x; e_1..e_k} with every plane (x, e_i) flat,
  /// in m (+) p coordinates of the triple.
  std::vector<VecQ> witness_frame;
  std::string to_json(const std::string& triple_name) const;
};

/// k = b_fiber + b_base + f - 1, then a randomized search for an orthonormal
/// (k+1)-frame whose planes through the first vector are all flat.  Finding
/// one falsifies the certificate; for correct inputs none exists.  Two-stage:
/// float screen on the sampled direction, exact confirmation of any hit.
RicCertificate ric_k_certificate(const DeformedMetric& dm, int b_fiber, int b_base, int f,
                                 long long search_budget, std::uint64_t seed,
                                 Exec exec = default_exec());

/// Shared fast path for curvature sampling over m (+) p with the normal
/// metric: float structure tensors plus exact spot checks.
class FrameSampler {
public:
  explicit FrameSampler(const lie::TriplePresentation& t);

  int dim_m() const { return nm_; }
  int dim_p() const { return np_; }
  int dim() const { return nm_ + np_; }

  /// Gram-Schmidt-orthonormalized Gaussian triple {x, e1, e2}; coordinates
  /// over the m (+) p basis.
  std::vector<std::vector<double>> random_orthonormal_triple(std::uint64_t seed,
                                                             std::uint64_t index) const;

  /// Float normal-metric sectional curvature (inputs orthonormal).
  double sec_float(const std::vector<double>& x, const std::vector<double>& y) const;

  /// Float dimension of {y : [x,y] = [x_m,y_m] = [x_p,y_p] = 0} inside m (+) p.
  int flat_space_dim_float(const std::vector<double>& x, double tol = 1e-9) const;

  /// Exact dimension and kernel basis of the same space at a rational point.
  KernelResult flat_space_exact(const VecQ& x_coords) const;

  const lie::TriplePresentation& triple() const { return t_; }

private:
  const lie::TriplePresentation& t_;
  int nm_, np_, d_;
  std::vector<double> pair_tensor_;  // [s1][s2][g-component]
  std::vector<double> gram_;         // (nm+np)^2
  std::vector<double> gram_g_;       // d^2, ambient scaled form
  std::vector<double> proj_h_;       // d^2
  std::vector<VecQ> s_basis_;
};

}  // namespace fatlab::curv
