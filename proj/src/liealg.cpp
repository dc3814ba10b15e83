#include "fatlab/liealg.hpp"

#include "fatlab/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatlab::lie {

namespace {

/// Exact inverse via Gauss-Jordan; throws on singular input.
MatQ inverse(MatQ a) {
  const int n = a.rows();
  MatQ inv = MatQ::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(piv, j));
        std::swap(inv.at(col, j), inv.at(piv, j));
      }
    Rational d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

VecQ vec_of_mat(const MatQ& x) {
  VecQ v;
  v.reserve(size_t(x.rows()) * x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) v.push_back(x.at(i, j));
  return v;
}

VecQ scale_vec(const Rational& s, VecQ v) {
  for (auto& x : v) x *= s;
  return v;
}

VecQ add_vec(VecQ a, const VecQ& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool vec_is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

AlgebraPresentation::AlgebraPresentation(std::string name, int ambient_dim,
                                         std::vector<MatQ> basis,
                                         std::vector<std::vector<int>> ideal_blocks,
                                         std::vector<Rational> metric_scales)
    : name_(std::move(name)),
      ambient_(ambient_dim),
      basis_(std::move(basis)),
      blocks_(std::move(ideal_blocks)),
      scales_(std::move(metric_scales)) {
  validate_and_freeze();
}

void AlgebraPresentation::validate_and_freeze() {
  const int d = dim();
  if (blocks_.size() != scales_.size())
    throw std::invalid_argument(name_ + ": one metric scale per ideal block required");
  for (const auto& s : scales_)
    if (s.sign() <= 0) throw std::invalid_argument(name_ + ": metric scales must be positive");
  std::vector<int> owner(d, -1);
  for (int b = 0; b < int(blocks_.size()); ++b)
    for (int i : blocks_[b]) {
      if (i < 0 || i >= d || owner[i] != -1)
        throw std::invalid_argument(name_ + ": ideal blocks must partition the basis");
      owner[i] = b;
    }
  for (int i = 0; i < d; ++i)
    if (owner[i] == -1) throw std::invalid_argument(name_ + ": ideal blocks must cover the basis");

  for (const auto& b : basis_)
    if (b.rows() != ambient_ || b.cols() != ambient_ || !b.is_skew())
      throw std::invalid_argument(name_ + ": basis matrices must be skew of the ambient size");

  // independence + exact coordinate solver: coords(X) = (B^T B)^{-1} B^T vec(X)
  MatQ bcols = column_stack(basis_);  // (n^2) x d
  if (rank_exact(bcols) != d) throw std::invalid_argument(name_ + ": basis is dependent");
  MatQ bt = bcols.transpose();
  solver_ = inverse(bt * bcols) * bt;  // d x n^2

  // scaled inner product <B_i, B_j>; blocks are orthogonal because distinct
  // ideals of a compact algebra are -tr orthogonal, verified here
  gram_ = MatQ(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rational v = minus_trace_form(basis_[i], basis_[j]);
      if (owner[i] != owner[j]) {
        if (!v.is_zero())
          throw std::invalid_argument(name_ + ": ideal blocks are not -tr orthogonal");
        continue;
      }
      v *= scales_[owner[i]];
      gram_.at(i, j) = v;
      gram_.at(j, i) = v;
    }

  // structure constants; closure is enforced by coords()
  c_.resize(size_t(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      if (i == j) {
        c_[size_t(i) * d + j] = VecQ(d);
        continue;
      }
      VecQ v;
      try {
        v = coords(bracket(basis_[i], basis_[j]));
      } catch (const std::exception&) {
        throw std::invalid_argument(name_ + ": basis is not bracket-closed");
      }
      c_[size_t(i) * d + j] = v;
      VecQ neg(d);
      for (int t = 0; t < d; ++t) neg[t] = -v[t];
      c_[size_t(j) * d + i] = std::move(neg);
    }
  }

  // ideals really are ideals: [B_i, B_j] has support inside B_i's block
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int t = 0; t < d; ++t)
        if (!structure(i, j)[t].is_zero() && owner[t] != owner[i] && owner[t] != owner[j])
          throw std::invalid_argument(name_ + ": declared blocks are not ideals");

  // Ad-invariance of the scaled form: <[x,y],z> + <y,[x,z]> = 0, sampled
  Rng rng(2024);
  const int trials = std::min(300, d * d * d);
  for (int t = 0; t < trials; ++t) {
    int i = int(rng.uniform(0, d - 1)), j = int(rng.uniform(0, d - 1)),
        k = int(rng.uniform(0, d - 1));
    Rational lhs = inner(structure(i, j), coords_identity(k, d)) +
                   inner(coords_identity(j, d), structure(i, k));
    if (!lhs.is_zero()) throw std::invalid_argument(name_ + ": inner product not Ad-invariant");
  }
}

MatQ AlgebraPresentation::realize(const VecQ& v) const {
  if (int(v.size()) != dim()) throw std::invalid_argument(name_ + ": bad coordinate size");
  MatQ x(ambient_, ambient_);
  for (int i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    x += v[i] * basis_[i];
  }
  return x;
}

VecQ AlgebraPresentation::coords(const MatQ& x) const {
  VecQ v = solver_.apply(vec_of_mat(x));
  // membership check: realize and compare
  if (!(realize(v) == x)) throw std::invalid_argument(name_ + ": matrix not in span");
  return v;
}

bool AlgebraPresentation::in_span(const MatQ& x) const {
  VecQ v = solver_.apply(vec_of_mat(x));
  return realize(v) == x;
}

Rational AlgebraPresentation::inner(const VecQ& x, const VecQ& y) const {
  Rational acc;
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero() || gram_.at(i, j).is_zero()) continue;
      acc += x[i] * gram_.at(i, j) * y[j];
    }
  }
  return acc;
}

VecQ AlgebraPresentation::bracket_coords(const VecQ& x, const VecQ& y) const {
  const int d = dim();
  VecQ out(d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const VecQ& c = structure(i, j);
      Rational f = x[i] * y[j];
      for (int t = 0; t < d; ++t)
        if (!c[t].is_zero()) out[t] += f * c[t];
    }
  }
  return out;
}

bool AlgebraPresentation::jacobi_clean() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        VecQ r(d);
        auto acc = [&](int a, int b, int c2) {
          const VecQ& ab = structure(a, b);
          for (int l = 0; l < d; ++l) {
            if (ab[l].is_zero()) continue;
            const VecQ& lc = structure(l, c2);
            for (int t = 0; t < d; ++t)
              if (!lc[t].is_zero()) r[t] += ab[l] * lc[t];
          }
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        if (!vec_is_zero(r)) return false;
      }
  return true;
}

VecQ coords_identity(int index, int dim) {
  VecQ v(dim);
  v[index] = Rational(1);
  return v;
}

namespace {

/// Basis of {x in span(region) : <x, c> = 0 for all c in constraints}, as
/// g-coordinates.  Exact.
std::vector<VecQ> perp_within(const AlgebraPresentation& g, const std::vector<VecQ>& region,
                              const std::vector<VecQ>& constraints) {
  MatQ m(int(constraints.size()), int(region.size()));
  for (int a = 0; a < int(constraints.size()); ++a)
    for (int b = 0; b < int(region.size()); ++b) m.at(a, b) = g.inner(constraints[a], region[b]);
  auto ker = kernel(m);
  std::vector<VecQ> out;
  for (const auto& combo : ker.basis) {
    VecQ v(g.dim());
    for (int b = 0; b < int(region.size()); ++b)
      if (!combo[b].is_zero()) v = add_vec(std::move(v), scale_vec(combo[b], region[b]));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<VecQ> full_basis(int d) {
  std::vector<VecQ> out;
  for (int i = 0; i < d; ++i) out.push_back(coords_identity(i, d));
  return out;
}

bool subalgebra_closed(const AlgebraPresentation& g, const std::vector<VecQ>& basis) {
  // [b_i, b_j] must lie in span(basis): check via rank
  if (basis.empty()) return true;
  MatQ span(g.dim(), int(basis.size()));
  for (int j = 0; j < int(basis.size()); ++j)
    for (int i = 0; i < g.dim(); ++i) span.at(i, j) = basis[j][i];
  const int base_rank = rank_exact(span);
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      VecQ br = g.bracket_coords(basis[a], basis[b]);
      MatQ ext(g.dim(), int(basis.size()) + 1);
      for (int j = 0; j < int(basis.size()); ++j)
        for (int i = 0; i < g.dim(); ++i) ext.at(i, j) = basis[j][i];
      for (int i = 0; i < g.dim(); ++i) ext.at(i, int(basis.size())) = br[i];
      if (rank_exact(ext) != base_rank) return false;
    }
  return true;
}

bool contained_in_span(const AlgebraPresentation& g, const std::vector<VecQ>& sub,
                       const std::vector<VecQ>& super) {
  MatQ span(g.dim(), int(super.size()));
  for (int j = 0; j < int(super.size()); ++j)
    for (int i = 0; i < g.dim(); ++i) span.at(i, j) = super[j][i];
  const int base_rank = rank_exact(span);
  for (const auto& v : sub) {
    MatQ ext(g.dim(), int(super.size()) + 1);
    for (int j = 0; j < int(super.size()); ++j)
      for (int i = 0; i < g.dim(); ++i) ext.at(i, j) = super[j][i];
    for (int i = 0; i < g.dim(); ++i) ext.at(i, int(super.size())) = v[i];
    if (rank_exact(ext) != base_rank) return false;
  }
  return true;
}

int span_rank(const AlgebraPresentation& g, const std::vector<VecQ>& vs) {
  if (vs.empty()) return 0;
  MatQ span(g.dim(), int(vs.size()));
  for (int j = 0; j < int(vs.size()); ++j)
    for (int i = 0; i < g.dim(); ++i) span.at(i, j) = vs[j][i];
  return rank_exact(span);
}

}  // namespace

TriplePresentation::TriplePresentation(std::string name, AlgebraPresentation g,
                                       std::vector<VecQ> k_basis, std::vector<VecQ> h_basis)
    : name_(std::move(name)), g_(std::move(g)), k_(std::move(k_basis)), h_(std::move(h_basis)) {
  if (int(k_.size()) >= g_.dim())
    throw std::invalid_argument(name_ + ": degenerate triple (k = g)");
  if (h_.size() >= k_.size())
    throw std::invalid_argument(name_ + ": degenerate triple (h = k)");
  if (span_rank(g_, k_) != int(k_.size()) || (int(h_.size()) != span_rank(g_, h_)))
    throw std::invalid_argument(name_ + ": dependent subalgebra bases");
  if (!subalgebra_closed(g_, k_) || !subalgebra_closed(g_, h_))
    throw std::invalid_argument(name_ + ": h and k must be subalgebras");
  if (!contained_in_span(g_, h_, k_)) throw std::invalid_argument(name_ + ": h must lie in k");

  m_ = perp_within(g_, k_, h_);
  p_ = perp_within(g_, full_basis(g_.dim()), k_);
  if (int(m_.size() + h_.size()) != int(k_.size()))
    throw std::invalid_argument(name_ + ": m dimension mismatch");

  // reductivity: [k, p] stays inside p (orthogonal to k)
  for (const auto& kb : k_)
    for (const auto& pb : p_) {
      VecQ br = g_.bracket_coords(kb, pb);
      for (const auto& kc : k_)
        if (!g_.inner(br, kc).is_zero())
          throw std::invalid_argument(name_ + ": [k, p] leaves p; not reductive");
    }
}

std::vector<VecQ> TriplePresentation::h_perp_basis() const {
  std::vector<VecQ> out = m_;
  out.insert(out.end(), p_.begin(), p_.end());
  return out;
}

bool TriplePresentation::mp_brackets_vanish() const {
  for (const auto& mb : m_)
    for (const auto& pb : p_)
      if (!vec_is_zero(g_.bracket_coords(mb, pb))) return false;
  return true;
}

VecQ TriplePresentation::project(const VecQ& x, const std::vector<VecQ>& sub) const {
  if (sub.empty()) return VecQ(g_.dim());
  // Solve Gram(sub) * c = <sub_i, x> and return sum c_i sub_i.
  const int s = int(sub.size());
  MatQ gram(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) gram.at(i, j) = g_.inner(sub[i], sub[j]);
  VecQ rhs(s);
  for (int i = 0; i < s; ++i) rhs[i] = g_.inner(sub[i], x);
  VecQ c = inverse(gram).apply(rhs);
  VecQ out(g_.dim());
  for (int i = 0; i < s; ++i)
    if (!c[i].is_zero()) out = add_vec(std::move(out), scale_vec(c[i], sub[i]));
  return out;
}

PairPresentation::PairPresentation(std::string n, AlgebraPresentation gg, std::vector<VecQ> h)
    : name(std::move(n)), g(std::move(gg)), h_basis(std::move(h)) {
  if (int(h_basis.size()) >= g.dim())
    throw std::invalid_argument(name + ": improper pair");
  if (!subalgebra_closed(g, h_basis))
    throw std::invalid_argument(name + ": h must be a subalgebra");
  hperp_basis = perp_within(g, full_basis(g.dim()), h_basis);
}

WitnessHint WitnessHint::explicit_vec(std::vector<VecQ> vs, std::string why) {
  WitnessHint h;
  h.kind = Kind::ExplicitVector;
  h.vectors = std::move(vs);
  h.provenance = std::move(why);
  return h;
}

WitnessHint WitnessHint::slice(std::vector<VecQ> vs, std::vector<std::string> vars,
                               std::string why) {
  WitnessHint h;
  h.kind = Kind::Slice;
  h.slice_vectors = std::move(vs);
  h.slice_vars = std::move(vars);
  h.provenance = std::move(why);
  return h;
}

WitnessHint WitnessHint::transitivity(int value, std::vector<VecQ> witnesses, std::string why) {
  WitnessHint h;
  h.kind = Kind::TransitivityClaim;
  h.claimed = value;
  h.vectors = std::move(witnesses);
  h.provenance = std::move(why);
  return h;
}

int centralizer_dim(const AlgebraPresentation& g, const VecQ& x,
                    const std::vector<VecQ>& subspace_basis) {
  if (vec_is_zero(x)) throw std::invalid_argument("centralizer_dim: zero vector");
  const int s = int(subspace_basis.size());
  MatQ ad(g.dim(), s);
  for (int a = 0; a < s; ++a) {
    VecQ col = g.bracket_coords(x, subspace_basis[a]);
    for (int i = 0; i < g.dim(); ++i) ad.at(i, a) = col[i];
  }
  return s - rank_exact(ad);
}

CentralizerScanner::CentralizerScanner(const AlgebraPresentation& g,
                                       const std::vector<VecQ>& source_basis,
                                       const std::vector<VecQ>& target_basis)
    : ns_(int(source_basis.size())), nt_(int(target_basis.size())), d_(g.dim()) {
  // pairwise brackets [source_s, target_t] in g coordinates, cleared to a
  // common integer denominator (scaling columns of the ad matrix is harmless)
  std::vector<VecQ> pq(size_t(ns_) * nt_);
  mpz_class lcm(1);
  for (int s = 0; s < ns_; ++s)
    for (int t = 0; t < nt_; ++t) {
      VecQ br = g.bracket_coords(source_basis[s], target_basis[t]);
      for (const auto& q : br) {
        mpz_class den = q.den(), gcd;
        mpz_gcd(gcd.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / gcd * den;
      }
      pq[size_t(s) * nt_ + t] = std::move(br);
    }
  pz_.resize(size_t(ns_) * nt_ * d_);
  // int64 accumulation headroom: |sum| <= ns * 9 * max|entry| must stay safe
  const mpz_class limit = mpz_class(1) << 48;
  for (int s = 0; s < ns_; ++s)
    for (int t = 0; t < nt_; ++t)
      for (int i = 0; i < d_; ++i) {
        const Rational& q = pq[size_t(s) * nt_ + t][i];
        mpz_class z = q.num() * (lcm / q.den());
        if (::abs(z) > limit)
          throw std::overflow_error("CentralizerScanner: tensor entry too large");
        pz_[(size_t(s) * nt_ + t) * d_ + i] = z.get_si();
      }
}

MatZ CentralizerScanner::ad_matrix(const std::vector<long long>& coords) const {
  MatZ a;
  a.rows = d_;
  a.cols = nt_;
  a.a.assign(size_t(d_) * nt_, 0);
  for (int s = 0; s < ns_; ++s) {
    const long long c = coords[s];
    if (c == 0) continue;
    const long long* base = &pz_[size_t(s) * nt_ * d_];
    for (int t = 0; t < nt_; ++t)
      for (int i = 0; i < d_; ++i) a.a[size_t(i) * nt_ + t] += c * base[size_t(t) * d_ + i];
  }
  return a;
}

int CentralizerScanner::dim_exact(const std::vector<long long>& coords) const {
  return nt_ - rank_exact(ad_matrix(coords));
}

int CentralizerScanner::dim_screen(const std::vector<long long>& coords) const {
  return nt_ - rank_mod_p(ad_matrix(coords));
}

namespace {

std::vector<long long> draw_coords(std::uint64_t seed, std::uint64_t index, int n) {
  Rng rng = Rng::for_sample(seed, index);
  std::vector<long long> coords(n);
  while (true) {
    bool nonzero = false;
    for (auto& c : coords) {
      c = rng.uniform(-9, 9);
      nonzero |= (c != 0);
    }
    if (nonzero) return coords;
  }
}

}  // namespace

int CentralizerScanner::sampled_max(long long samples, std::uint64_t seed, Exec exec) const {
  // Screen every sample mod p (an upper bound per sample), then exactly
  // confirm only the candidates that could raise the max.  Both passes are
  // order-free, so serial and parallel agree.
  std::vector<int> screens(static_cast<size_t>(samples), 0);
  scan_apply(
      std::uint64_t(samples),
      [&](std::uint64_t i) { screens[i] = dim_screen(draw_coords(seed, i, ns_)); }, exec);

  std::vector<std::uint64_t> order(static_cast<size_t>(samples), 0);
  for (std::uint64_t i = 0; i < std::uint64_t(samples); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    return screens[a] != screens[b] ? screens[a] > screens[b] : a < b;
  });
  int best = 0;
  for (std::uint64_t idx : order) {
    if (screens[idx] <= best) break;  // no remaining sample can beat the max
    best = std::max(best, dim_exact(draw_coords(seed, idx, ns_)));
  }
  return best;
}

namespace {

struct SliceOutcome {
  bool certified = false;
  int max_dim = 0;
};

/// Max kernel dimension of y -> [x(v), y] on the target span, over the slice
/// x(v) = sum v_i s_i with v real nonzero.  Case split: v0 != 0 (scale v0 = 1)
/// and v0 = 0, v1 = 1 for two variables; single branch v0 = 1 for one.
SliceOutcome slice_max_kernel(const AlgebraPresentation& g, const WitnessHint& hint,
                              const std::vector<VecQ>& target) {
  const int nv = int(hint.slice_vars.size());
  if (nv < 1 || nv > 2 || hint.slice_vectors.size() != size_t(nv))
    throw std::invalid_argument("slice hint: 1 or 2 case variables supported");
  const int nt = int(target.size());

  std::vector<std::vector<VecQ>> cols(nv, std::vector<VecQ>(nt));
  for (int v = 0; v < nv; ++v)
    for (int t = 0; t < nt; ++t) cols[v][t] = g.bracket_coords(hint.slice_vectors[v], target[t]);

  // One branch per sign-free normalization: {v0 = 1} and, with two variables,
  // {v0 = 0, v1 = 1}.  Kernel dimension is scale-invariant, so these cover
  // every nonzero real slice point.  Returns the exact branch maximum of the
  // kernel dimension, or nothing when it cannot be pinned.
  auto analyze = [&](const std::vector<std::optional<Rational>>& fixed) -> std::optional<int> {
    std::vector<std::string> vars;
    std::vector<int> free_index(nv, -1);
    for (int v = 0; v < nv; ++v)
      if (!fixed[v]) {
        free_index[v] = int(vars.size());
        vars.push_back(hint.slice_vars[v]);
      }
    const bool constant_branch = vars.empty();
    if (constant_branch) vars.push_back("_");
    PolyMat pm(g.dim(), nt, vars);
    for (int v = 0; v < nv; ++v)
      for (int t = 0; t < nt; ++t)
        for (int i = 0; i < g.dim(); ++i) {
          const Rational& coeff = cols[v][t][i];
          if (coeff.is_zero()) continue;
          Poly term = fixed[v] ? Poly::constant(coeff * *fixed[v])
                               : Poly::constant(coeff) *
                                     Poly::variable(free_index[v], int(vars.size()));
          pm.at(i, t) += term;
        }
    auto res = generic_rank(pm);
    int best = nt - res.rank;
    if (res.rank_everywhere()) return best;
    if (constant_branch || res.pivots.empty()) return std::nullopt;

    // The rank can only drop where the final pivot (an rxr minor) vanishes;
    // chase its real roots and evaluate the rank exactly there.
    const Poly& fin = res.pivots.back();
    auto sup = fin.support();
    if (sup.size() != 1) return std::nullopt;
    auto rr = rational_roots(univariate_coeffs(fin, sup[0]));
    if (!rr.complete) return std::nullopt;
    for (const auto& r : rr.roots) {
      MatQ at_root(g.dim(), nt);
      std::map<int, Rational> sub{{sup[0], r}};
      for (int i = 0; i < g.dim(); ++i)
        for (int t = 0; t < nt; ++t) at_root.at(i, t) = pm.at(i, t).substitute(sub).constant_value();
      best = std::max(best, nt - rank_exact(at_root));
    }
    return best;
  };

  SliceOutcome out;
  out.certified = true;
  std::vector<std::vector<std::optional<Rational>>> branches;
  if (nv == 1) {
    branches.push_back({Rational(1)});
  } else {
    branches.push_back({Rational(1), std::nullopt});  // v0 != 0, scaled to 1
    branches.push_back({Rational(0), Rational(1)});   // v0 = 0, v1 != 0
  }
  for (const auto& b : branches) {
    auto r = analyze(b);
    if (!r) {
      out.certified = false;
      continue;
    }
    out.max_dim = std::max(out.max_dim, *r);
  }
  return out;
}

struct HintScan {
  int witness_max = 0;             // exact max over explicit/claim witnesses
  std::optional<int> upper;        // hint-conditional exact value
  bool upper_certified = false;
};

HintScan scan_hints(const AlgebraPresentation& g, const Hints& hints,
                    const std::vector<VecQ>& source, const std::vector<VecQ>& target) {
  HintScan out;
  auto check_member = [&](const VecQ& v) {
    if (!contained_in_span(g, {v}, source))
      throw std::invalid_argument("witness hint vector lies outside its declared subspace");
  };
  for (const auto& h : hints) {
    switch (h.kind) {
      case WitnessHint::Kind::ExplicitVector:
        for (const auto& v : h.vectors) {
          check_member(v);
          out.witness_max = std::max(out.witness_max, centralizer_dim(g, v, target));
        }
        break;
      case WitnessHint::Kind::TransitivityClaim: {
        for (const auto& v : h.vectors) {
          check_member(v);
          out.witness_max = std::max(out.witness_max, centralizer_dim(g, v, target));
        }
        if (h.claimed >= 0) {
          out.upper = out.upper ? std::min(*out.upper, h.claimed) : h.claimed;
          out.upper_certified = true;
        }
        break;
      }
      case WitnessHint::Kind::Slice: {
        auto sl = slice_max_kernel(g, h, target);
        if (sl.certified) {
          out.upper = out.upper ? std::min(*out.upper, sl.max_dim) : sl.max_dim;
          out.upper_certified = true;
          // the branch maxima are attained at explicit slice points
          out.witness_max = std::max(out.witness_max, sl.max_dim);
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace

BReport compute_b(const AlgebraPresentation& g, const std::vector<VecQ>& s_basis,
                  const Hints& hints, long long samples, std::uint64_t seed,
                  std::optional<int> claimed, Exec exec) {
  BReport rep;
  rep.claimed = claimed;
  HintScan hs = scan_hints(g, hints, s_basis, s_basis);

  CentralizerScanner scanner(g, s_basis, s_basis);
  rep.sampled_max = samples > 0 ? scanner.sampled_max(samples, seed, exec) : 0;
  rep.samples_run = samples;
  rep.certified_lower = std::max(hs.witness_max, rep.sampled_max);

  if (hs.upper_certified && hs.upper && rep.certified_lower == *hs.upper) {
    rep.status = CertStatus::Certified;
    if (!rep.claimed) rep.claimed = *hs.upper;
  }
  return rep;
}

FReport compute_f(const TriplePresentation& t, const Hints& hints_x_in_p,
                  const Hints& hints_y_in_m, long long samples, std::uint64_t seed,
                  std::optional<int> claimed, Exec exec) {
  FReport rep;
  rep.claimed = claimed;
  const auto& g = t.g();

  // split ideals pin f outright: every pair commutes across m and p
  if (t.mp_brackets_vanish()) {
    rep.certified_lower = std::max(t.dim_m(), t.dim_p());
    rep.sampled_max = rep.certified_lower;
    rep.status = CertStatus::Certified;
    if (!rep.claimed) rep.claimed = rep.certified_lower;
    return rep;
  }

  HintScan hx = scan_hints(g, hints_x_in_p, t.p_basis(), t.m_basis());  // x in p, Z_m(x)
  HintScan hy = scan_hints(g, hints_y_in_m, t.m_basis(), t.p_basis());  // y in m, Z_p(y)

  CentralizerScanner sx(g, t.p_basis(), t.m_basis());
  CentralizerScanner sy(g, t.m_basis(), t.p_basis());
  int sample_x = samples > 0 ? sx.sampled_max(samples, seed, exec) : 0;
  int sample_y = samples > 0 ? sy.sampled_max(samples, seed ^ 0x5eedu, exec) : 0;
  rep.sampled_max = std::max(sample_x, sample_y);
  rep.samples_run = 2 * samples;

  rep.certified_lower =
      std::max({hx.witness_max, hy.witness_max, sample_x, sample_y});

  // Certification needs trusted upper bounds in both directions; in
  // particular f = 0 requires a fatness hint, never just empty samples.
  if (hx.upper_certified && hy.upper_certified) {
    int upper = std::max(*hx.upper, *hy.upper);
    if (rep.certified_lower == upper) {
      rep.status = CertStatus::Certified;
      if (!rep.claimed) rep.claimed = upper;
    }
  }
  return rep;
}

DimensionObstruction dimension_obstruction(int dim_m, int dim_p) {
  DimensionObstruction d;
  d.dim_m = dim_m;
  d.dim_p = dim_p;
  d.f0_allowed = (dim_p % 2 == 0) && (dim_m <= dim_p - 1);
  d.f1_allowed = (dim_p % 2 == 1) && (dim_m <= dim_p);
  return d;
}

DimensionObstruction dimension_obstruction(const TriplePresentation& t) {
  return dimension_obstruction(t.dim_m(), t.dim_p());
}

}  // namespace fatlab::lie
