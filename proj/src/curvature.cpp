#include "fatlab/curvature.hpp"

#include "fatlab/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fatlab::curv {

using lie::TriplePresentation;

namespace {

bool vec_zero(const VecQ& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

VecQ add_scaled(VecQ a, const Rational& s, const VecQ& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
  return a;
}

}  // namespace

DeformedMetric::DeformedMetric(const lie::TripleRecord& rec, std::optional<Rational> t_in)
    : triple(&rec.triple), t(std::move(t_in)), base_pair_P(rec.base_pair_P) {
  if (t && t->sign() <= 0) throw std::invalid_argument("DeformedMetric: t must be positive");
}

Rational metric_qt(const VecQ& x, const VecQ& y, const DeformedMetric& dm) {
  const auto& tri = *dm.triple;
  if (!vec_zero(tri.project_h(x)) || !vec_zero(tri.project_h(y)))
    throw std::invalid_argument("metric_qt: arguments must lie in m (+) p");
  const auto& g = tri.g();
  Rational mm = g.inner(tri.project_m(x), tri.project_m(y));
  Rational pp = g.inner(tri.project_p(x), tri.project_p(y));
  if (!dm.t) return mm + pp;  // normal metric limit
  return (*dm.t) / (*dm.t + Rational(1)) * mm + pp;
}

bool flat_plane_test(const VecQ& x, const VecQ& y, const DeformedMetric& dm) {
  const auto& tri = *dm.triple;
  if (!dm.base_pair_P)
    throw std::invalid_argument("flat_plane_test: base pair lacks Property (P)");
  if (!vec_zero(tri.project_h(x)) || !vec_zero(tri.project_h(y)))
    throw std::invalid_argument("flat_plane_test: arguments must lie in m (+) p");
  // independence: the Gram determinant of the pair is nonzero
  const auto& g = tri.g();
  Rational xx = g.inner(x, x), yy = g.inner(y, y), xy = g.inner(x, y);
  if ((xx * yy - xy * xy).is_zero())
    throw std::invalid_argument("flat_plane_test: arguments are dependent");
  if (!vec_zero(g.bracket_coords(x, y))) return false;
  if (!vec_zero(g.bracket_coords(tri.project_m(x), tri.project_m(y)))) return false;
  return vec_zero(g.bracket_coords(tri.project_p(x), tri.project_p(y)));
}

Rational normal_sec(const VecQ& x, const VecQ& y, const TriplePresentation& tri) {
  const auto& g = tri.g();
  if (!vec_zero(tri.project_h(x)) || !vec_zero(tri.project_h(y)))
    throw std::invalid_argument("normal_sec: arguments must lie in the perp of h");
  Rational xx = g.inner(x, x), yy = g.inner(y, y), xy = g.inner(x, y);
  Rational det = xx * yy - xy * xy;
  if (det.is_zero()) throw std::invalid_argument("normal_sec: arguments are dependent");
  VecQ br = g.bracket_coords(x, y);
  VecQ brh = tri.project_h(br);
  Rational full = g.inner(br, br), hh = g.inner(brh, brh);
  // (1/4)|br_{h-perp}|^2 + |br_h|^2 = (1/4)|br|^2 + (3/4)|br_h|^2, divided by
  // the Gram determinant so any exact basis of the plane gives its curvature
  return (Rational(1, 4) * full + Rational(3, 4) * hh) / det;
}

PVerdict property_P_test(const lie::PairRecord& rec, PMode mode, long long budget,
                         std::uint64_t seed, Exec exec) {
  const auto& g = rec.pair.g;
  const auto& p = rec.pair.hperp_basis;
  const auto& h = rec.pair.h_basis;
  PVerdict out;

  auto proj_k_zero = [&](const VecQ& br) {
    for (const auto& hb : h)
      if (!g.inner(br, hb).is_zero()) return false;
    return true;
  };
  auto combine = [&](const std::vector<long long>& c) {
    VecQ v(g.dim());
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) v = add_scaled(std::move(v), Rational(c[i]), p[i]);
    return v;
  };

  if (mode == PMode::Witness) {
    // all basis pairs first
    std::vector<std::pair<VecQ, VecQ>> failures;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) {
        VecQ br = g.bracket_coords(p[i], p[j]);
        ++out.pairs_checked;
        if (proj_k_zero(br) && !vec_zero(br)) {
          out.counterexample = {p[i], p[j]};
          return out;
        }
      }
    // random integer pairs, deterministic per index; any violation with the
    // smallest index wins so serial and parallel agree
    long long hit = scan_find(
        std::uint64_t(budget),
        [&](std::uint64_t idx) {
          Rng rng = Rng::for_sample(seed, idx);
          std::vector<long long> cx(p.size()), cy(p.size());
          for (auto& c : cx) c = rng.uniform(-9, 9);
          for (auto& c : cy) c = rng.uniform(-9, 9);
          VecQ x = combine(cx), y = combine(cy);
          if (vec_zero(x) || vec_zero(y)) return false;
          VecQ br = g.bracket_coords(x, y);
          return proj_k_zero(br) && !vec_zero(br);
        },
        exec);
    out.pairs_checked += budget;
    if (hit >= 0) {
      Rng rng = Rng::for_sample(seed, std::uint64_t(hit));
      std::vector<long long> cx(p.size()), cy(p.size());
      for (auto& c : cx) c = rng.uniform(-9, 9);
      for (auto& c : cy) c = rng.uniform(-9, 9);
      out.counterexample = {combine(cx), combine(cy)};
      return out;
    }
    out.holds_on_samples = true;
    return out;
  }

  // falsify mode
  std::vector<VecQ> x_space, y_space;
  if (!rec.intermediate.empty()) {
    // x in f-perp, y in h-perp within f: then [x,y]_f = 0 by reductivity,
    // so in particular [x,y]_k = 0
    MatQ m(int(rec.intermediate.size()), g.dim());
    std::vector<VecQ> full;
    for (int i = 0; i < g.dim(); ++i) full.push_back(lie::coords_identity(i, g.dim()));
    for (int a = 0; a < int(rec.intermediate.size()); ++a)
      for (int b = 0; b < g.dim(); ++b) m.at(a, b) = g.inner(rec.intermediate[a], full[b]);
    for (const auto& combo : kernel(m).basis) x_space.push_back(combo);
    // y: elements of f orthogonal to h (exact Gram-Schmidt on h first)
    std::vector<VecQ> h_orth;
    for (const auto& hb : h) {
      VecQ v = hb;
      for (const auto& prev : h_orth) {
        Rational c = g.inner(v, prev) / g.inner(prev, prev);
        v = add_scaled(std::move(v), -c, prev);
      }
      if (!vec_zero(v)) h_orth.push_back(std::move(v));
    }
    for (const auto& fv : rec.intermediate) {
      VecQ y = fv;
      for (const auto& hb : h_orth) {
        Rational c = g.inner(y, hb) / g.inner(hb, hb);
        y = add_scaled(std::move(y), -c, hb);
      }
      if (!vec_zero(y)) y_space.push_back(y);
    }
  } else {
    x_space = p;
    y_space = p;
  }
  if (x_space.empty() || y_space.empty()) return out;  // inconclusive

  auto combine_in = [&](const std::vector<VecQ>& basis, Rng& rng) {
    VecQ v(g.dim());
    for (const auto& b : basis) {
      long long c = rng.uniform(-9, 9);
      if (c != 0) v = add_scaled(std::move(v), Rational(c), b);
    }
    return v;
  };
  long long hit = scan_find(
      std::uint64_t(budget),
      [&](std::uint64_t idx) {
        Rng rng = Rng::for_sample(seed ^ 0xfa15, idx);
        VecQ x = combine_in(x_space, rng), y = combine_in(y_space, rng);
        if (vec_zero(x) || vec_zero(y)) return false;
        VecQ br = g.bracket_coords(x, y);
        return proj_k_zero(br) && !vec_zero(br);
      },
      exec);
  out.pairs_checked = budget;
  if (hit >= 0) {
    Rng rng = Rng::for_sample(seed ^ 0xfa15, std::uint64_t(hit));
    VecQ x = combine_in(x_space, rng), y = combine_in(y_space, rng);
    out.counterexample = {x, y};
  }
  return out;
}

FrameSampler::FrameSampler(const TriplePresentation& t)
    : t_(t), nm_(t.dim_m()), np_(t.dim_p()), d_(t.g().dim()) {
  s_basis_ = t.h_perp_basis();
  const int n = nm_ + np_;
  const auto& g = t.g();

  pair_tensor_.assign(size_t(n) * n * d_, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      VecQ br = g.bracket_coords(s_basis_[a], s_basis_[b]);
      for (int i = 0; i < d_; ++i)
        pair_tensor_[(size_t(a) * n + b) * d_ + i] = br[i].to_double();
    }
  gram_.assign(size_t(n) * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gram_[size_t(a) * n + b] = g.inner(s_basis_[a], s_basis_[b]).to_double();
  gram_g_.assign(size_t(d_) * d_, 0.0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) gram_g_[size_t(i) * d_ + j] = g.gram().at(i, j).to_double();
  proj_h_.assign(size_t(d_) * d_, 0.0);
  for (int j = 0; j < d_; ++j) {
    VecQ pj = t.project_h(lie::coords_identity(j, d_));
    for (int i = 0; i < d_; ++i) proj_h_[size_t(i) * d_ + j] = pj[i].to_double();
  }
}

std::vector<std::vector<double>> FrameSampler::random_orthonormal_triple(
    std::uint64_t seed, std::uint64_t index) const {
  const int n = dim();
  Rng rng = Rng::for_sample(seed, index);
  std::vector<std::vector<double>> triple(3, std::vector<double>(n));
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += a[i] * gram_[size_t(i) * n + j] * b[j];
    return acc;
  };
  for (int v = 0; v < 3; ++v) {
    for (int i = 0; i < n; ++i) triple[v][i] = rng.gaussian();
    for (int w = 0; w < v; ++w) {
      double c = dot(triple[v], triple[w]);
      for (int i = 0; i < n; ++i) triple[v][i] -= c * triple[w][i];
    }
    double norm = std::sqrt(dot(triple[v], triple[v]));
    for (int i = 0; i < n; ++i) triple[v][i] /= norm;
  }
  return triple;
}

double FrameSampler::sec_float(const std::vector<double>& x,
                               const std::vector<double>& y) const {
  const int n = dim();
  std::vector<double> br(d_, 0.0);
  for (int a = 0; a < n; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < n; ++b) {
      double f = x[a] * y[b];
      if (f == 0.0) continue;
      const double* base = &pair_tensor_[(size_t(a) * n + b) * d_];
      for (int i = 0; i < d_; ++i) br[i] += f * base[i];
    }
  }
  std::vector<double> brh(d_, 0.0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) brh[i] += proj_h_[size_t(i) * d_ + j] * br[j];
  auto g_norm2 = [&](const std::vector<double>& v) {
    double acc = 0;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) acc += v[i] * gram_g_[size_t(i) * d_ + j] * v[j];
    return acc;
  };
  return 0.25 * g_norm2(br) + 0.75 * g_norm2(brh);
}

int FrameSampler::flat_space_dim_float(const std::vector<double>& x, double tol) const {
  const int n = dim();
  // rows: the three bracket conditions stacked, columns: y over the S basis
  std::vector<double> rows(size_t(3) * d_ * n, 0.0);
  auto add_block = [&](int block, int a_lo, int a_hi, int b_lo, int b_hi) {
    for (int a = a_lo; a < a_hi; ++a) {
      if (x[a] == 0.0) continue;
      for (int b = b_lo; b < b_hi; ++b) {
        const double* base = &pair_tensor_[(size_t(a) * n + b) * d_];
        for (int i = 0; i < d_; ++i)
          rows[(size_t(block) * d_ + i) * n + b] += x[a] * base[i];
      }
    }
  };
  add_block(0, 0, n, 0, n);        // [x, y]
  add_block(1, 0, nm_, 0, nm_);    // [x_m, y_m]
  add_block(2, nm_, n, nm_, n);    // [x_p, y_p]

  // float Gaussian elimination with scaled tolerance
  const int R = 3 * d_;
  double scale = 0;
  for (double v : rows) scale = std::max(scale, std::fabs(v));
  if (scale == 0) return n;
  int rank = 0;
  for (int col = 0; col < n && rank < R; ++col) {
    int best = -1;
    double bv = 0;
    for (int i = rank; i < R; ++i)
      if (std::fabs(rows[size_t(i) * n + col]) > bv) {
        bv = std::fabs(rows[size_t(i) * n + col]);
        best = i;
      }
    if (best < 0 || bv <= tol * scale) continue;
    for (int j = 0; j < n; ++j) std::swap(rows[size_t(rank) * n + j], rows[size_t(best) * n + j]);
    for (int i = rank + 1; i < R; ++i) {
      double f = rows[size_t(i) * n + col] / rows[size_t(rank) * n + col];
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) rows[size_t(i) * n + j] -= f * rows[size_t(rank) * n + j];
    }
    ++rank;
  }
  return n - rank;
}

KernelResult FrameSampler::flat_space_exact(const VecQ& x_coords) const {
  const int n = dim();
  const auto& g = t_.g();
  VecQ x_g(d_);
  for (int a = 0; a < n; ++a)
    if (!x_coords[a].is_zero()) x_g = add_scaled(std::move(x_g), x_coords[a], s_basis_[a]);
  VecQ xm = t_.project_m(x_g), xp = t_.project_p(x_g);

  MatQ m(3 * d_, n);
  for (int b = 0; b < n; ++b) {
    VecQ yb = s_basis_[b];
    VecQ r0 = g.bracket_coords(x_g, yb);
    VecQ r1 = g.bracket_coords(xm, t_.project_m(yb));
    VecQ r2 = g.bracket_coords(xp, t_.project_p(yb));
    for (int i = 0; i < d_; ++i) {
      m.at(i, b) = r0[i];
      m.at(d_ + i, b) = r1[i];
      m.at(2 * d_ + i, b) = r2[i];
    }
  }
  return kernel(m);
}

namespace {

Rational snap(double v, long long den) {
  return Rational(llround(v * double(den)), den);
}

}  // namespace

RicCertificate ric_k_certificate(const DeformedMetric& dm, int b_fiber, int b_base, int f,
                                 long long search_budget, std::uint64_t seed, Exec exec) {
  const auto& tri = *dm.triple;
  if (!dm.base_pair_P)
    throw std::invalid_argument("ric_k_certificate: base pair lacks Property (P)");
  RicCertificate cert;
  cert.k = b_fiber + b_base + f - 1;
  cert.b_fiber = b_fiber;
  cert.b_base = b_base;
  cert.f = f;
  if (dm.t) cert.t_desc = dm.t->str();
  cert.samples = search_budget;
  if (cert.k >= tri.dim_gh())
    throw std::invalid_argument("ric_k_certificate: k must be below dim G/H");

  FrameSampler fs(tri);
  const int n = fs.dim();
  const int nm = fs.dim_m();

  // Directions sampled three ways: mixed, fiber-only, base-only.  Flat frames
  // concentrate on the pure components, so all three are screened.
  auto draw = [&](std::uint64_t idx) {
    Rng rng = Rng::for_sample(seed, idx);
    std::vector<double> x(n, 0.0);
    int mode = int(idx % 3);
    int lo = mode == 2 ? nm : 0;
    int hi = mode == 1 ? nm : n;
    for (int i = lo; i < hi; ++i) x[i] = rng.gaussian();
    return x;
  };

  // screen every sampled direction; confirmation walks the hits in index
  // order, so a spurious float hit never masks a later genuine one
  std::vector<char> hits(size_t(search_budget), 0);
  scan_apply(
      std::uint64_t(search_budget),
      [&](std::uint64_t idx) {
        std::vector<double> x = draw(idx);
        hits[idx] = fs.flat_space_dim_float(x) >= cert.k + 1;
      },
      exec);

  const auto& g = tri.g();
  auto to_g = [&](const VecQ& coords) {
    VecQ v(g.dim());
    const auto s = tri.h_perp_basis();
    for (int a = 0; a < n; ++a)
      if (!coords[a].is_zero()) v = add_scaled(std::move(v), coords[a], s[a]);
    return v;
  };
  auto inner_s = [&](const VecQ& a, const VecQ& b) { return g.inner(to_g(a), to_g(b)); };

  auto confirm = [&](std::uint64_t idx) -> bool {
    // snap the screened direction and solve for the flat space exactly
    std::vector<double> xf = draw(idx);
    VecQ x(n);
    for (int i = 0; i < n; ++i) x[i] = snap(xf[i], 64);
    bool nonzero = false;
    for (const auto& c : x) nonzero |= !c.is_zero();
    if (!nonzero) return false;
    auto ker = fs.flat_space_exact(x);
    if (int(ker.basis.size()) < cert.k + 1) return false;

    // assemble an exact orthogonal frame {x; e_1..e_k} inside the flat space
    std::vector<VecQ> frame = {x};
    for (const auto& cand : ker.basis) {
      if (int(frame.size()) == cert.k + 1) break;
      VecQ v = cand;
      for (const auto& fvec : frame) {
        Rational c = inner_s(v, fvec) / inner_s(fvec, fvec);
        if (!c.is_zero())
          for (int i = 0; i < n; ++i) v[i] -= c * fvec[i];
      }
      bool vz = true;
      for (const auto& c : v) vz = vz && c.is_zero();
      if (!vz) frame.push_back(std::move(v));
    }
    if (int(frame.size()) < cert.k + 1) return false;
    for (int i = 1; i <= cert.k; ++i)
      if (!flat_plane_test(to_g(frame[0]), to_g(frame[i]), dm)) return false;
    cert.falsified = true;
    cert.witness_frame = std::move(frame);
    return true;
  };
  for (std::uint64_t idx = 0; idx < std::uint64_t(search_budget); ++idx)
    if (hits[idx] && confirm(idx)) break;
  return cert;
}

std::string RicCertificate::to_json(const std::string& triple_name) const {
  nlohmann::json j;
  j["schema"] = 1;
  j["triple"] = triple_name;
  j["t"] = t_desc;
  j["k"] = k;
  j["b_fiber"] = b_fiber;
  j["b_base"] = b_base;
  j["f"] = f;
  j["samples"] = samples;
  j["falsified"] = falsified;
  if (falsified) {
    nlohmann::json frame = nlohmann::json::array();
    for (const auto& v : witness_frame) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& c : v) row.push_back(c.str());
      frame.push_back(row);
    }
    j["witness"] = frame;
  }
  return j.dump(2);
}

}  // namespace fatlab::curv
