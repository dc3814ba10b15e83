#include "fatlab/presets.hpp"

#include <stdexcept>

namespace fatlab::lie {

using namespace builders;

namespace {

AlgebraPresentation so_pres(int n, const std::string& name) {
  std::vector<int> block(n * (n - 1) / 2);
  for (int i = 0; i < int(block.size()); ++i) block[i] = i;
  return AlgebraPresentation(name, n, so_basis(n), {block}, {Rational(1)});
}

MatQ pad_tail(const MatQ& x, int total) {
  return direct_sum(x, MatQ::zero(total - x.rows(), total - x.cols()));
}

MatQ pad_head(const MatQ& x, int total) {
  return direct_sum(MatQ::zero(total - x.rows(), total - x.cols()), x);
}

VecQ unit(int i, int n) {
  VecQ v(n);
  v[i] = Rational(1);
  return v;
}

/// so3 (+) so4 inside 7x7 block matrices, so4-ideal scaled by t.
AlgebraPresentation so3_plus_so4(const Rational& t) {
  std::vector<MatQ> basis;
  for (const auto& b : so_basis(3)) basis.push_back(pad_tail(b, 7));
  for (const auto& b : so_basis(4)) basis.push_back(pad_head(b, 7));
  return AlgebraPresentation("so3+so4", 7, basis, {{0, 1, 2}, {3, 4, 5, 6, 7, 8}},
                             {Rational(1), t});
}

/// u1 (+) so4 inside 6x6 block matrices.
AlgebraPresentation u1_plus_so4() {
  std::vector<MatQ> basis;
  MatQ s(2, 2);
  s.at(0, 1) = Rational(1);
  s.at(1, 0) = Rational(-1);
  basis.push_back(pad_tail(s, 6));
  for (const auto& b : so_basis(4)) basis.push_back(pad_head(b, 6));
  return AlgebraPresentation("u1+so4", 6, basis, {{0}, {1, 2, 3, 4, 5, 6}},
                             {Rational(1), Rational(1)});
}

/// rotation generator E_ij - E_ji inside an n x n ambient.
MatQ rot(int n, int i, int j) {
  MatQ m(n, n);
  m.at(i, j) = Rational(1);
  m.at(j, i) = Rational(-1);
  return m;
}

std::vector<VecQ> coords_of(const AlgebraPresentation& g, const std::vector<MatQ>& mats) {
  std::vector<VecQ> out;
  for (const auto& m : mats) out.push_back(g.coords(m));
  return out;
}

VecQ e7(int i) { return unit(i, 7); }

TripleRecord make_so_chain(int n) {
  // so(n-1) < so(n) < so(n+1), block embeddings
  AlgebraPresentation g = so_pres(n + 1, "so" + std::to_string(n + 1));
  std::vector<MatQ> kmats, hmats;
  for (const auto& b : so_basis(n)) kmats.push_back(pad_tail(b, n + 1));
  for (const auto& b : so_basis(n - 1)) hmats.push_back(pad_tail(b, n + 1));
  TriplePresentation t("so" + std::to_string(n - 1) + "<so" + std::to_string(n) + "<so" +
                           std::to_string(n + 1),
                       g, coords_of(g, kmats), coords_of(g, hmats));
  TripleRecord rec{std::move(t), {}, {}, std::nullopt, true, 1};
  // the m-direction witness y = diag(M(1,0,...,0), 0) has dim Z_p(y) = n - 2
  VecQ w(n - 1);
  w[0] = Rational(1);
  MatQ y = pad_tail(M_vector(w), n + 1);
  rec.f_hints_y_in_m.push_back(WitnessHint::explicit_vec(
      {rec.triple.g().coords(y)},
      "the bracket with M(z) rotates (z_1, z_n) and kills nothing else, leaving an (n-2)-plane"));
  return rec;
}

TripleRecord make_pattern_triple(const std::string& which) {
  // the three f = 1 families h = {(w, phi(w))} < f (+) so3 < f (+) so4,
  // plus the so2 < so3 < so4 member
  if (which == "0<so3<so4") {
    AlgebraPresentation g = so_pres(4, "so4");
    std::vector<MatQ> kmats = {rot(4, 0, 1), rot(4, 0, 2), rot(4, 1, 2)};
    TriplePresentation t(which, g, coords_of(g, kmats), {});
    TripleRecord rec{std::move(t), {}, {}, 1, true, 1};
    const auto& gg = rec.triple.g();
    rec.f_hints_x_in_p.push_back(WitnessHint::transitivity(
        1, {gg.coords(M_vector({Rational(1), Rational(0), Rational(0)}))},
        "Ad of the middle SO(3) is transitive on spheres of p = R^3; the centralizer of a "
        "unit vector in so3 is the so2 stabilizing it"));
    rec.f_hints_y_in_m.push_back(WitnessHint::transitivity(
        1, {gg.coords(rot(4, 0, 1))},
        "Ad of the middle SO(3) is transitive on spheres of m = so3; a nonzero 3x3 "
        "skew matrix has a line kernel"));
    return rec;
  }
  if (which == "so2<so3<so4") {
    AlgebraPresentation g = so_pres(4, "so4");
    std::vector<MatQ> kmats = {rot(4, 0, 1), rot(4, 0, 2), rot(4, 1, 2)};
    std::vector<MatQ> hmats = {rot(4, 0, 1)};
    TriplePresentation t(which, g, coords_of(g, kmats), coords_of(g, hmats));
    TripleRecord rec{std::move(t), {}, {}, 1, true, 1};
    const auto& gg = rec.triple.g();
    rec.f_hints_x_in_p.push_back(WitnessHint::transitivity(
        1, {gg.coords(M_vector({Rational(1), Rational(0), Rational(0)}))},
        "m here is contained in the m of the trivial-h triple on the same pair, whose "
        "directional maxima are 1; the commuting pair (M(e1), a23) realizes it"));
    rec.f_hints_y_in_m.push_back(WitnessHint::transitivity(
        1, {gg.coords(rot(4, 0, 2))},
        "subset monotonicity from the trivial-h triple bounds the maximum by 1; the "
        "kernel line of a13 inside p realizes it"));
    return rec;
  }
  if (which == "u1<u2<u1+so4") {
    AlgebraPresentation g = u1_plus_so4();
    std::vector<MatQ> kmats = {rot(6, 0, 1), rot(6, 2, 3), rot(6, 2, 4), rot(6, 3, 4)};
    std::vector<MatQ> hmats = {rot(6, 0, 1) + rot(6, 2, 3)};  // w + phi(w)
    TriplePresentation t(which, g, coords_of(g, kmats), coords_of(g, hmats));
    TripleRecord rec{std::move(t), {}, {}, 1, true, 1};
    rec.f_hints_x_in_p.push_back(WitnessHint::transitivity(
        1, {rec.triple.p_basis()[0]},
        "for x = (0, M(z)) and y = (psi(A), A) the bracket vanishes iff A z = 0; the "
        "annihilator of a nonzero z in so3 is one-dimensional"));
    rec.f_hints_y_in_m.push_back(WitnessHint::transitivity(
        1, {rec.triple.m_basis()[0]},
        "for y = (psi(A), A) the centralizer in p is the kernel line of the nonzero "
        "3x3 skew matrix A"));
    return rec;
  }
  if (which == "so3<so3+so3<so3+so4") {
    AlgebraPresentation g = so3_plus_so4(Rational(1));
    std::vector<MatQ> kmats = {rot(7, 0, 1), rot(7, 0, 2), rot(7, 1, 2),
                               rot(7, 3, 4), rot(7, 3, 5), rot(7, 4, 5)};
    std::vector<MatQ> hmats = {rot(7, 0, 1) + rot(7, 3, 4), rot(7, 0, 2) + rot(7, 3, 5),
                               rot(7, 1, 2) + rot(7, 4, 5)};
    TriplePresentation t(which, g, coords_of(g, kmats), coords_of(g, hmats));
    TripleRecord rec{std::move(t), {}, {}, 1, true, 1};
    rec.f_hints_x_in_p.push_back(WitnessHint::transitivity(
        1, {rec.triple.p_basis()[0]},
        "same pattern: the bracket of (psi(A), A) with (0, M(z)) vanishes iff A z = 0"));
    rec.f_hints_y_in_m.push_back(WitnessHint::transitivity(
        1, {rec.triple.m_basis()[0]},
        "kernel line of the so3-part of a nonzero m-vector"));
    return rec;
  }
  if (which == "0+so3<so3+so3<so3+so4") {
    AlgebraPresentation g = so3_plus_so4(Rational(1));
    std::vector<MatQ> kmats = {rot(7, 0, 1), rot(7, 0, 2), rot(7, 1, 2),
                               rot(7, 3, 4), rot(7, 3, 5), rot(7, 4, 5)};
    std::vector<MatQ> hmats = {rot(7, 3, 4), rot(7, 3, 5), rot(7, 4, 5)};
    TriplePresentation t(which, g, coords_of(g, kmats), coords_of(g, hmats));
    // m and p sit in complementary ideals; compute_f certifies 3 on its own
    return TripleRecord{std::move(t), {}, {}, 3, true, 1};
  }
  throw std::invalid_argument("unknown pattern triple " + which);
}

TripleRecord make_su3_g2_so7() {
  AlgebraPresentation g = so_pres(7, "so7");
  TriplePresentation t("su3<g2<so7", g, coords_of(g, g2_basis()), coords_of(g, su3_basis()));
  TripleRecord rec{std::move(t), {}, {}, 1, true, 5};
  const auto& gg = rec.triple.g();
  rec.f_hints_x_in_p.push_back(WitnessHint::slice(
      {gg.coords(A_perp(e7(0))), gg.coords(A_perp(e7(6)))}, {"v1", "v7"},
      "su3 fixes A(e7) and acts with cohomogeneity one on its complement in p, so every "
      "orbit meets the slice A(v1, 0, ..., 0, v7)"));
  rec.f_hints_y_in_m.push_back(WitnessHint::transitivity(
      1, {gg.coords(C_perp(unit(0, 6)))},
      "the isotropy action of su3 on m is the standard representation on C^3, transitive "
      "on the unit sphere; dim Z_p(C(e1)) = 1 by the displayed bracket"));
  return rec;
}

TripleRecord make_g2_so7_so8() {
  AlgebraPresentation g = so_pres(8, "so8");
  std::vector<MatQ> kmats, hmats;
  for (const auto& b : so_basis(7)) kmats.push_back(pad_tail(b, 8));
  for (const auto& b : g2_basis()) hmats.push_back(pad_tail(b, 8));
  TriplePresentation t("g2<so7<so8", g, coords_of(g, kmats), coords_of(g, hmats));
  TripleRecord rec{std::move(t), {}, {}, 1, true, 1};
  const auto& gg = rec.triple.g();
  VecQ e3(7);
  e3[2] = Rational(1);
  rec.f_hints_x_in_p.push_back(WitnessHint::transitivity(
      1, {gg.coords(M_vector(e3))},
      "G2 acts transitively on the unit sphere of p (vector representation); the "
      "witness M(e3) commutes with diag(A(e1), 0)"));
  rec.f_hints_y_in_m.push_back(WitnessHint::transitivity(
      1, {gg.coords(pad_tail(A_perp(e7(0)), 8))},
      "G2 acts transitively on the unit sphere of m; A(v) is an odd skew matrix of "
      "rank 6, so its kernel line gives dim Z_p = 1"));
  return rec;
}

TripleRecord make_su3_so6_so7() {
  AlgebraPresentation g = so_pres(7, "so7");
  std::vector<MatQ> kmats;
  for (const auto& b : so_basis(6)) kmats.push_back(pad_head(b, 7));
  TriplePresentation t("su3<so6<so7", g, coords_of(g, kmats), coords_of(g, su3_basis()));
  return TripleRecord{std::move(t), {}, {}, std::nullopt, false, 0};
}

PairRecord make_so_pair(int n) {
  AlgebraPresentation g = so_pres(n + 1, "so" + std::to_string(n + 1));
  std::vector<MatQ> hmats;
  for (const auto& b : so_basis(n)) hmats.push_back(pad_tail(b, n + 1));
  PairPresentation p("so" + std::to_string(n) + "<so" + std::to_string(n + 1), g,
                     coords_of(g, hmats));
  PairRecord rec{std::move(p), {}, 1, std::nullopt, true, {}};
  VecQ e1(n);
  e1[0] = Rational(1);
  rec.b_hints.push_back(WitnessHint::transitivity(
      1, {rec.pair.g.coords(M_vector(e1))},
      "SO(n) is transitive on the unit sphere of p = R^n; the bracket of independent "
      "M-vectors is the nonzero rotation of their plane"));
  return rec;
}

PairRecord make_g2_so7_pair() {
  AlgebraPresentation g = so_pres(7, "so7");
  PairPresentation p("g2<so7", g, coords_of(g, g2_basis()));
  PairRecord rec{std::move(p), {}, 1, std::nullopt, true, {}};
  rec.b_hints.push_back(WitnessHint::transitivity(
      1, {rec.pair.g.coords(A_perp(e7(0)))},
      "G2 is transitive on the unit sphere of its 7-dimensional representation p"));
  return rec;
}

PairRecord make_su3_g2_pair() {
  std::vector<int> block(14);
  for (int i = 0; i < 14; ++i) block[i] = i;
  AlgebraPresentation g("g2", 7, g2_basis(), {block}, {Rational(1)});
  PairPresentation p("su3<g2", g, coords_of(g, su3_basis()));
  PairRecord rec{std::move(p), {}, 1, std::nullopt, true, {}};
  rec.b_hints.push_back(WitnessHint::transitivity(
      1, {rec.pair.g.coords(C_perp(unit(0, 6)))},
      "su3 acts on p = C^3 with cohomogeneity one; the centralizer of C(e1) is its "
      "own line"));
  return rec;
}

PairRecord make_g2_so8_pair() {
  AlgebraPresentation g = so_pres(8, "so8");
  std::vector<MatQ> hmats;
  for (const auto& b : g2_basis()) hmats.push_back(pad_tail(b, 8));
  PairPresentation p("g2<so8", g, coords_of(g, hmats));
  PairRecord rec{std::move(p), {}, 2, std::nullopt, false, {}};
  VecQ e3(7);
  e3[2] = Rational(1);
  rec.b_hints.push_back(WitnessHint::transitivity(
      2, {rec.pair.g.coords(M_vector(e3))},
      "brackets of independent pairs in m have rank 6, in p rank 2; the symmetric "
      "base pair forces both components of a commuting pair to be proportional, "
      "capping the centralizer at 2; M(e3) together with diag(A(e1), 0) realizes it"));
  return rec;
}

PairRecord make_su3_so7_pair() {
  AlgebraPresentation g = so_pres(7, "so7");
  PairPresentation p("su3<so7", g, coords_of(g, su3_basis()));
  PairRecord rec{std::move(p), {}, std::nullopt, 3, false, {}};
  // A rank-4 element of the complement of su3 inside the first-row/column-zero
  // so6; its kernel 2-plane of M-vectors plus the element itself give a
  // 3-dimensional centralizer, realizing the chain bound through su3 < so6 < so7.
  MatQ y(7, 7);
  auto set = [&y](int i, int j, long v) {
    y.at(i - 1, j - 1) = Rational(v);
    y.at(j - 1, i - 1) = Rational(-v);
  };
  set(2, 4, 2);
  set(2, 5, -1);
  set(2, 6, -1);
  set(2, 7, -2);
  set(3, 4, -1);
  set(3, 5, -2);
  set(3, 6, 2);
  set(3, 7, -1);
  set(4, 6, 1);
  set(5, 7, 1);
  rec.b_hints.push_back(WitnessHint::explicit_vec(
      {rec.pair.g.coords(y)},
      "the triple su3 < so6 < so7 has dim m = 7 > 6 = dim p, forcing f >= 2 there, and "
      "b(su3 < so7) >= f + 1; this element of the so6-complement of su3 realizes 3"));
  return rec;
}

DimCaseRecord make_dim_case(std::string label, std::string desc, int m, int p) {
  return DimCaseRecord{std::move(label), std::move(desc), m, p};
}

PairRecord make_su2_falsifier_pair() {
  // su2 with intermediate u1, in the so3 matrix model
  AlgebraPresentation g = so_pres(3, "su2~so3");
  PairPresentation p("0<su2", g, {});
  PairRecord rec{std::move(p), {}, 1, std::nullopt, false, {}};
  rec.intermediate = {g.coords(rot(3, 0, 1))};
  return rec;
}

}  // namespace

const std::vector<PairTypeRow>& b1_pair_table() {
  static const std::vector<PairTypeRow> rows = {
      {1, "S^n", "so_n < so_{n+1}", true},
      {2, "S^{2n+1}", "su_n < u_n < su_{n+1}", false},
      {3, "S^{4n+3}", "sp_n < u1+sp_n < sp1+sp_n < sp_{n+1}", false},
      {4, "S^15", "spin7+ < spin8 < spin9", false},
      {5, "S^7", "g2 < spin7", true},
      {6, "S^6", "su3 < g2", true},
      {7, "CP^{2n}", "u_n < su_{n+1}", true},
      {8, "CP^{2n+1}", "sp_n+u1 < sp_n+sp1 < sp_{n+1}", false},
      {9, "HP^n", "sp_n+sp1 < sp_{n+1}", true},
      {10, "OP^2", "spin9 < f4", true},
      {11, "B^7", "so3max < so5", false},
      {12, "B^13", "sp2+u1 < u4 < su5", false},
      {13, "W^7_{1,1}", "du2 < u2+so3 < su3+so3", false},
      {14, "S^{2n+1}", "u_n < u1+u_n < u_{n+1}", false},
      {15, "S^{4n+3}", "sp_n+du1 < sp_n+u1+u1 < sp_n+sp1+u1 < sp_{n+1}+u1", false},
      {16, "S^{4n+3}", "sp_n+dsp1 < sp_n+sp1+sp1 < sp_{n+1}+sp1", false},
  };
  return rows;
}

Catalog::Catalog() {
  auto add_triple = [this](TripleRecord r) {
    std::string name = r.triple.name();
    triples_.emplace(std::move(name), std::move(r));
  };
  auto add_pair = [this](PairRecord r) {
    std::string name = r.pair.name;
    pairs_.emplace(std::move(name), std::move(r));
  };

  add_triple(make_pattern_triple("0<so3<so4"));
  add_triple(make_pattern_triple("so2<so3<so4"));
  add_triple(make_pattern_triple("u1<u2<u1+so4"));
  add_triple(make_pattern_triple("so3<so3+so3<so3+so4"));
  add_triple(make_pattern_triple("0+so3<so3+so3<so3+so4"));
  add_triple(make_su3_g2_so7());
  add_triple(make_g2_so7_so8());
  add_triple(make_su3_so6_so7());
  add_triple(make_so_chain(4));  // so3 < so4 < so5
  add_triple(make_so_chain(5));  // so4 < so5 < so6

  for (int n = 3; n <= 7; ++n) add_pair(make_so_pair(n));
  add_pair(make_g2_so7_pair());
  add_pair(make_su3_g2_pair());
  add_pair(make_g2_so8_pair());
  add_pair(make_su3_so7_pair());
  add_pair(make_su2_falsifier_pair());

  auto add_dim = [this](DimCaseRecord r) { dim_cases_.emplace(r.label, std::move(r)); };
  add_dim(make_dim_case("F4", "spin7+ < spin9 < spin10", 15, 9));
  add_dim(make_dim_case("F11", "so3max < so5 < so6", 7, 5));
  add_dim(make_dim_case("F3", "sp1 < sp2 ~ so5 < so6", 7, 5));
  add_dim(make_dim_case("F8", "sp1+u1 < sp2 ~ so5 < so6", 6, 5));
  add_dim(make_dim_case("F13", "u2 < su3+so3 < su3+so4", 7, 3));
  add_dim(make_dim_case("F15", "sp1+du1 < sp2+u1 ~ u1+so5 < u1+so6", 7, 5));
  add_dim(make_dim_case("F16n1", "sp1+dsp1 < sp2+sp1 ~ sp1+so5 < sp1+so6", 7, 5));
  add_dim(make_dim_case("F16n2", "sp1+dsp1 < sp2+sp1 ~ sp2+so3 < sp2+so4 (n = 2 of 4n-1, 3)", 7, 3));
}

const Catalog& Catalog::builtin() {
  static const Catalog c;
  return c;
}

const TripleRecord& Catalog::triple(const std::string& name) const {
  auto it = triples_.find(name);
  if (it == triples_.end()) throw std::invalid_argument("unknown triple preset " + name);
  return it->second;
}

const PairRecord& Catalog::pair(const std::string& name) const {
  auto it = pairs_.find(name);
  if (it == pairs_.end()) throw std::invalid_argument("unknown pair preset " + name);
  return it->second;
}

const DimCaseRecord& Catalog::dim_case(const std::string& label) const {
  auto it = dim_cases_.find(label);
  if (it == dim_cases_.end()) throw std::invalid_argument("unknown dimension case " + label);
  return it->second;
}

std::vector<std::string> Catalog::triple_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : triples_) out.push_back(k);
  return out;
}

std::vector<std::string> Catalog::pair_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : pairs_) out.push_back(k);
  return out;
}

std::vector<std::string> Catalog::dim_case_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : dim_cases_) out.push_back(k);
  return out;
}

TripleRecord Catalog::scaled_diag_so3_triple(const Rational& t) {
  AlgebraPresentation g = so3_plus_so4(t);
  std::vector<MatQ> kmats = {rot(7, 0, 1), rot(7, 0, 2), rot(7, 1, 2),
                             rot(7, 3, 4), rot(7, 3, 5), rot(7, 4, 5)};
  std::vector<MatQ> hmats = {rot(7, 0, 1) + rot(7, 3, 4), rot(7, 0, 2) + rot(7, 3, 5),
                             rot(7, 1, 2) + rot(7, 4, 5)};
  TriplePresentation tri("so3<so3+so3<so3+so4@t", g, coords_of(g, kmats), coords_of(g, hmats));
  TripleRecord rec{std::move(tri), {}, {}, 1, true, 1};
  rec.f_hints_x_in_p.push_back(WitnessHint::transitivity(
      1, {rec.triple.p_basis()[0]},
      "same pattern at every ideal scale: bracket vanishes iff A z = 0"));
  rec.f_hints_y_in_m.push_back(WitnessHint::transitivity(
      1, {rec.triple.m_basis()[0]}, "kernel line of the so3-part"));
  return rec;
}

}  // namespace fatlab::lie
