#include "fatlab/registry.hpp"

#include "fatlab/curvature.hpp"
#include "fatlab/liealg.hpp"
#include "fatlab/octonion.hpp"
#include "fatlab/presets.hpp"
#include "fatlab/rng.hpp"
#include "fatlab/spin.hpp"
#include "fatlab/topology.hpp"

#include <json.hpp>

#include <chrono>
#include <set>
#include <sstream>

namespace fatlab::reg {

using lie::Catalog;
using lie::active_catalog;
using lie::CertStatus;

namespace {

ClaimResult ok(std::string id, std::string detail) {
  return ClaimResult{std::move(id), true, "pass", std::move(detail), 0};
}

ClaimResult bad(std::string id, std::string detail) {
  return ClaimResult{std::move(id), false, "fail", std::move(detail), 0};
}

ClaimResult lower(std::string id, std::string detail, bool pass) {
  return ClaimResult{std::move(id), pass, "lower-bound", std::move(detail), 0};
}

long long budget_or(const RunConfig& cfg, long long dflt) {
  return cfg.budget > 0 ? cfg.budget : dflt;
}

ClaimResult check_b(const std::string& id, const std::string& pair_name, int expected,
                    const RunConfig& cfg, long long dflt) {
  const auto& rec = active_catalog().pair(pair_name);
  auto rep = lie::compute_b(rec.pair.g, rec.pair.hperp_basis, rec.b_hints,
                            budget_or(cfg, dflt), cfg.seed, rec.b_claimed, cfg.exec);
  std::ostringstream os;
  os << "certified lower " << rep.certified_lower << ", sampled max " << rep.sampled_max;
  if (rep.status != CertStatus::Certified) return bad(id, "not certified; " + os.str());
  if (rep.certified_lower != expected)
    return bad(id, "value " + std::to_string(rep.certified_lower) + " expected " +
                       std::to_string(expected));
  return ok(id, "value " + std::to_string(expected) + "; " + os.str());
}

ClaimResult check_f(const std::string& id, const std::string& triple_name, int expected,
                    const RunConfig& cfg, long long dflt) {
  const auto& rec = active_catalog().triple(triple_name);
  auto rep = lie::compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m,
                            budget_or(cfg, dflt), cfg.seed, rec.f_claimed, cfg.exec);
  if (rep.status != CertStatus::Certified)
    return bad(id, "not certified; lower " + std::to_string(rep.certified_lower));
  if (rep.certified_lower != expected)
    return bad(id, "value " + std::to_string(rep.certified_lower) + " expected " +
                       std::to_string(expected));
  return ok(id, "value " + std::to_string(expected));
}

}  // namespace

const std::vector<CaseEntry>& classification_cases() {
  static const std::vector<CaseEntry> cases = {
      {"T5", "su3 < g2 < so7 (base pair of type 5)", "witness", "eq1", true, "su3<g2<so7", 6, 7},
      {"F1.n3", "so2 < so3 < so4", "witness", "eq1", true, "so2<so3<so4", 2, 3},
      {"F1.n5", "so4 < so5 < so6 (chain witness, n = 5)", "witness", "gt1", false,
       "so4<so5<so6", 4, 5},
      {"F2", "{0} < so3 < so4", "witness", "eq1", true, "0<so3<so4", 3, 3},
      {"F4", "spin7+ < spin9 < spin10", "dimension", "gt1", false, "", 15, 9},
      {"F5", "g2 < spin7 < spin8", "witness", "eq1", true, "g2<so7<so8", 7, 7},
      {"F11", "so3max < so5 < so6", "dimension", "gt1", false, "", 7, 5},
      {"F3", "sp1 < sp2 ~ so5 < so6", "dimension", "gt1", false, "", 7, 5},
      {"F8", "sp1+u1 < sp2 ~ so5 < so6", "dimension", "gt1", false, "", 6, 5},
      {"F9", "sp1+sp1 < so5 < so6, triple-isomorphic to so4 < so5 < so6", "witness", "gt1",
       false, "so4<so5<so6", 4, 5},
      {"F1.n3a", "so3 < so3+so3 < so3+so4", "witness", "eq1", true, "so3<so3+so3<so3+so4", 3,
       3},
      {"F2a", "{0}+so3 < so3+so3 < so3+so4", "ideal-split", "eq3", false,
       "0+so3<so3+so3<so3+so4", 3, 3},
      {"F13", "u2 < su3+so3 < su3+so4", "dimension", "gt1", false, "", 7, 3},
      {"F14", "u1 < u2 < u1+so4", "witness", "eq1", true, "u1<u2<u1+so4", 3, 3},
      {"F15", "sp1+du1 < sp2+u1 ~ u1+so5 < u1+so6", "dimension", "gt1", false, "", 7, 5},
      {"F16.n1", "sp1+dsp1 < sp2+sp1 ~ sp1+so5 < sp1+so6", "dimension", "gt1", false, "", 7,
       5},
      {"F16.n2", "sp_{n-1}+dsp1 < sp_n+so3 < sp_n+so4 at n = 2 (dims 4n-1 and 3)",
       "dimension", "gt1", false, "", 7, 3},
  };
  return cases;
}

CaseTable classify_triples(const RunConfig& cfg) {
  CaseTable table;
  table.all_pass = true;
  for (const auto& entry : classification_cases()) {
    CaseOutcome out;
    out.entry = entry;
    if (entry.route == "dimension") {
      auto d = lie::dimension_obstruction(entry.dim_m, entry.dim_p);
      bool rejected = !d.f1_allowed && !d.f0_allowed;
      out.pass = rejected && entry.expected == "gt1";
      out.detail = "dim m = " + std::to_string(entry.dim_m) +
                   ", dim p = " + std::to_string(entry.dim_p) +
                   (rejected ? "; neither f = 0 nor f = 1 is allowed" : "; not rejected");
    } else if (entry.route == "ideal-split") {
      const auto& rec = active_catalog().triple(entry.triple_preset);
      bool split = rec.triple.mp_brackets_vanish();
      auto rep = lie::compute_f(rec.triple, {}, {}, budget_or(cfg, 100), cfg.seed,
                                rec.f_claimed, cfg.exec);
      out.pass = split && rep.status == CertStatus::Certified && rep.certified_lower == 3 &&
                 entry.expected == "eq3";
      out.detail = "[m, p] = 0; f = " + std::to_string(rep.certified_lower);
    } else {  // witness
      const auto& rec = active_catalog().triple(entry.triple_preset);
      auto rep = lie::compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m,
                                budget_or(cfg, 200), cfg.seed, rec.f_claimed, cfg.exec);
      if (entry.expected == "eq1")
        out.pass = rep.status == CertStatus::Certified && rep.certified_lower == 1;
      else  // gt1
        out.pass = rep.certified_lower >= 2;
      out.detail = "f " + std::string(entry.expected == "eq1" ? "= " : ">= ") +
                   std::to_string(rep.certified_lower);
      // every survivor must clear the parity obstruction
      if (entry.expected == "eq1") {
        auto d = lie::dimension_obstruction(rec.triple);
        out.pass = out.pass && d.f1_allowed;
      }
    }
    if (entry.survivor && out.pass) table.survivors.push_back(entry.description);
    table.all_pass = table.all_pass && out.pass;
    table.rows.push_back(std::move(out));
  }
  if (table.survivors.size() != 6) table.all_pass = false;
  return table;
}

Registry::Registry() {
  auto add = [this](std::string id, std::string statement, std::string plan,
                    long long dflt_budget,
                    std::function<ClaimResult(const RunConfig&)> run) {
    ClaimRecord rec;
    rec.id = id;
    rec.statement = std::move(statement);
    rec.plan = std::move(plan);
    rec.default_budget = dflt_budget;
    rec.run = std::move(run);
    order_.push_back(id);
    claims_.emplace(std::move(id), std::move(rec));
  };
  auto add_const = [this](std::string id, std::string statement, std::string note) {
    ClaimRecord rec;
    rec.id = id;
    rec.statement = std::move(statement);
    rec.plan = "recorded constant";
    rec.computational = false;
    rec.run = [id, note](const RunConfig&) {
      return ClaimResult{id, true, "constant", note, 0};
    };
    order_.push_back(id);
    claims_.emplace(std::move(id), std::move(rec));
  };

  // ---- algebra self-tests ----------------------------------------------
  add("oct.table", "\"the multiplication table is antisymmetric with associative "
      "quaternionic subalgebras\"",
      "octonion table self-test over all 21 imaginary pairs", 0, [](const RunConfig&) {
        int pairs = octonion_table_self_test();
        return pairs == 21 ? ok("oct.table", "21 quaternionic pairs verified")
                           : bad("oct.table", "unexpected pair count");
      });
  add("oct.moufang", "\"the octonions satisfy the three Moufang identities\"",
      "direct expansion on random rational triples", 1000, [](const RunConfig& cfg) {
        Rng rng(cfg.seed);
        long long n = budget_or(cfg, 1000);
        for (long long t = 0; t < n; ++t) {
          Octonion a, b, c;
          for (int i = 0; i < 8; ++i) {
            a[i] = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
            b[i] = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
            c[i] = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
          }
          if (!check_moufang(a, b, c)) return bad("oct.moufang", "violation found");
        }
        return ok("oct.moufang", std::to_string(n) + " random triples");
      });
  add("alg.jacobi", "\"every shipped presentation satisfies the Jacobi identity exactly\"",
      "zero residual over all basis triples of every preset", 0, [](const RunConfig&) {
        for (const auto& name : active_catalog().triple_names())
          if (!active_catalog().triple(name).triple.g().jacobi_clean())
            return bad("alg.jacobi", "residual in " + name);
        return ok("alg.jacobi", "all presets clean");
      });
  add("alg.g2-model", "\"g2 inside so7 is 14-dimensional and bracket-closed; its complement "
      "is the A(v) family\"",
      "constructed presentation plus orthogonality of A(v) to every basis element", 0,
      [](const RunConfig&) {
        const auto& rec = active_catalog().pair("g2<so7");
        if (int(rec.pair.h_basis.size()) != 14) return bad("alg.g2-model", "dimension");
        if (int(rec.pair.hperp_basis.size()) != 7) return bad("alg.g2-model", "complement");
        return ok("alg.g2-model", "dim 14, complement 7");
      });
  add("alg.su3-model", "\"su3 inside g2 is 8-dimensional and bracket-closed; its complement "
      "is the C(z) family\"",
      "constructed presentation with the complement dimension", 0, [](const RunConfig&) {
        const auto& rec = active_catalog().pair("su3<g2");
        if (int(rec.pair.h_basis.size()) != 8) return bad("alg.su3-model", "dimension");
        if (int(rec.pair.hperp_basis.size()) != 6) return bad("alg.su3-model", "complement");
        return ok("alg.su3-model", "dim 8, complement 6");
      });

  // ---- b and f invariants ----------------------------------------------
  add("b.g2-so8", "\"the pair g2 < so8 has b = 2\"",
      "witness pair plus rank-argument bound; sampled maxima stay at 2", 2000,
      [](const RunConfig& cfg) { return check_b("b.g2-so8", "g2<so8", 2, cfg, 2000); });
  add("b.so-chain", "\"the pair so_n < so_{n+1} has b = 1\"",
      "transitivity on the sphere of p with the M(e1) witness, n = 3..7", 300,
      [](const RunConfig& cfg) {
        for (int n = 3; n <= 7; ++n) {
          auto r = check_b("b.so-chain", "so" + std::to_string(n) + "<so" + std::to_string(n + 1),
                           1, cfg, 300);
          if (!r.pass) return r;
        }
        return ok("b.so-chain", "n = 3..7 all certify 1");
      });
  add("b.g2-so7", "\"the pair g2 < so7 has b = 1\"", "orbit transitivity plus witness", 300,
      [](const RunConfig& cfg) { return check_b("b.g2-so7", "g2<so7", 1, cfg, 300); });
  add("b.su3-g2", "\"the pair su3 < g2 has b = 1\"", "orbit transitivity plus witness", 300,
      [](const RunConfig& cfg) { return check_b("b.su3-g2", "su3<g2", 1, cfg, 300); });
  add("b.su3-so7", "\"the total space pair su3 < so7 has b >= 3\"",
      "frozen witness from the chain su3 < so6 < so7; dimension parity forces f >= 2 there",
      300, [](const RunConfig& cfg) {
        const auto& rec = active_catalog().pair("su3<so7");
        auto rep = lie::compute_b(rec.pair.g, rec.pair.hperp_basis, rec.b_hints,
                                  budget_or(cfg, 300), cfg.seed, std::nullopt, cfg.exec);
        // the chain route: su3 < so6 < so7 has dim m = 7 > 6 = dim p
        auto d = lie::dimension_obstruction(
            active_catalog().triple("su3<so6<so7").triple);
        bool chain = !d.f1_allowed && !d.f0_allowed;
        int floor_claim = rec.b_lower_claimed.value_or(3);
        bool pass = chain && rep.certified_lower >= floor_claim;
        return lower("b.su3-so7",
                     "certified lower " + std::to_string(rep.certified_lower) +
                         "; chain dims (7, 6) reject f <= 1",
                     pass);
      });
  add("f.su3-g2-so7", "\"the triple su3 < g2 < so7 has f = 1\"",
      "slice analysis over A(v1, 0, ..., 0, v7) and the C(e1) witness", 500,
      [](const RunConfig& cfg) { return check_f("f.su3-g2-so7", "su3<g2<so7", 1, cfg, 500); });
  add("f.g2-so7-so8", "\"the triple g2 < so7 < so8 has f = 1\"",
      "transitivity witnesses in both directions", 500,
      [](const RunConfig& cfg) { return check_f("f.g2-so7-so8", "g2<so7<so8", 1, cfg, 500); });
  add("f.so-chain-n4", "\"the triple so3 < so4 < so5 has f >= 2\"",
      "explicit witness with an (n-2)-dimensional centralizer", 300,
      [](const RunConfig& cfg) {
        const auto& rec = active_catalog().triple("so3<so4<so5");
        auto rep = lie::compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m,
                                  budget_or(cfg, 300), cfg.seed, std::nullopt, cfg.exec);
        return lower("f.so-chain-n4", "certified lower " + std::to_string(rep.certified_lower),
                     rep.certified_lower >= 2);
      });
  add("f.F2-nontrivial-a", "\"the split triple {0}+so3 < so3+so3 < so3+so4 has [m, p] = 0 "
      "and f = 3\"",
      "ideal-splitting certificate", 100, [](const RunConfig& cfg) {
        return check_f("f.F2-nontrivial-a", "0+so3<so3+so3<so3+so4", 3, cfg, 100);
      });
  add("f.survivors-low", "\"the remaining f = 1 triples certify\"",
      "pattern-family hints for the so4-family triples", 300, [](const RunConfig& cfg) {
        for (const char* name :
             {"0<so3<so4", "so2<so3<so4", "u1<u2<u1+so4", "so3<so3+so3<so3+so4"}) {
          auto r = check_f("f.survivors-low", name, 1, cfg, 300);
          if (!r.pass) return r;
        }
        return ok("f.survivors-low", "all four certify f = 1");
      });
  add("f.metric-independence", "\"the fatness coindex is independent of the chosen "
      "bi-invariant metric\"",
      "recompute f for the diagonal so3 triple at ideal scales 1, 2, 5", 200,
      [](const RunConfig& cfg) {
        int first = -1;
        for (long t : {1L, 2L, 5L}) {
          auto rec = Catalog::scaled_diag_so3_triple(Rational(t));
          auto rep = lie::compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m,
                                    budget_or(cfg, 200), cfg.seed, rec.f_claimed, cfg.exec);
          if (rep.status != CertStatus::Certified)
            return bad("f.metric-independence", "not certified at t = " + std::to_string(t));
          if (first < 0) first = rep.certified_lower;
          if (rep.certified_lower != first)
            return bad("f.metric-independence", "value changed at t = " + std::to_string(t));
        }
        return ok("f.metric-independence", "f = " + std::to_string(first) + " at t = 1, 2, 5");
      });
  add("pairs.bequals1.count", "\"the table of reduced pairs with b = 1 has sixteen rows\"",
      "load the shipped table", 0, [](const RunConfig&) {
        return lie::b1_pair_table().size() == 16
                   ? ok("pairs.bequals1.count", "16 pair types loaded")
                   : bad("pairs.bequals1.count", "row count");
      });
  add("pairs.P.flags", "\"a pair with b = 1 satisfies (P) iff it is of type 1, 5, 6, 7, 9 "
      "or 10\"",
      "flags of the shipped table", 0, [](const RunConfig&) {
        std::set<int> expect = {1, 5, 6, 7, 9, 10};
        for (const auto& row : lie::b1_pair_table())
          if (row.property_P != (expect.count(row.type) != 0))
            return bad("pairs.P.flags", "type " + std::to_string(row.type));
        return ok("pairs.P.flags", "flags match");
      });

  // ---- classification -----------------------------------------------------
  add("classify.survivors", "\"the reduced triples with b = b = f = 1 over a base pair with "
      "(P) are exactly six\"",
      "full case replay with the same route as each rejection", 200,
      [](const RunConfig& cfg) {
        auto table = classify_triples(cfg);
        if (!table.all_pass) return bad("classify.survivors", "a case failed");
        return ok("classify.survivors", std::to_string(table.survivors.size()) + " survivors");
      });

  // ---- curvature -----------------------------------------------------------
  add("prop-p.g2-so7", "\"for the pair g2 < so7, vanishing of [x, y]_k forces [x, y] = 0\"",
      "witness mode over basis and random pairs", 400, [](const RunConfig& cfg) {
        auto v = curv::property_P_test(active_catalog().pair("g2<so7"), curv::PMode::Witness,
                                       budget_or(cfg, 400), cfg.seed, cfg.exec);
        return v.holds_on_samples ? ok("prop-p.g2-so7", "no violation in samples")
                                  : bad("prop-p.g2-so7", "counterexample found");
      });
  add("prop-p.pairing", "\"the pairing of [A(e1), A(e2)] with the z1 generator equals -6\"",
      "exact trace-form evaluation", 0, [](const RunConfig&) {
        using namespace lie::builders;
        MatQ x = A_perp({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0),
                         Rational(0), Rational(0)});
        MatQ y = A_perp({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
                         Rational(0), Rational(0)});
        std::vector<Rational> params(14);
        params[12] = Rational(1);
        Rational v = minus_trace_form(bracket(x, y), g2_elem(params));
        return v == Rational(-6) ? ok("prop-p.pairing", "value -6")
                                 : bad("prop-p.pairing", "value " + v.str());
      });
  add("prop-p.falsify", "\"a pair with an intermediate subalgebra violates (P')\"",
      "construct x in f-perp, y in f and exhibit a nonzero bracket with zero k-part", 200,
      [](const RunConfig& cfg) {
        auto v = curv::property_P_test(active_catalog().pair("0<su2"), curv::PMode::Falsify,
                                       budget_or(cfg, 200), cfg.seed, cfg.exec);
        return v.counterexample ? ok("prop-p.falsify", "counterexample found")
                                : bad("prop-p.falsify", "inconclusive");
      });
  add("ric2.spin8-g2", "\"the normal homogeneous metric on spin8/g2 has Ric_2 > 0\"",
      "k = 1 + 1 + 1 - 1 = 2; flat-frame falsification search must fail", 20000,
      [](const RunConfig& cfg) {
        curv::DeformedMetric dm(active_catalog().triple("g2<so7<so8"), std::nullopt);
        auto cert = curv::ric_k_certificate(dm, 1, 1, 1, budget_or(cfg, 20000), cfg.seed,
                                            cfg.exec);
        return cert.falsified ? bad("ric2.spin8-g2", "flat frame found")
                              : ok("ric2.spin8-g2", "no flat 3-frame in " +
                                                        std::to_string(cert.samples) + " samples");
      });
  add("ric2.spin7-su3", "\"the submersion metrics q_t on spin7/su3 have Ric_2 > 0\"",
      "same certificate at t = 1", 20000, [](const RunConfig& cfg) {
        curv::DeformedMetric dm(active_catalog().triple("su3<g2<so7"), Rational(1));
        auto cert = curv::ric_k_certificate(dm, 1, 1, 1, budget_or(cfg, 20000), cfg.seed,
                                            cfg.exec);
        return cert.falsified ? bad("ric2.spin7-su3", "flat frame found")
                              : ok("ric2.spin7-su3", "no flat 3-frame in " +
                                                         std::to_string(cert.samples) + " samples");
      });
  add("ric2.product-falsified", "\"a split triple fails the too-small certificate\"",
      "the search must produce an exact commuting frame", 3000, [](const RunConfig& cfg) {
        curv::DeformedMetric dm(active_catalog().triple("0+so3<so3+so3<so3+so4"),
                                Rational(1));
        auto cert = curv::ric_k_certificate(dm, 1, 1, 1, budget_or(cfg, 3000), cfg.seed,
                                            cfg.exec);
        return cert.falsified ? ok("ric2.product-falsified", "exact flat frame exhibited")
                              : bad("ric2.product-falsified", "no frame found");
      });
  add("curv.witness-plane", "\"the plane spanned by M(e3) and A(e1) is flat in spin8/g2\"",
      "exact zero of the normal sectional curvature", 0, [](const RunConfig&) {
        using namespace lie::builders;
        const auto& tri = active_catalog().triple("g2<so7<so8").triple;
        VecQ e3(7), e1(7);
        e3[2] = Rational(1);
        e1[0] = Rational(1);
        VecQ x = tri.g().coords(M_vector(e3));
        VecQ y = tri.g().coords(direct_sum(A_perp(e1), MatQ::zero(1, 1)));
        Rational s = curv::normal_sec(x, y, tri);
        return s.is_zero() ? ok("curv.witness-plane", "sec = 0 exactly")
                           : bad("curv.witness-plane", "sec = " + s.str());
      });
  add("curv.ric2-positivity", "\"sampled orthonormal triples on spin8/g2 have positive "
      "Ric_2 sums\"",
      "float scan with a positive margin", 20000, [](const RunConfig& cfg) {
        const auto& tri = active_catalog().triple("g2<so7<so8").triple;
        curv::FrameSampler fs(tri);
        long long n = budget_or(cfg, 20000);
        std::vector<double> mins(size_t(n), 0.0);
        scan_apply(
            std::uint64_t(n),
            [&](std::uint64_t i) {
              auto t = fs.random_orthonormal_triple(cfg.seed, i);
              mins[i] = fs.sec_float(t[0], t[1]) + fs.sec_float(t[0], t[2]);
            },
            cfg.exec);
        double lo = 1e300;
        for (double v : mins) lo = std::min(lo, v);
        return lo > 1e-9 ? ok("curv.ric2-positivity",
                              "min sum " + std::to_string(lo) + " over " + std::to_string(n))
                         : bad("curv.ric2-positivity", "nonpositive sum sampled");
      });

  // ---- triality and freeness ------------------------------------------------
  add("triality.finite", "\"(sigma, sigma, sigma) and (-I, I, -I) satisfy the triality "
      "relation\"",
      "64-pair checks", 0, [](const RunConfig&) {
        MatQ id = MatQ::identity(8);
        MatQ neg = Rational(-1) * id;
        MatQ s(8, 8);
        for (int i = 0; i < 8; ++i) s.at(i, i) = Rational(i % 2 == 0 ? 1 : -1);
        if (!spin::triality_check(neg, id, neg)) return bad("triality.finite", "(-I, I, -I)");
        if (!spin::triality_check(s, s, s)) return bad("triality.finite", "(sigma)^3");
        return ok("triality.finite", "both pass");
      });
  add("triality.torus", "\"maximal torus elements satisfy the triality relation exactly\"",
      "random exact circle points through the 64-pair check", 100,
      [](const RunConfig& cfg) {
        Rng rng(cfg.seed);
        long long n = budget_or(cfg, 100);
        for (long long t = 0; t < n; ++t) {
          std::array<CirclePoint, 4> alpha;
          for (auto& a : alpha) {
            long long p = rng.uniform(-9, 9), q = rng.uniform(-9, 9);
            if (p == 0 && q == 0) p = 1;
            a = CirclePoint::from_pair(p, q);
          }
          try {
            spin::torus_element(alpha);
          } catch (const std::exception&) {
            return bad("triality.torus", "construction failed");
          }
        }
        return ok("triality.torus", std::to_string(n) + " exact torus points");
      });
  add("triality.lifts", "\"the stated diagonal lifts project back to their rotations\"",
      "lift coefficients for the theta-propositions and the table rows", 0,
      [](const RunConfig&) {
        auto l1 = spin::lift_C_diagonal({0, 0, 2, 0}, CirclePoint::from_pair(3, 1));
        if (l1.a_coeff != std::array<long long, 4>{1, -1, 1, 1})
          return bad("triality.lifts", "theta3 lift");
        auto l2 = spin::lift_C_diagonal({4, 2, 0, 0}, CirclePoint::from_pair(3, 2));
        if (l2.a_coeff != std::array<long long, 4>{-1, -1, -3, 3} ||
            l2.b_coeff != std::array<long long, 4>{-3, 3, 1, -1})
          return bad("triality.lifts", "(4,2,0,0) lift");
        return ok("triality.lifts", "projection recovered exactly");
      });
  add("table2.rows", "\"the enumeration of subgroups isomorphic to su2 or so3 has nine rows "
      "with exactly two free\"",
      "weights, lifts, gcd witnesses and verdicts per partition", 0, [](const RunConfig&) {
        auto rows = spin::su2_table();
        if (rows.size() != 9) return bad("table2.rows", "row count");
        int free = 0;
        for (const auto& r : rows) free += r.free;
        if (free != 2) return bad("table2.rows", "free count " + std::to_string(free));
        if (!rows[3].free || !rows[4].free) return bad("table2.rows", "wrong free rows");
        return ok("table2.rows", "9 rows, free rows 4 and 5");
      });
  add("free.gcd-criterion", "\"a circle acts freely iff every gcd(l_i, r_j) equals one\"",
      "known free and non-free patterns", 0, [](const RunConfig&) {
        using spin::CirclePattern;
        if (!spin::is_free_circle(CirclePattern::from_n({0, 2, -1, 1})))
          return bad("free.gcd-criterion", "headline pattern");
        if (!spin::is_free_circle(CirclePattern::from_n({1, 1, 1, 3})))
          return bad("free.gcd-criterion", "(1,1,1,3)");
        if (spin::is_free_circle(CirclePattern::from_n({-1, 3, -3, 3})))
          return bad("free.gcd-criterion", "table row one must fail");
        return ok("free.gcd-criterion", "examples verified");
      });
  add("free.infinitude", "\"infinitely many free circles: the (1,1,1,k) family is free for "
      "k = 3 mod 6\"",
      "scan the family", 0, [](const RunConfig&) {
        for (long long k = 3; k <= 99; k += 6)
          if (!spin::is_free_circle(spin::CirclePattern::from_n({1, 1, 1, k})))
            return bad("free.infinitude", "k = " + std::to_string(k));
        return ok("free.infinitude", "k = 3, 9, ..., 99 all free");
      });
  add("finite.z2zd", "\"the Z2 x Z_d subgroup acts freely on both sphere products for every "
      "d\"",
      "congruence freeness for d = 1..50 in both variants", 50, [](const RunConfig& cfg) {
        auto p = spin::CirclePattern::from_n({0, 2, -1, 1});
        long long dmax = budget_or(cfg, 50);
        for (long long d = 1; d <= dmax; ++d) {
          if (!spin::finite_action_free(p, d, true, false))
            return bad("finite.z2zd", "d = " + std::to_string(d) + " on S7xS7");
          if (!spin::finite_action_free(p, d, true, true))
            return bad("finite.z2zd", "d = " + std::to_string(d) + " on S6xS7");
        }
        return ok("finite.z2zd", "d = 1.." + std::to_string(dmax) + ", both variants");
      });

  // ---- topology ---------------------------------------------------------------
  add("p1.family", "\"p1 of the (1,1,1,k) quotient is 4(k^2+5)\"",
      "symbolic expansion plus numeric scan to k = 99", 0, [](const RunConfig&) {
        Poly k = Poly::variable(0, 1), one = Poly::constant(Rational(1));
        Poly two = Poly::constant(Rational(2)), three = Poly::constant(Rational(3));
        Poly sum;
        for (const Poly& x : {one, two + k, two - k, one}) sum += x * x;
        for (const Poly& x : {one, k, -k, three}) sum += x * x;
        Poly expect = Poly::constant(Rational(4)) * (k * k + Poly::constant(Rational(5)));
        if (!(sum == expect)) return bad("p1.family", "symbolic mismatch");
        for (long long kk = 3; kk <= 99; kk += 6)
          if (topo::p1_circle(spin::CirclePattern::from_n({1, 1, 1, kk})) != 4 * (kk * kk + 5))
            return bad("p1.family", "k = " + std::to_string(kk));
        return ok("p1.family", "4(k^2+5) symbolically and to k = 99");
      });
  add("p1.mod8", "\"p1 of every free circle quotient is divisible by 8\"",
      "enumerate free patterns and reduce", 6, [](const RunConfig& cfg) {
        int bound = int(budget_or(cfg, 6));
        auto list = spin::enumerate_free_circles(bound, cfg.exec);
        for (const auto& e : list)
          if (e.p1 % 8 != 0) return bad("p1.mod8", "pattern violates divisibility");
        return ok("p1.mod8", std::to_string(list.size()) + " patterns at bound " +
                                 std::to_string(bound));
      });
  add("p1.su2", "\"the su2 quotients have p1 = 4 up to sign\"", "closed form with the root "
      "correction", 0, [](const RunConfig&) {
        if (topo::p1_su2_s7s7() != 4) return bad("p1.su2", "value");
        if (topo::p1_su2_s6s7() != 4) return bad("p1.su2", "s6 value");
        return ok("p1.su2", "both 4");
      });
  add("p1.s6s7-circle", "\"the circle quotient of S6 x S7 has p1 = 8 up to sign\"",
      "restriction of the extending free circle", 0, [](const RunConfig&) {
        return topo::p1_circle_s6s7() == 8 ? ok("p1.s6s7-circle", "value 8")
                                           : bad("p1.s6s7-circle", "value");
      });
  add("p1.distinct", "\"infinitely many homeomorphism types: distinct p1 values appear\"",
      "count distinct values at bound 10", 10, [](const RunConfig& cfg) {
        int bound = int(budget_or(cfg, 10));
        std::set<long long> vals;
        for (const auto& e : spin::enumerate_free_circles(bound, cfg.exec)) vals.insert(e.p1);
        return vals.size() >= 5 ? ok("p1.distinct", std::to_string(vals.size()) +
                                                        " values at bound " +
                                                        std::to_string(bound))
                                : bad("p1.distinct", "too few values");
      });

  // ---- recorded constants ----------------------------------------------------
  add_const("const.isometry-groups",
            "\"the identity components of the isometry groups are spin8 and spin7\"",
            "recorded from the isometry classification; not re-derived");
  add_const("const.cohomology-rings",
            "\"the circle quotients carry the cohomology ring of S^k x CP3 and the su2 "
            "quotients that of S^k x S4\"",
            "recorded ring types attached to quotient reports; not re-derived");
  add_const("const.higher-pontryagin",
            "\"the Pontryagin classes p_i with i > 1 vanish for all quotients\"",
            "recorded vanishing flag attached to quotient reports; not re-derived");
}

const Registry& Registry::builtin() {
  static const Registry r;
  return r;
}

const ClaimRecord& Registry::claim(const std::string& id) const {
  auto it = claims_.find(id);
  if (it == claims_.end()) throw std::invalid_argument("unknown claim id " + id);
  return it->second;
}

ClaimResult Registry::run_claim(const std::string& id, const RunConfig& cfg) const {
  const auto& rec = claim(id);
  auto start = std::chrono::steady_clock::now();
  ClaimResult res = rec.run(cfg);
  res.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

std::vector<ClaimResult> Registry::run_all(const RunConfig& cfg) const {
  std::vector<ClaimResult> out;
  for (const auto& id : order_) out.push_back(run_claim(id, cfg));
  return out;
}

std::string Registry::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& id : order_) {
    const auto& rec = claims_.at(id);
    nlohmann::json c;
    c["id"] = rec.id;
    c["statement"] = rec.statement;
    c["plan"] = rec.plan;
    c["computational"] = rec.computational;
    if (rec.default_budget > 0) c["default_budget"] = rec.default_budget;
    claims.push_back(c);
  }
  j["claims"] = claims;
  return j.dump(2);
}

}  // namespace fatlab::reg
