#include "fatlab/topology.hpp"

#include <json.hpp>

#include <stdexcept>

namespace fatlab::topo {

using spin::CirclePattern;

long long p1_circle(const CirclePattern& p) {
  if (!spin::is_free_circle(p))
    throw std::invalid_argument("p1_circle: pattern does not act freely");
  return p.sum_of_squares();
}

long long p1_su2_s7s7() {
  // the 2+2+2+2 row realizes the unique free su2 action; its lift pattern has
  // sum of squares 8, and the extra positive root of su2 removes 4
  auto row = spin::su2_table_row({2, 2, 2, 2});
  if (!row.free) throw std::logic_error("p1_su2: the 2+2+2+2 action must be free");
  return row.pattern.sum_of_squares() - 4;
}

long long p1_su2_s6s7() { return p1_su2_s7s7(); }

long long p1_circle_s6s7() {
  // the unique free circle on S6 x S7 extends to the free circle on S7 x S7
  // with speeds l = (0,0,0,2), r = (-1,1,1,1); codimension-one restriction
  // preserves p1
  CirclePattern p = CirclePattern::from_n({0, 2, -1, 1});
  return p1_circle(p);
}

HomotopyVerdict homotopy_obstruction(long long a, long long b) {
  HomotopyVerdict v;
  auto m24 = [](long long x) { return ((x % 24) + 24) % 24; };
  v.distinct_homotopy = m24(a) != m24(b);
  v.distinct_homeo_hint = (a < 0 ? -a : a) != (b < 0 ? -b : b);
  return v;
}

namespace {

// mod-24 inequality robust to the sign ambiguity on both sides
bool distinct_mod24_all_signs(long long a, long long b) {
  auto m24 = [](long long x) { return ((x % 24) + 24) % 24; };
  for (long long sa : {a, -a})
    for (long long sb : {b, -b})
      if (m24(sa) == m24(sb)) return false;
  return true;
}

}  // namespace

QuotientReport quotient_report(const QuotientDescriptor& q) {
  using Base = QuotientDescriptor::Base;
  using Group = QuotientDescriptor::Group;
  QuotientReport rep;
  rep.space = q.base == Base::S7xS7 ? "S7xS7" : "S6xS7";

  const bool s6 = q.base == Base::S6xS7;
  switch (q.group) {
    case Group::Circle: {
      if (!q.pattern) throw std::invalid_argument("quotient_report: circle needs a pattern");
      if (!spin::is_free_circle(*q.pattern))
        throw std::invalid_argument("quotient_report: pattern does not act freely");
      if (s6 && q.pattern->n[0] != 0)
        throw std::invalid_argument(
            "quotient_report: circles acting on S6xS7 have vanishing first parameter");
      rep.group = "S1";
      rep.pattern_n = q.pattern->n;
      rep.p1 = s6 ? p1_circle_s6s7() : p1_circle(*q.pattern);
      rep.ring_type = s6 ? "S6 x CP3" : "S7 x CP3";
      rep.pi1 = "0";
      long long model = 4;  // p1 of S^k x CP3 is 4 times a generator
      if (distinct_mod24_all_signs(*rep.p1, model))
        rep.verdicts.push_back("not homotopy equivalent to " + rep.ring_type +
                               " (p1 differs mod 24)");
      break;
    }
    case Group::Su2: {
      rep.group = "SU2";
      rep.p1 = s6 ? p1_su2_s6s7() : p1_su2_s7s7();
      rep.ring_type = s6 ? "S6 x S4" : "S7 x S4";
      rep.pi1 = "0";
      long long model = 0;  // S^k x S^4 is stably parallelizable
      if (distinct_mod24_all_signs(*rep.p1, model))
        rep.verdicts.push_back("not homotopy equivalent to " + rep.ring_type +
                               " (p1 differs mod 24)");
      break;
    }
    case Group::Finite: {
      if (!q.pattern) throw std::invalid_argument("quotient_report: finite needs a pattern");
      if (!spin::finite_action_free(*q.pattern, q.finite_d, q.twist_on_first, s6))
        throw std::invalid_argument("quotient_report: finite action is not free");
      rep.group = "Z2xZ" + std::to_string(q.finite_d);
      rep.pattern_n = q.pattern->n;
      rep.pi1 = "Z2 x Z" + std::to_string(q.finite_d);
      const std::string fiber = s6 ? "RP6" : "RP7";
      if (q.finite_d == 1)
        rep.ring_type = fiber + " x S7";
      else if (q.finite_d == 2)
        rep.ring_type = fiber + " x RP7";
      else
        rep.ring_type = fiber + "-bundle over L_" + std::to_string(q.finite_d);
      rep.verdicts.push_back("fundamental group Z2 x Z" + std::to_string(q.finite_d) +
                             "; no metric of positive sectional curvature");
      break;
    }
  }
  if (rep.p1) rep.p1_mod24 = int(((*rep.p1 % 24) + 24) % 24);
  return rep;
}

std::string QuotientReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["space"] = space;
  j["group"] = group;
  if (pattern_n) j["pattern"] = *pattern_n;
  if (p1) j["p1"] = *p1;
  if (p1_mod24) j["p1_mod24"] = *p1_mod24;
  j["p1_sign_ambiguous"] = p1_sign_ambiguous;
  j["ring_type"] = ring_type;
  j["higher_pontryagin_vanish"] = higher_pontryagin_vanish;
  j["pi1"] = pi1;
  j["verdicts"] = verdicts;
  return j.dump(2);
}

}  // namespace fatlab::topo
