#pragma once

#include "fatlab/spin.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fatlab::topo {

/// First Pontryagin class of the circle quotient of S7 x S7: the sum of the
/// squared rotation speeds, reported as the nonnegative representative (the
/// sign is not pinned).  Requires a free pattern.
long long p1_circle(const spin::CirclePattern& p);

/// The unique su2 quotient of S7 x S7: sum of squares minus the 4 contributed
/// by the extra positive root, evaluated on the free lift.
long long p1_su2_s7s7();
/// The su2 quotient of S6 x S7 has the same value.
long long p1_su2_s6s7();
/// The unique circle quotient of S6 x S7.
long long p1_circle_s6s7();

struct HomotopyVerdict {
  bool distinct_homotopy = false;    ///< p1 differs mod 24
  bool distinct_homeo_hint = false;  ///< |p1| differs (rational p1 is a homeomorphism invariant)
};

HomotopyVerdict homotopy_obstruction(long long a, long long b);

struct QuotientDescriptor {
  enum class Base { S7xS7, S6xS7 };
  enum class Group { Circle, Su2, Finite };
  Base base = Base::S7xS7;
  Group group = Group::Circle;
  std::optional<spin::CirclePattern> pattern;  ///< circle and finite descriptors
  long long finite_d = 1;
  bool twist_on_first = true;
};

struct QuotientReport {
  std::string space;
  std::string group;
  std::optional<std::array<long long, 4>> pattern_n;
  std::optional<long long> p1;
  std::optional<int> p1_mod24;
  bool p1_sign_ambiguous = true;
  std::string ring_type;
  bool higher_pontryagin_vanish = true;  ///< stored fact for these quotients
  std::string pi1;
  std::vector<std::string> verdicts;

  std::string to_json() const;
};

/// Bundles the cohomology-type constant, p1, the higher-class vanishing flag,
/// the fundamental group, and mod-24 comparison verdicts against the model
/// product space.  Never asserts a homotopy equivalence, only inequivalence.
QuotientReport quotient_report(const QuotientDescriptor& q);

}  // namespace fatlab::topo
