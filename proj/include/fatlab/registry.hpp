#pragma once

#include "fatlab/parallel.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fatlab::reg {

struct RunConfig {
  std::uint64_t seed = 2024;
  long long budget = 0;  ///< 0: use each claim's default budget
  Exec exec = default_exec();
};

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string status;  ///< "pass", "fail", "lower-bound", or "constant"
  std::string detail;
  double millis = 0;
};

/// One verifiable claim: an identifier, the quoted statement it checks, a
/// plan description, and an executable check.  Claims whose source is
/// prose-only are registered as non-computational constants so coverage
/// accounting stays explicit.
struct ClaimRecord {
  std::string id;
  std::string statement;  ///< carries the claim text in double quotes
  std::string plan;
  bool computational = true;
  long long default_budget = 0;
  std::function<ClaimResult(const RunConfig&)> run;
};

class Registry {
public:
  static const Registry& builtin();

  const ClaimRecord& claim(const std::string& id) const;
  bool has(const std::string& id) const { return claims_.count(id) != 0; }
  const std::vector<std::string>& ids() const { return order_; }

  ClaimResult run_claim(const std::string& id, const RunConfig& cfg) const;
  std::vector<ClaimResult> run_all(const RunConfig& cfg) const;

  /// Shipped registry file body (JSON) listing every claim.
  std::string to_json() const;

private:
  Registry();
  std::map<std::string, ClaimRecord> claims_;
  std::vector<std::string> order_;
};

/// One case of the f = 1 classification replay.
struct CaseEntry {
  std::string label;
  std::string description;
  std::string route;     ///< "dimension", "witness", or "ideal-split"
  std::string expected;  ///< "eq1", "gt1", or "eq3"
  bool survivor = false;
  std::string triple_preset;  ///< backing matrix model, when the route needs one
  int dim_m = 0, dim_p = 0;   ///< dimension-route data
};

struct CaseOutcome {
  CaseEntry entry;
  bool pass = false;
  std::string detail;
};

struct CaseTable {
  std::vector<CaseOutcome> rows;
  std::vector<std::string> survivors;
  bool all_pass = false;
};

const std::vector<CaseEntry>& classification_cases();

/// Replays the classification: dimension obstructions, witness computations,
/// and ideal-splitting, case by case.  Exactly six triples survive.
CaseTable classify_triples(const RunConfig& cfg = {});

}  // namespace fatlab::reg
