#pragma once

#include "fatlab/liealg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fatlab::lie {

/// A shipped triple with its trusted hints and expectations.
struct TripleRecord {
  TriplePresentation triple;
  Hints f_hints_x_in_p;  ///< x in p, centralizers in m
  Hints f_hints_y_in_m;  ///< y in m, centralizers in p
  std::optional<int> f_claimed;
  bool base_pair_P = false;
  int base_pair_type = 0;  ///< row of the b=1 pair table, 0 when none
};

/// A shipped pair with its trusted hints and expectations.
struct PairRecord {
  PairPresentation pair;
  Hints b_hints;
  std::optional<int> b_claimed;       ///< exact value when the table pins one
  std::optional<int> b_lower_claimed; ///< claimed lower bound otherwise
  bool property_P = false;
  /// Optional intermediate subalgebra h < f < g (g coordinates), used by the
  /// Property (P') falsifier.
  std::vector<VecQ> intermediate;
};

/// Classification case discharged by dimension counting alone.
struct DimCaseRecord {
  std::string label;
  std::string description;
  int dim_m = 0, dim_p = 0;
};

/// Row of the table of reduced pairs with b = 1.
struct PairTypeRow {
  int type;
  std::string space;
  std::string chain;
  bool property_P;
};

const std::vector<PairTypeRow>& b1_pair_table();

/// Built-in presentations for every algebra the verification suite touches.
class Catalog {
public:
  static const Catalog& builtin();

  const TripleRecord& triple(const std::string& name) const;
  const PairRecord& pair(const std::string& name) const;
  const DimCaseRecord& dim_case(const std::string& label) const;

  std::vector<std::string> triple_names() const;
  std::vector<std::string> pair_names() const;
  std::vector<std::string> dim_case_names() const;

  /// The metric-scaled variant family used by the metric-independence checks:
  /// the diagonal so3 triple with so4-ideal scale t.
  static TripleRecord scaled_diag_so3_triple(const Rational& t);

private:
  Catalog();
  struct FromDirTag {};
  Catalog(FromDirTag, const std::string& dir);
  friend const Catalog& active_catalog();
  friend void set_preset_dir(const std::string& dir);

  std::map<std::string, TripleRecord> triples_;
  std::map<std::string, PairRecord> pairs_;
  std::map<std::string, DimCaseRecord> dim_cases_;
};

/// Presentation file body, schema {name, ambient_dim, basis (row-major
/// rational strings), ideal_blocks, metric_scales}.
std::string algebra_to_json(const AlgebraPresentation& g);
AlgebraPresentation algebra_from_json(const std::string& body);

/// Writes the full catalog under dir: algebras/, triples/, pairs/, cases.json.
void dump_catalog(const std::string& dir);

/// The catalog in use: the builtin one, or the directory selected through
/// set_preset_dir (the CLI wires --presets and FATLAB_PRESETS here).  Loaded
/// presets revalidate every presentation invariant.
const Catalog& active_catalog();
void set_preset_dir(const std::string& dir);

}  // namespace fatlab::lie
