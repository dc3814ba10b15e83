#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatlab/liealg.hpp"
#include "fatlab/presets.hpp"

#include <cstdio>
#include <filesystem>

using namespace fatlab;
using namespace fatlab::lie;

TEST_CASE("algebra presentation JSON round-trip") {
  const auto& g = Catalog::builtin().triple("su3<g2<so7").triple.g();
  std::string body = algebra_to_json(g);
  CHECK(body.find("\"ambient_dim\": 7") != std::string::npos);
  CHECK(body.find("\"metric_scales\"") != std::string::npos);
  AlgebraPresentation back = algebra_from_json(body);  // revalidates everything
  CHECK(back.dim() == g.dim());
  CHECK(back.gram() == g.gram());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) CHECK(back.structure(i, j) == g.structure(i, j));
}

TEST_CASE("scaled metrics survive the round-trip") {
  auto rec = Catalog::scaled_diag_so3_triple(Rational(5));
  std::string body = algebra_to_json(rec.triple.g());
  AlgebraPresentation back = algebra_from_json(body);
  CHECK(back.metric_scales().size() == 2);
  CHECK(back.metric_scales()[1] == Rational(5));
}

TEST_CASE("catalog dump and reload reproduces every preset") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fatlab_preset_roundtrip";
  fs::remove_all(dir);
  dump_catalog(dir.string());

  set_preset_dir(dir.string());  // full validation runs on load
  const Catalog& loaded = active_catalog();
  const Catalog& builtin = Catalog::builtin();

  REQUIRE(loaded.triple_names() == builtin.triple_names());
  REQUIRE(loaded.pair_names() == builtin.pair_names());
  REQUIRE(loaded.dim_case_names() == builtin.dim_case_names());

  for (const auto& name : builtin.triple_names()) {
    const auto& a = loaded.triple(name);
    const auto& b = builtin.triple(name);
    CHECK(a.triple.dim_m() == b.triple.dim_m());
    CHECK(a.triple.dim_p() == b.triple.dim_p());
    CHECK(a.triple.m_basis() == b.triple.m_basis());
    CHECK(a.triple.p_basis() == b.triple.p_basis());
    CHECK(a.f_claimed == b.f_claimed);
    CHECK(a.base_pair_P == b.base_pair_P);
    CHECK(a.f_hints_x_in_p.size() == b.f_hints_x_in_p.size());
    CHECK(a.f_hints_y_in_m.size() == b.f_hints_y_in_m.size());
  }
  for (const auto& name : builtin.pair_names()) {
    const auto& a = loaded.pair(name);
    const auto& b = builtin.pair(name);
    CHECK(a.pair.hperp_basis == b.pair.hperp_basis);
    CHECK(a.b_claimed == b.b_claimed);
    CHECK(a.b_hints.size() == b.b_hints.size());
    CHECK(a.intermediate == b.intermediate);
  }

  // a loaded preset drives the same certified computation
  const auto& rec = loaded.triple("su3<g2<so7");
  auto rep = compute_f(rec.triple, rec.f_hints_x_in_p, rec.f_hints_y_in_m, 100, 3, rec.f_claimed);
  CHECK(rep.status == CertStatus::Certified);
  CHECK(rep.certified_lower == 1);

  fs::remove_all(dir);
}

TEST_CASE("loading a missing directory fails cleanly") {
  CHECK_THROWS(set_preset_dir("/nonexistent/fatlab-presets"));
}
