#include "fatlab/presets.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace fatlab::lie {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json vec_to_json(const VecQ& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

VecQ vec_from_json(const json& a) {
  VecQ v;
  for (const auto& x : a) v.push_back(Rational::parse(x.get<std::string>()));
  return v;
}

json vecs_to_json(const std::vector<VecQ>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_to_json(v));
  return a;
}

std::vector<VecQ> vecs_from_json(const json& a) {
  std::vector<VecQ> out;
  for (const auto& v : a) out.push_back(vec_from_json(v));
  return out;
}

json hint_to_json(const WitnessHint& h) {
  json j;
  switch (h.kind) {
    case WitnessHint::Kind::ExplicitVector: j["kind"] = "explicit_vector"; break;
    case WitnessHint::Kind::Slice: j["kind"] = "slice"; break;
    case WitnessHint::Kind::TransitivityClaim: j["kind"] = "transitivity_claim"; break;
  }
  if (!h.vectors.empty()) j["vectors"] = vecs_to_json(h.vectors);
  if (!h.slice_vectors.empty()) {
    j["slice_vectors"] = vecs_to_json(h.slice_vectors);
    j["slice_vars"] = h.slice_vars;
  }
  if (h.claimed >= 0) j["claimed"] = h.claimed;
  j["provenance"] = h.provenance;
  return j;
}

WitnessHint hint_from_json(const json& j) {
  WitnessHint h;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit_vector") h.kind = WitnessHint::Kind::ExplicitVector;
  else if (kind == "slice") h.kind = WitnessHint::Kind::Slice;
  else if (kind == "transitivity_claim") h.kind = WitnessHint::Kind::TransitivityClaim;
  else throw std::invalid_argument("unknown hint kind " + kind);
  if (j.contains("vectors")) h.vectors = vecs_from_json(j["vectors"]);
  if (j.contains("slice_vectors")) {
    h.slice_vectors = vecs_from_json(j["slice_vectors"]);
    h.slice_vars = j.at("slice_vars").get<std::vector<std::string>>();
  }
  if (j.contains("claimed")) h.claimed = j["claimed"].get<int>();
  h.provenance = j.value("provenance", "");
  return h;
}

json hints_to_json(const Hints& hs) {
  json a = json::array();
  for (const auto& h : hs) a.push_back(hint_to_json(h));
  return a;
}

Hints hints_from_json(const json& a) {
  Hints out;
  for (const auto& h : a) out.push_back(hint_from_json(h));
  return out;
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '<') out += "_in_";
    else if (c == '+') out += "_plus_";
    else if (c == '@') out += "_at_";
    else out += c;
  }
  return out;
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << body << "\n";
}

std::string read_file(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::string body((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return body;
}

}  // namespace

std::string algebra_to_json(const AlgebraPresentation& g) {
  json j;
  j["schema"] = 1;
  j["name"] = g.name();
  j["ambient_dim"] = g.ambient_dim();
  json basis = json::array();
  for (const auto& b : g.basis()) {
    json row = json::array();
    for (int i = 0; i < b.rows(); ++i)
      for (int c = 0; c < b.cols(); ++c) row.push_back(b.at(i, c).str());
    basis.push_back(row);
  }
  j["basis"] = basis;
  j["ideal_blocks"] = g.ideal_blocks();
  json scales = json::array();
  for (const auto& s : g.metric_scales()) scales.push_back(s.str());
  j["metric_scales"] = scales;
  return j.dump(2);
}

AlgebraPresentation algebra_from_json(const std::string& body) {
  json j = json::parse(body);
  int n = j.at("ambient_dim").get<int>();
  std::vector<MatQ> basis;
  for (const auto& row : j.at("basis")) {
    if (int(row.size()) != n * n)
      throw std::invalid_argument("algebra_from_json: bad basis row length");
    MatQ m(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) m.at(i, c) = Rational::parse(row[idx++].get<std::string>());
    basis.push_back(std::move(m));
  }
  std::vector<Rational> scales;
  for (const auto& s : j.at("metric_scales")) scales.push_back(Rational::parse(s.get<std::string>()));
  return AlgebraPresentation(j.at("name").get<std::string>(), n, std::move(basis),
                             j.at("ideal_blocks").get<std::vector<std::vector<int>>>(),
                             std::move(scales));
}

void dump_catalog(const std::string& dir) {
  const Catalog& cat = Catalog::builtin();
  fs::create_directories(fs::path(dir) / "algebras");
  fs::create_directories(fs::path(dir) / "triples");
  fs::create_directories(fs::path(dir) / "pairs");

  std::map<std::string, std::string> algebras;  // name -> body
  auto remember = [&](const AlgebraPresentation& g) {
    algebras.emplace(g.name(), algebra_to_json(g));
  };

  for (const auto& name : cat.triple_names()) {
    const auto& rec = cat.triple(name);
    remember(rec.triple.g());
    json j;
    j["schema"] = 1;
    j["name"] = name;
    j["algebra"] = rec.triple.g().name();
    j["k_basis"] = vecs_to_json(rec.triple.k_basis());
    j["h_basis"] = vecs_to_json(rec.triple.h_basis());
    j["hints_x_in_p"] = hints_to_json(rec.f_hints_x_in_p);
    j["hints_y_in_m"] = hints_to_json(rec.f_hints_y_in_m);
    if (rec.f_claimed) j["f_claimed"] = *rec.f_claimed;
    j["base_pair_P"] = rec.base_pair_P;
    j["base_pair_type"] = rec.base_pair_type;
    write_file(fs::path(dir) / "triples" / (sanitize(name) + ".json"), j.dump(2));
  }
  for (const auto& name : cat.pair_names()) {
    const auto& rec = cat.pair(name);
    remember(rec.pair.g);
    json j;
    j["schema"] = 1;
    j["name"] = name;
    j["algebra"] = rec.pair.g.name();
    j["h_basis"] = vecs_to_json(rec.pair.h_basis);
    j["b_hints"] = hints_to_json(rec.b_hints);
    if (rec.b_claimed) j["b_claimed"] = *rec.b_claimed;
    if (rec.b_lower_claimed) j["b_lower_claimed"] = *rec.b_lower_claimed;
    j["property_P"] = rec.property_P;
    if (!rec.intermediate.empty()) j["intermediate"] = vecs_to_json(rec.intermediate);
    write_file(fs::path(dir) / "pairs" / (sanitize(name) + ".json"), j.dump(2));
  }
  for (const auto& [name, body] : algebras)
    write_file(fs::path(dir) / "algebras" / (sanitize(name) + ".json"), body);

  json cases = json::array();
  for (const auto& label : cat.dim_case_names()) {
    const auto& c = cat.dim_case(label);
    cases.push_back({{"label", c.label},
                     {"description", c.description},
                     {"dim_m", c.dim_m},
                     {"dim_p", c.dim_p}});
  }
  json top;
  top["schema"] = 1;
  top["cases"] = cases;
  write_file(fs::path(dir) / "cases.json", top.dump(2));

  json table = json::array();
  for (const auto& row : b1_pair_table())
    table.push_back({{"type", row.type},
                     {"space", row.space},
                     {"chain", row.chain},
                     {"property_P", row.property_P}});
  json ptop;
  ptop["schema"] = 1;
  ptop["rows"] = table;
  write_file(fs::path(dir) / "pairs_table.json", ptop.dump(2));
}

Catalog::Catalog(FromDirTag, const std::string& dir) {
  std::map<std::string, std::string> algebra_bodies;
  for (const auto& entry : fs::directory_iterator(fs::path(dir) / "algebras")) {
    if (entry.path().extension() != ".json") continue;
    std::string body = read_file(entry.path());
    std::string name = json::parse(body).at("name").get<std::string>();
    algebra_bodies.emplace(std::move(name), std::move(body));
  }
  auto make_algebra = [&](const std::string& name) {
    auto it = algebra_bodies.find(name);
    if (it == algebra_bodies.end())
      throw std::invalid_argument("preset directory lacks algebra " + name);
    return algebra_from_json(it->second);
  };

  for (const auto& entry : fs::directory_iterator(fs::path(dir) / "triples")) {
    if (entry.path().extension() != ".json") continue;
    json j = json::parse(read_file(entry.path()));
    std::string name = j.at("name").get<std::string>();
    TriplePresentation tri(name, make_algebra(j.at("algebra").get<std::string>()),
                           vecs_from_json(j.at("k_basis")), vecs_from_json(j.at("h_basis")));
    TripleRecord rec{std::move(tri), hints_from_json(j.value("hints_x_in_p", json::array())),
                     hints_from_json(j.value("hints_y_in_m", json::array())), std::nullopt,
                     j.value("base_pair_P", false), j.value("base_pair_type", 0)};
    if (j.contains("f_claimed")) rec.f_claimed = j["f_claimed"].get<int>();
    triples_.emplace(name, std::move(rec));
  }
  for (const auto& entry : fs::directory_iterator(fs::path(dir) / "pairs")) {
    if (entry.path().extension() != ".json") continue;
    json j = json::parse(read_file(entry.path()));
    std::string name = j.at("name").get<std::string>();
    PairPresentation pp(name, make_algebra(j.at("algebra").get<std::string>()),
                        vecs_from_json(j.at("h_basis")));
    PairRecord rec{std::move(pp), hints_from_json(j.value("b_hints", json::array())),
                   std::nullopt, std::nullopt, j.value("property_P", false), {}};
    if (j.contains("b_claimed")) rec.b_claimed = j["b_claimed"].get<int>();
    if (j.contains("b_lower_claimed")) rec.b_lower_claimed = j["b_lower_claimed"].get<int>();
    if (j.contains("intermediate")) rec.intermediate = vecs_from_json(j["intermediate"]);
    pairs_.emplace(name, std::move(rec));
  }
  json cases = json::parse(read_file(fs::path(dir) / "cases.json"));
  for (const auto& c : cases.at("cases"))
    dim_cases_.emplace(c.at("label").get<std::string>(),
                       DimCaseRecord{c.at("label").get<std::string>(),
                                     c.at("description").get<std::string>(),
                                     c.at("dim_m").get<int>(), c.at("dim_p").get<int>()});
}

namespace {
std::unique_ptr<Catalog> g_loaded;
}

const Catalog& active_catalog() { return g_loaded ? *g_loaded : Catalog::builtin(); }

void set_preset_dir(const std::string& dir) {
  g_loaded = std::unique_ptr<Catalog>(new Catalog(Catalog::FromDirTag{}, dir));
}

}  // namespace fatlab::lie
