// fatlab: batch verification and enumeration for the curvature toolkit.
//
// Subcommands: verify, enumerate, table2, p1, classify, dump-presets.
// Exit codes: 0 all pass, 1 a claim failed, 2 usage error.

#include "fatlab/presets.hpp"
#include "fatlab/registry.hpp"
#include "fatlab/spin.hpp"
#include "fatlab/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct Options {
  std::uint64_t seed = 2024;
  long long budget = 0;
  std::string format = "text";
  std::string presets;
  int threads = 0;  // 0: all cores, 1: serial reference path
};

int cmd_verify(const Options& opt, const std::vector<std::string>& ids) {
  fatlab::reg::RunConfig cfg;
  cfg.seed = opt.seed;
  cfg.budget = opt.budget;
  cfg.exec = fatlab::default_exec();
  const auto& reg = fatlab::reg::Registry::builtin();

  std::vector<std::string> selected = ids;
  if (selected.empty() || (selected.size() == 1 && selected[0] == "all"))
    selected = reg.ids();
  for (const auto& id : selected)
    if (!reg.has(id)) {
      std::cerr << "unknown claim id: " << id << "\n";
      return 2;
    }

  std::vector<fatlab::reg::ClaimResult> results;
  for (const auto& id : selected) results.push_back(reg.run_claim(id, cfg));

  int failed = 0;
  if (opt.format == "json") {
    json out;
    out["schema"] = 1;
    out["seed"] = opt.seed;
    json rows = json::array();
    for (const auto& r : results) {
      // timings stay out of the payload so repeated runs are byte-identical
      rows.push_back(
          {{"id", r.id}, {"pass", r.pass}, {"status", r.status}, {"detail", r.detail}});
      failed += !r.pass;
    }
    out["results"] = rows;
    out["failed"] = failed;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      failed += !r.pass;
      std::ostringstream line;
      line << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
      std::string pad(std::max<int>(1, 28 - int(r.id.size())), ' ');
      std::cout << line.str() << pad << r.detail << "\n";
    }
    std::cout << (failed == 0 ? "all claims pass" : std::to_string(failed) + " claim(s) failed")
              << " (" << results.size() << " run)\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_enumerate(const Options& opt, int bound, bool include_nonfree) {
  using fatlab::spin::CirclePattern;
  if (opt.format == "csv" || opt.format == "text") {
    std::cout << "n1,n2,n3,n4,l1,l2,l3,l4,r1,r2,r3,r4,free,p1\n";
  }
  json rows = json::array();
  auto emit = [&](const CirclePattern& p, bool free, std::optional<long long> p1) {
    if (opt.format == "json") {
      json j;
      j["n"] = p.n;
      j["l"] = p.l;
      j["r"] = p.r;
      j["free"] = free;
      if (p1) j["p1"] = *p1;
      rows.push_back(j);
      return;
    }
    std::ostringstream os;
    for (auto v : p.n) os << v << ",";
    for (auto v : p.l) os << v << ",";
    for (auto v : p.r) os << v << ",";
    os << (free ? "true" : "false") << ",";
    if (p1) os << *p1;
    std::cout << os.str() << "\n";
  };

  if (include_nonfree) {
    const long long side = 2LL * bound + 1;
    for (long long i = 0, total = side * side * side * side; i < total; ++i) {
      long long idx = i;
      std::array<long long, 4> n;
      for (int k = 3; k >= 0; --k) {
        n[k] = idx % side - bound;
        idx /= side;
      }
      long long g = 0;
      for (long long x : n) g = std::gcd(g, std::llabs(x));
      if (g != 1) continue;
      CirclePattern p = CirclePattern::from_n(n);
      bool free = fatlab::spin::is_free_circle(p);
      emit(p, free, free ? std::optional<long long>(p.sum_of_squares()) : std::nullopt);
    }
  } else {
    for (const auto& e : fatlab::spin::enumerate_free_circles(bound))
      emit(e.pattern, true, e.p1);
  }
  if (opt.format == "json") {
    json out;
    out["schema"] = 1;
    out["bound"] = bound;
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

std::string join4(const std::array<long long, 4>& a) {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) os << (i ? "," : "") << a[i];
  return os.str();
}

int cmd_table2(const Options& opt) {
  auto rows = fatlab::spin::su2_table();
  if (opt.format == "json") {
    json out;
    out["schema"] = 1;
    json jr = json::array();
    for (const auto& r : rows) {
      json j;
      j["partition"] = r.partition;
      j["torus_weights"] = r.torus_weights;
      j["lift_A"] = r.lift_a;
      j["lift_B"] = r.lift_b;
      j["free"] = r.free;
      if (r.witness.found) {
        j["gcd_witness"] = {{"i", r.witness.i},
                            {"j", r.witness.j},
                            {"value", r.witness.value},
                            {"undefined", r.witness.undefined}};
      }
      jr.push_back(j);
    }
    out["rows"] = jr;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "partition        f(S1)      A             B             gcd witness      free\n";
  for (const auto& r : rows) {
    std::ostringstream part;
    for (size_t i = 0; i < r.partition.size(); ++i) part << (i ? "+" : "") << r.partition[i];
    std::ostringstream wit;
    if (r.witness.found) {
      wit << "gcd(l" << r.witness.i << ",r" << r.witness.j << ") ";
      if (r.witness.undefined) wit << "undef";
      else wit << "= " << r.witness.value;
    } else {
      wit << "gcd = 1 always";
    }
    auto pad = [](std::string s, size_t w) {
      if (s.size() < w) s += std::string(w - s.size(), ' ');
      return s;
    };
    std::cout << pad(part.str(), 17) << pad("(" + join4(r.torus_weights) + ")", 11)
              << pad("(" + join4(r.lift_a) + ")", 14) << pad("(" + join4(r.lift_b) + ")", 14)
              << pad(wit.str(), 17) << (r.free ? "Yes" : "No") << "\n";
  }
  return 0;
}

int cmd_p1(const Options& opt, const std::string& pattern) {
  std::array<long long, 4> n{};
  std::stringstream ss(pattern);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 4) return 2;
    try {
      n[i++] = std::stoll(tok);
    } catch (...) {
      return 2;
    }
  }
  if (i != 4) return 2;
  try {
    auto p = fatlab::spin::CirclePattern::from_n(n);
    long long v = fatlab::topo::p1_circle(p);
    if (opt.format == "json") {
      json j;
      j["schema"] = 1;
      j["n"] = n;
      j["p1"] = v;
      j["sign_ambiguous"] = true;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << v << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int cmd_classify(const Options& opt) {
  fatlab::reg::RunConfig cfg;
  cfg.seed = opt.seed;
  cfg.budget = opt.budget;
  auto table = fatlab::reg::classify_triples(cfg);
  if (opt.format == "json") {
    json out;
    out["schema"] = 1;
    json rows = json::array();
    for (const auto& row : table.rows)
      rows.push_back({{"label", row.entry.label},
                      {"description", row.entry.description},
                      {"route", row.entry.route},
                      {"expected", row.entry.expected},
                      {"survivor", row.entry.survivor},
                      {"pass", row.pass},
                      {"detail", row.detail}});
    out["rows"] = rows;
    out["survivors"] = table.survivors;
    out["all_pass"] = table.all_pass;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : table.rows) {
      std::string label = row.entry.label;
      if (label.size() < 8) label += std::string(8 - label.size(), ' ');
      std::cout << (row.pass ? "PASS  " : "FAIL  ") << label << row.entry.route << ": "
                << row.entry.description << " -> " << row.detail
                << (row.entry.survivor ? "  [survivor]" : "") << "\n";
    }
    std::cout << table.survivors.size() << " survivors\n";
  }
  return table.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for curvature invariants of sphere-product quotients"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  Options opt;
  app.add_option("--seed", opt.seed, "random seed (sampling is deterministic per seed)");
  app.add_option("--budget", opt.budget, "override per-claim sample budgets");
  app.add_option("--format", opt.format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--presets", opt.presets, "directory of presentation files");
  app.add_option("--threads", opt.threads, "0 = parallel kernels, 1 = serial reference");

  auto* verify = app.add_subcommand("verify", "run registered claims (default: all)");
  std::vector<std::string> ids;
  verify->add_option("ids", ids, "claim ids, or 'all'");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate free circle patterns");
  int bound = 3;
  bool include_nonfree = false;
  enumerate->add_option("--bound", bound, "max |n_i|")->check(CLI::PositiveNumber);
  enumerate->add_flag("--all", include_nonfree, "also stream non-free primitive patterns");

  auto* table2 = app.add_subcommand("table2", "the table of su2/so3 subgroups");

  auto* p1cmd = app.add_subcommand("p1", "first Pontryagin class of a circle quotient");
  std::string pattern;
  p1cmd->add_option("--pattern", pattern, "n1,n2,n3,n4")->required();

  auto* classify = app.add_subcommand("classify", "replay the f = 1 classification");

  auto* dump = app.add_subcommand("dump-presets", "write the preset catalog to a directory");
  std::string out_dir = "data/presets";
  dump->add_option("--out", out_dir, "target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (opt.threads == 1) fatlab::set_default_exec(fatlab::Exec::Serial);
  if (const char* env = std::getenv("FATLAB_PRESETS"); env && opt.presets.empty())
    opt.presets = env;
  if (!opt.presets.empty()) {
    try {
      fatlab::lie::set_preset_dir(opt.presets);
    } catch (const std::exception& e) {
      std::cerr << "failed to load presets: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, ids);
    if (enumerate->parsed()) return cmd_enumerate(opt, bound, include_nonfree);
    if (table2->parsed()) return cmd_table2(opt);
    if (p1cmd->parsed()) return cmd_p1(opt, pattern);
    if (classify->parsed()) return cmd_classify(opt);
    if (dump->parsed()) {
      fatlab::lie::dump_catalog(out_dir);
      std::ofstream reg_out(out_dir + "/../registry.json");
      reg_out << fatlab::reg::Registry::builtin().to_json() << "\n";
      std::cout << "presets written to " << out_dir << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
