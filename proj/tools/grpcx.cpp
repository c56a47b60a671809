#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grpcx/axiom_lab.hpp"
#include "grpcx/error.hpp"
#include "grpcx/group_spec.hpp"
#include "grpcx/measures.hpp"
#include "grpcx/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace grpcx;

namespace
{

struct RunConfig
{
  std::uint64_t max_order = 20000;
  std::size_t max_degree = 20000;
  std::size_t max_lattice = 100000;
  std::string format = "table";
  std::string cache_dir;
  bool verbose = false;
};

struct GroupChoice
{
  std::string builtin;
  std::string file;
};

void add_group_options(CLI::App *cmd, GroupChoice &choice)
{
  auto *b = cmd->add_option("--builtin", choice.builtin,
                            "builtin group name, e.g. S4, Z2wrZ4, A5xZ2");
  auto *f = cmd->add_option("--file", choice.file, "group definition file");
  b->excludes(f);
}

NamedGroup load(GroupChoice const &choice)
{
  if (!choice.file.empty())
    return load_group_file(choice.file);
  if (!choice.builtin.empty())
    return {choice.builtin, builtin_group(choice.builtin)};
  throw InputError("give a group with --builtin or --file");
}

bool json_format(RunConfig const &cfg) { return cfg.format == "json"; }

void print_json(json const &j) { std::cout << j.dump(2) << "\n"; }

// Measure name with an optional --set argument folded in.
std::string full_measure_name(std::string const &measure,
                              std::string const &set)
{
  if (set.empty() || measure.find(':') != std::string::npos)
    return measure;
  if (measure == "mu_S" || measure == "chi_S" || measure == "sur_S" ||
      measure == "sub_V")
    return measure + ":" + set;
  return measure;
}

int cmd_analyze(RunConfig const &cfg, GroupChoice const &choice, bool witness,
                std::string const &measure, std::string const &set)
{
  auto [name, g] = load(choice);
  if (!measure.empty()) {
    auto m = measure_by_name(full_measure_name(measure, set));
    std::uint64_t value = m.fn(g);
    if (json_format(cfg))
      print_json({{"name", name}, {"measure", m.name}, {"value", value}});
    else
      std::cout << name << " " << m.name << " = " << value << "\n";
    return 0;
  }
  auto r = measure_report(g, name);
  if (json_format(cfg))
    print_json(to_json(r, witness));
  else
    std::cout << to_table(r, witness);
  return 0;
}

int cmd_decompose(RunConfig const &cfg, GroupChoice const &choice,
                  bool enumerate)
{
  auto [name, g] = load(choice);
  std::vector<Decomposition> series;
  if (enumerate)
    series = enumerate_minimal_series(g);
  else
    series.push_back(cx_with_witness(g).witness);
  if (json_format(cfg)) {
    auto arr = json::array();
    for (auto const &d : series)
      arr.push_back(to_json(d));
    print_json({{"name", name},
                {"cx", cx(g)},
                {"count", series.size()},
                {"series", arr}});
    return 0;
  }
  std::cout << name << ": cx = " << cx(g) << ", " << series.size()
            << (enumerate ? " minimal series" : " witness series") << "\n";
  for (std::size_t i = 0; i < series.size(); ++i)
    std::cout << "series " << i + 1 << "\n" << to_table(series[i]);
  return 0;
}

int cmd_axioms(RunConfig const &cfg, std::string const &measure,
               std::string const &set, bool independence, bool counterexamples,
               bool subgroup)
{
  int status = 0;
  json out = json::object();
  if (!measure.empty()) {
    auto m = measure_by_name(full_measure_name(measure, set));
    auto corpus = default_corpus();
    auto axioms = core_axioms();
    if (subgroup)
      axioms.push_back(Axiom::subgroup);
    auto arr = json::array();
    for (Axiom a : axioms) {
      auto v = check_axiom(m, a, corpus);
      bool expected = a == Axiom::subgroup ||
                      v.holds != (m.expected_failures.count(a) > 0);
      if (!expected)
        status = 1;
      if (json_format(cfg))
        arr.push_back(to_json(v));
      else
        std::cout << to_text(v);
    }
    out["verdicts"] = arr;
  }
  if (independence) {
    auto arr = json::array();
    for (auto const &row : independence_table(default_corpus())) {
      if (!row.reproduced)
        status = 1;
      if (json_format(cfg)) {
        arr.push_back(to_json(row));
        continue;
      }
      std::cout << "all but " << to_string(row.axiom) << ": " << row.measure
                << " -> " << (row.reproduced ? "reproduced" : "NOT reproduced")
                << "\n";
      for (auto const &v : row.verdicts)
        std::cout << "  " << to_text(v);
    }
    out["independence"] = arr;
  }
  if (counterexamples) {
    auto arr = json::array();
    for (auto const &c : verify_counterexamples()) {
      if (!c.pass)
        status = 1;
      if (json_format(cfg))
        arr.push_back(to_json(c));
      else
        std::cout << (c.pass ? "ok    " : "FAIL  ") << c.name << ": "
                  << c.quantity << " expected " << c.expected << ", got "
                  << c.actual << "\n";
    }
    out["counterexamples"] = arr;
  }
  if (measure.empty() && !independence && !counterexamples)
    throw InputError("axioms needs --measure, --independence or "
                     "--counterexamples");
  if (json_format(cfg))
    print_json(out);
  return status;
}

std::string cache_dir(RunConfig const &cfg)
{
  if (!cfg.cache_dir.empty())
    return cfg.cache_dir;
  if (char const *env = std::getenv("GRPCX_CACHE_DIR"); env && *env)
    return env;
  return ".grpcx-cache";
}

json cached_report(RunConfig const &cfg, std::string const &name,
                   GroupPtr const &g)
{
  fs::path dir = cache_dir(cfg);
  fs::path file = dir / (g->key().str() + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    try {
      auto j = json::parse(in);
      if (cfg.verbose)
        std::cerr << "cache hit " << file.string() << "\n";
      j["name"] = name;
      return j;
    } catch (json::parse_error const &) {
      if (cfg.verbose)
        std::cerr << "ignoring unreadable cache file " << file.string()
                  << "\n";
    }
  }
  auto j = to_json(measure_report(g, name));
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(file);
  if (out)
    out << j.dump(2) << "\n";
  else if (cfg.verbose)
    std::cerr << "cannot write cache file " << file.string() << "\n";
  return j;
}

int cmd_corpus(RunConfig const &cfg, bool list, bool report_all)
{
  if (!list && !report_all)
    throw InputError("corpus needs --list or --report-all");
  auto corpus = default_corpus();
  if (list) {
    if (json_format(cfg)) {
      auto arr = json::array();
      for (auto const &e : corpus.groups)
        arr.push_back({{"name", e.name}, {"order", e.group->order()}});
      print_json(arr);
    } else {
      for (auto const &e : corpus.groups)
        std::cout << e.name << " " << e.group->order() << "\n";
    }
    return 0;
  }
  auto arr = json::array();
  for (auto const &e : corpus.groups)
    arr.push_back(cached_report(cfg, e.name, e.group));
  if (json_format(cfg)) {
    print_json(arr);
    return 0;
  }
  char const *cols[] = {"order", "cx", "sx", "jh", "chief", "der", "fit",
                        "solv"};
  std::cout << "name        ";
  for (auto const *c : cols)
    std::cout << " " << std::setw(6) << c;
  std::cout << "\n";
  for (auto const &j : arr) {
    auto name = j["name"].get<std::string>();
    std::cout << name << std::string(name.size() < 12 ? 12 - name.size() : 1,
                                     ' ');
    for (auto const *c : cols)
      std::cout << " " << std::setw(6) << j[c].get<std::uint64_t>();
    std::cout << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"grpcx: hierarchical complexity of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--max-order", cfg.max_order, "largest group order allowed")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "largest degree allowed")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-lattice", cfg.max_lattice,
                 "most normal subgroups allowed per group")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache-dir", cfg.cache_dir,
                 "report cache directory (default $GRPCX_CACHE_DIR or "
                 ".grpcx-cache)");
  app.add_flag("-v,--verbose", cfg.verbose, "log cache activity to stderr");

  GroupChoice analyze_group, decompose_group;
  bool witness = false, enumerate = false, independence = false,
       counterexamples = false, subgroup = false, list = false,
       report_all = false;
  std::string analyze_measure, axioms_measure, set;

  auto *analyze = app.add_subcommand("analyze", "full measure report");
  add_group_options(analyze, analyze_group);
  analyze->add_flag("--witness", witness, "include witness series");
  analyze->add_option("--measure", analyze_measure,
                      "single measure: cx, sx, jh, chief, der, fit, solv, "
                      "logp:<p>, mu_S, chi_S, sur_S, sub_V");
  analyze->add_option("--set", set,
                      "argument for mu_S, chi_S (e.g. 2a,60n, snag, abelian), "
                      "sur_S (e.g. 3a) or sub_V (e.g. nilpotent)");

  auto *decompose = app.add_subcommand("decompose", "minimal series");
  add_group_options(decompose, decompose_group);
  decompose->add_flag("--enumerate", enumerate, "list every minimal series");

  auto *axioms = app.add_subcommand("axioms", "axiom checks over the corpus");
  axioms->add_option("--measure", axioms_measure, "measure to check");
  axioms->add_option("--set", set, "argument for parametrized measures");
  axioms->add_flag("--independence", independence, "independence table");
  axioms->add_flag("--counterexamples", counterexamples,
                   "named counterexamples");
  axioms->add_flag("--subgroup", subgroup,
                   "also sample the subgroup axiom (informational)");

  auto *corpus = app.add_subcommand("corpus", "built-in corpus");
  corpus->add_flag("--list", list, "names and orders");
  corpus->add_flag("--report-all", report_all, "cached reports for all");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto &limits = default_limits();
  limits.max_order = cfg.max_order;
  limits.max_degree = cfg.max_degree;
  limits.max_lattice = cfg.max_lattice;

  try {
    if (analyze->parsed())
      return cmd_analyze(cfg, analyze_group, witness, analyze_measure, set);
    if (decompose->parsed())
      return cmd_decompose(cfg, decompose_group, enumerate);
    if (axioms->parsed())
      return cmd_axioms(cfg, axioms_measure, set, independence,
                        counterexamples, subgroup);
    return cmd_corpus(cfg, list, report_all);
  } catch (CapExceeded const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (AssertionFailure const &e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 1;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
