// Command-line front end: check, scenario, tables, oracle, bench.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ccoa/generator.hpp"
#include "ccoa/kb.hpp"
#include "ccoa/oracle.hpp"
#include "ccoa/propagation.hpp"
#include "ccoa/report.hpp"
#include "ccoa/search.hpp"
#include "ccoa/tables.hpp"
#include "json.hpp"

using namespace ccoa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Algebra& algebra() {
  static const Algebra* alg = []() -> const Algebra* {
    if (const char* path = std::getenv("CCOA_TABLES"); path && *path)
      return new Algebra(tables_from_json(read_file(path)));
    return &Algebra::builtin();
  }();
  return *alg;
}

KbPart part_from(const std::string& s) {
  if (s == "cda") return KbPart::cda;
  if (s == "roa") return KbPart::roa;
  return KbPart::all;
}

std::string point_text(const Point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

void print_model(const CcoaCsp& csp, const PointAssignment& model) {
  for (std::size_t i = 0; i < csp.size(); ++i) std::cout << "  " << csp.names()[i] << " = " << point_text(model[i]) << "\n";
}

struct CheckArgs {
  std::string file;
  std::string only = "all";
  bool json = false;
  bool explain = false;
  bool invariants = false;
  int oracle_radius = -1;
};

int run_check(const CheckArgs& a) {
  const auto kb = project_kb(parse_kb(read_file(a.file)), part_from(a.only));
  auto built = build_csp(kb);
  const CcoaCsp original = built.csp;

  PropagationOptions opts;
  opts.check_invariants = a.invariants;
  std::vector<std::string> trace;
  if (a.explain) opts.trace = [&](const Refinement& r) { trace.push_back(describe(built.csp, r)); };
  PropagationOutcome outcome;
  if (built.conflicts.empty()) outcome = pcs4c_plus(built.csp, algebra(), opts);
  const bool consistent = outcome.consistent() && built.conflicts.empty();

  if (a.json) {
    std::cout << check_report_json(built.csp, outcome, built.conflicts);
  } else {
    for (const auto& line : trace) std::cout << line << "\n";
    for (const auto& c : built.conflicts) std::cout << "conflict: " << c << "\n";
    if (consistent)
      std::cout << "fixpoint: no empty relation";
    else if (outcome.culprit)
      std::cout << "inconsistent: " << describe(built.csp, *outcome.culprit);
    else
      std::cout << "inconsistent";
    std::cout << " (" << outcome.stats.dequeues << " dequeues, " << outcome.stats.refinements << " refinements)\n";
  }
  if (a.oracle_radius >= 0) {
    auto model = model_search(original, a.oracle_radius);
    std::ostream& out = a.json ? std::cerr : std::cout;
    if (model) {
      out << "grid model at radius " << a.oracle_radius << ":\n";
      for (std::size_t i = 0; i < original.size(); ++i)
        out << "  " << original.names()[i] << " = " << point_text((*model)[i]) << "\n";
    } else {
      out << "no grid model at radius " << a.oracle_radius << "\n";
    }
  }
  return consistent ? kExitOk : kExitNegative;
}

struct ScenarioArgs {
  std::string file;
  std::string only = "all";
  std::string scope = "combined";
  std::uint64_t budget = 1'000'000;
  int oracle_radius = -1;
};

int run_scenario(const ScenarioArgs& a) {
  const auto kb = project_kb(parse_kb(read_file(a.file)), part_from(a.only));
  auto built = build_csp(kb);
  SearchOptions opts;
  opts.node_budget = a.budget;
  if (a.scope == "cda") {
    opts.scope = SearchScope::cda;
    opts.propagation = PropagationOptions::cda_only();
  } else if (a.scope == "roa") {
    opts.scope = SearchScope::roa;
    opts.propagation = PropagationOptions::roa_only();
  }
  if (!built.conflicts.empty()) {
    for (const auto& c : built.conflicts) std::cout << "conflict: " << c << "\n";
    std::cout << "exhausted: no scenario\n";
    return kExitNegative;
  }
  const SearchResult r = find_scenario(built.csp, algebra(), opts);
  if (!r.scenario) {
    std::cout << "exhausted: no strongly 4-consistent scenario (" << r.nodes_explored << " nodes)\n";
    return kExitNegative;
  }
  std::cout << "# scenario found (" << r.nodes_explored << " nodes)\n" << serialize_kb(kb_from_csp(*r.scenario));
  if (a.oracle_radius >= 0) {
    if (auto model = model_search(*r.scenario, a.oracle_radius)) {
      std::cout << "# grid model at radius " << a.oracle_radius << ":\n";
      for (std::size_t i = 0; i < r.scenario->size(); ++i)
        std::cout << "#   " << r.scenario->names()[i] << " = " << point_text((*model)[i]) << "\n";
    } else {
      std::cout << "# no grid model at radius " << a.oracle_radius << "\n";
    }
  }
  return kExitOk;
}

int run_tables_verify(int radius, const std::string& reference, bool certify) {
  const AlgebraTables t = derive_tables({radius, true});
  int rc = kExitOk;
  if (certify) {
    const auto cert = certify_tables(t, radius);
    std::cout << "certified " << cert.cells_checked << " cells at radius " << radius << ": "
              << (cert.ok() ? "sound and minimal" : std::to_string(cert.issues.size()) + " issues") << "\n";
    for (const auto& i : cert.issues)
      std::cout << "  " << i.table << "[" << i.row << "," << i.col << "] " << (i.unsound ? "misses " : "overstates ")
                << i.atom << "\n";
    if (!cert.ok()) rc = kExitNegative;
  }
  const std::string ref = reference.empty() ? std::string(builtin_reference_tables()) : read_file(reference);
  const DiscrepancyReport rep = verify_against_reference(t, ref);
  std::cout << "compared " << rep.cells_compared << " cells against the reference transcription\n";
  for (const auto& d : rep.discrepancies)
    std::cout << (d.whitelisted ? "  known      " : "  UNEXPECTED ") << d.key << ": printed " << d.printed
              << " reads as " << d.expected << ", derived " << d.derived << "\n";
  for (const auto& k : rep.stale_whitelist) std::cout << "  STALE      " << k << " is whitelisted but matches\n";
  if (!rep.ok()) rc = kExitNegative;
  return rc;
}

int run_tables_emit(int radius, const std::string& format, const std::string& out) {
  if (format != "json") throw UsageError("unsupported format: " + format);
  const std::string text = tables_to_json(radius == 4 ? algebra().tables() : derive_tables({radius, true}));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
  }
  return kExitOk;
}

int run_oracle(const std::string& file, const std::string& only, int radius, std::uint64_t budget) {
  const auto kb = project_kb(parse_kb(read_file(file)), part_from(only));
  const auto built = build_csp(kb);
  const auto model = model_search(built.csp, radius, {budget});
  if (!model) {
    std::cout << "none-found at radius " << radius << "\n";
    return kExitNegative;
  }
  std::cout << "witness at radius " << radius << ":\n";
  print_model(built.csp, *model);
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{10, 20};
  double density = 0.3;
  std::uint64_t seed = 1;
  bool json = false;
  bool satisfiable = false;
};

int run_bench(const BenchArgs& a) {
  const Algebra& alg = algebra();  // table setup stays out of the timings
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (std::size_t n : a.sizes) {
    if (n == 0) throw UsageError("sizes must be positive");
    CcoaCsp csp = [&] {
      if (!a.satisfiable) return random_csp(n, a.density, a.seed);
      Rng rng(a.seed);
      return planted_csp(n, static_cast<int>(2 * n), a.density, rng).csp;
    }();
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = pcs4c_plus(csp, alg);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (a.json) {
      nlohmann::ordered_json r;
      r["n"] = n;
      r["status"] = outcome.consistent() ? "fixpoint" : "inconsistent";
      r["wall_ms"] = ms;
      r["dequeues"] = outcome.stats.dequeues;
      r["refinements"] = outcome.stats.refinements;
      runs.push_back(r);
    } else {
      std::cout << "n=" << n << " " << (outcome.consistent() ? "fixpoint" : "inconsistent") << " " << ms << " ms "
                << outcome.stats.dequeues << " dequeues " << outcome.stats.refinements << " refinements\n";
    }
  }
  if (a.json) {
    nlohmann::ordered_json j;
    j["density"] = a.density;
    j["seed"] = a.seed;
    j["satisfiable"] = a.satisfiable;
    j["runs"] = runs;
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reasoning about combined cardinal direction and relative orientation knowledge"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Propagate a knowledge base to its fixpoint");
  c->add_option("file", check.file, "knowledge base")->required();
  c->add_flag("--json", check.json, "emit a JSON report");
  c->add_flag("--explain", check.explain, "print every refinement");
  c->add_flag("--check-invariants", check.invariants, "re-check matrix properties after every step");
  c->add_option("--oracle-radius", check.oracle_radius, "also search for a grid model of the input");
  c->add_option("--only", check.only, "keep only cda or roa facts")->check(CLI::IsMember({"all", "cda", "roa"}));

  ScenarioArgs scen;
  auto* s = app.add_subcommand("scenario", "Search for an atomic refinement closed under propagation");
  s->add_option("file", scen.file, "knowledge base")->required();
  s->add_option("--budget", scen.budget, "node limit");
  s->add_option("--scope", scen.scope, "cells to split")->check(CLI::IsMember({"combined", "cda", "roa"}));
  s->add_option("--only", scen.only, "keep only cda or roa facts")->check(CLI::IsMember({"all", "cda", "roa"}));
  s->add_option("--oracle-radius", scen.oracle_radius, "search a grid model of the scenario");

  auto* t = app.add_subcommand("tables", "Derive, verify and export the algebra tables");
  t->require_subcommand(1);
  int verify_radius = 4;
  std::string reference;
  bool certify = false;
  auto* tv = t->add_subcommand("verify", "Compare derived tables against the reference transcription");
  tv->add_option("--grid-radius", verify_radius)->check(CLI::Range(4, 12));
  tv->add_option("--reference", reference, "alternate transcription fixture");
  tv->add_flag("--certify", certify, "re-derive and check soundness and minimality");
  int emit_radius = 4;
  std::string format = "json", out;
  auto* te = t->add_subcommand("emit", "Write the tables");
  te->add_option("--format", format)->required();
  te->add_option("-o,--output", out);
  te->add_option("--grid-radius", emit_radius)->check(CLI::Range(4, 12));

  std::string oracle_file, oracle_only = "all";
  int oracle_radius = 3;
  std::uint64_t oracle_budget = ModelSearchOptions{}.budget;
  auto* o = app.add_subcommand("oracle", "Brute-force grid model search");
  o->add_option("file", oracle_file, "knowledge base")->required();
  o->add_option("--grid-radius", oracle_radius)->required()->check(CLI::NonNegativeNumber);
  o->add_option("--budget", oracle_budget, "candidate placements before giving up");
  o->add_option("--only", oracle_only, "keep only cda or roa facts")->check(CLI::IsMember({"all", "cda", "roa"}));

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time propagation on random networks");
  b->add_option("--sizes", bench.sizes)->delimiter(',');
  b->add_option("--density", bench.density)->check(CLI::Range(0.0, 1.0));
  b->add_option("--seed", bench.seed);
  b->add_flag("--json", bench.json);
  b->add_flag("--satisfiable", bench.satisfiable, "plant a grid model before weakening");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return run_check(check);
    if (*s) return run_scenario(scen);
    if (*tv) return run_tables_verify(verify_radius, reference, certify);
    if (*te) return run_tables_emit(emit_radius, format, out);
    if (*o) return run_oracle(oracle_file, oracle_only, oracle_radius, oracle_budget);
    if (*b) return run_bench(bench);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
