#include "kdim/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kdim/enumerate.hpp"
#include "kdim/errors.hpp"
#include "kdim/families.hpp"
#include "kdim/formulas.hpp"
#include "kdim/graph_io.hpp"
#include "kdim/solver.hpp"
#include "kdim/theorem_lab.hpp"

namespace kdim::cli {

int default_jobs() {
  const char* env = std::getenv("KDIM_JOBS");
  if (!env) return 1;
  try {
    std::size_t used = 0;
    const int jobs = std::stoi(env, &used);
    if (used == std::string(env).size() && jobs > 0) return jobs;
  } catch (const std::exception&) {
  }
  return 1;
}

namespace {

struct SolveArgs {
  std::string graph;
  std::string file;
  std::string input_format;
  int k = 1;
  bool classical = false;
  std::optional<std::uint64_t> budget;
  bool allow_disconnected = false;
  bool timing = false;
  std::string format = "json";
};

struct FormulaArgs {
  std::string family;
  int n = 0;
  int k = 1;
  int x = 1;
  std::string parts;
  std::string format = "text";
};

struct GenerateArgs {
  std::string family;
  std::vector<std::string> params;
  std::string out;
  std::string format = "edgelist";
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> n_min, n_max, k_min, k_max, count;
  std::uint64_t seed = 2024;
  int jobs = 1;
  bool timing = false;
  std::string format = "text";
};

struct EnumerateArgs {
  int n = 0;
  std::string format = "text";
};

// Per-suite ranges used when the command line leaves them open. `sweep` runs
// every suite at exactly these values.
SuiteOptions suite_defaults(const std::string& suite) {
  SuiteOptions o;
  if (suite == "formulas") {
    o.n_min = 2, o.n_max = 16, o.k_max = 4;
  } else if (suite == "characterization") {
    o.n_min = 4, o.n_max = 6;
  } else if (suite == "gap-lemmas") {
    o.n_max = 14;
  } else if (suite == "monotonicity") {
    o.n_max = 8, o.count = 30;
  } else if (suite == "bounds") {
    o.count = 200;
  } else if (suite == "deletion") {
    o.count = 100;
  }
  return o;
}

Graph load_graph(const SolveArgs& a) {
  if (!a.file.empty()) {
    GraphFormat fmt = GraphFormat::EdgeList;
    if (!a.input_format.empty())
      fmt = parse_graph_format(a.input_format);
    else if (a.file.ends_with(".g6") || a.file.ends_with(".graph6"))
      fmt = GraphFormat::Graph6;
    return read_graph(a.file, fmt);
  }
  if (a.graph.starts_with("g6:")) return parse_graph6(a.graph.substr(3));
  return build_family(a.graph);
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  if (a.graph.empty() == a.file.empty()) throw InputError("solve needs exactly one of --graph or --file");
  const Graph g = load_graph(a);
  SolveOptions opts;
  opts.node_budget = a.budget;
  opts.allow_disconnected = a.allow_disconnected;
  const Certificate c = a.classical ? solve_dim(g, opts) : solve_dim_k(g, a.k, opts);
  const bool verified = static_cast<bool>(is_resolving(g, c.set, c.k));

  if (a.format == "json") {
    nlohmann::json j = to_json(c);
    if (!a.timing) j.erase("elapsed_ms");
    j["verified"] = verified;
    out << j.dump() << '\n';
  } else {
    out << "dim_" << c.k << " = " << c.dim << " (" << to_string(c.method) << ", n=" << c.n << ")\n";
    out << "set:";
    for (int v : c.set) out << ' ' << v;
    out << "\nverified: " << (verified ? "yes" : "no") << '\n';
    if (a.timing) out << "elapsed_ms: " << c.elapsed_ms << '\n';
  }
  return verified ? kOk : kCheckFailed;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find_first_of("-,", pos), text.size());
    const std::string tok = text.substr(pos, end - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw InputError("bad part list '" + text + "'");
    parts.push_back(v);
    pos = end + 1;
  }
  return parts;
}

int cmd_formula(const FormulaArgs& a, std::ostream& out) {
  const std::string& f = a.family;
  FamilyValue fv;
  if (f == "path")
    fv = dim_k_path(a.n, a.k);
  else if (f == "cycle")
    fv = dim_k_cycle(a.n, a.k);
  else if (f == "wheel")
    fv = dim_k_wheel(a.n, a.k);
  else if (f == "fan")
    fv = dim_k_fan(a.n, a.k);
  else if (f == "complete")
    fv = dim_k_complete(a.n);
  else if (f == "petersen")
    fv = dim_k_petersen();
  else if (f == "multipartite")
    fv = dim_k_multipartite(parse_parts(a.parts), a.k);
  else if (f == "wheel_deletion") {
    // Drop in dim_k when the hub of wheel(5(3k+2)x) is deleted.
    const int rim = 5 * (3 * a.k + 2) * a.x;
    const FamilyValue w = dim_k_wheel(rim, a.k), c = dim_k_cycle(rim, a.k);
    fv = {"wheel_deletion", {a.k, a.x}, a.k, w.value - c.value, w.branch + " minus " + c.branch};
  } else {
    throw InputError("no formula for family '" + f + "'");
  }

  if (a.format == "json") {
    out << nlohmann::json{{"family", fv.family},
                          {"params", fv.params},
                          {"k", fv.k},
                          {"value", fv.value},
                          {"branch", fv.branch}}
               .dump()
        << '\n';
  } else {
    out << fv.value << '\n';
  }
  return kOk;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  FamilySpec spec = FamilySpec::parse(a.family);
  for (const auto& p : a.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got '" + p + "'");
    spec.params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  const Graph g = build_family(spec);
  const GraphFormat fmt = parse_graph_format(a.format);
  if (!a.out.empty()) {
    write_graph(g, a.out, fmt);
  } else {
    out << (fmt == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g));
  }
  return kOk;
}

SuiteOptions suite_options(const VerifyArgs& a, const std::string& suite) {
  SuiteOptions o = suite_defaults(suite);
  if (a.n_min) o.n_min = *a.n_min;
  if (a.n_max) o.n_max = *a.n_max;
  if (a.k_min) o.k_min = *a.k_min;
  if (a.k_max) o.k_max = *a.k_max;
  if (a.count) o.count = *a.count;
  o.seed = a.seed;
  o.jobs = a.jobs;
  if (o.k_min < 1 || o.k_max < o.k_min) throw InputError("need 1 <= k-min <= k-max");
  if (o.n_min < 1 || o.n_max < o.n_min) throw InputError("need 1 <= n-min <= n-max");
  if (o.count < 0) throw InputError("count must be non-negative");
  return o;
}

void write_text(const SweepReport& r, std::ostream& out) {
  const auto s = r.summary();
  out << r.suite << ": " << s.total << " rows, " << s.passed << " passed, " << s.failed << " failed, "
      << s.skipped << " skipped, " << s.vacuous << " vacuous\n";
  for (const auto& row : r.rows) {
    if (row.status != RowStatus::Fail) continue;
    out << "  FAIL " << row.instance << " k=" << row.k << ' ' << row.check;
    if (row.expected) out << " expected=" << *row.expected;
    if (row.observed) out << " observed=" << *row.observed;
    if (!row.detail.empty()) out << " (" << row.detail << ')';
    out << '\n';
  }
}

int emit_reports(const std::vector<SweepReport>& reports, const VerifyArgs& a, std::ostream& out) {
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const SweepReport& r) { return r.ok(); });
  if (a.format == "json") {
    if (reports.size() == 1) {
      out << to_json(reports.front(), a.timing).dump() << '\n';
    } else {
      nlohmann::json all = nlohmann::json::array();
      for (const auto& r : reports) all.push_back(to_json(r, a.timing));
      out << nlohmann::json{{"ok", ok}, {"suites", all}}.dump() << '\n';
    }
  } else if (a.format == "csv") {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string text = to_csv(reports[i], a.timing);
      if (i > 0) text.erase(0, text.find('\n') + 1);
      out << text;
    }
  } else {
    for (const auto& r : reports) write_text(r, out);
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end())
    throw InputError("unknown suite '" + a.suite + "'");
  return emit_reports({run_suite(a.suite, suite_options(a, a.suite))}, a, out);
}

int cmd_sweep(const VerifyArgs& a, std::ostream& out) {
  std::vector<SweepReport> reports;
  for (const auto& name : suite_names()) {
    SuiteOptions o = suite_defaults(name);
    o.seed = a.seed;
    o.jobs = a.jobs;
    reports.push_back(run_suite(name, o));
  }
  return emit_reports(reports, a, out);
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const auto graphs = enumerate_connected(a.n);
  if (a.format == "json") {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& g : graphs) codes.push_back(to_graph6(g));
    out << nlohmann::json{{"n", a.n}, {"count", graphs.size()}, {"graph6", codes}}.dump() << '\n';
  } else {
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distance-k metric dimension and checks on its known results", "kdim"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "exact dim_k of one graph, with a certificate");
  auto* s_graph = s->add_option("--graph", solve.graph, "family spec (cycle:n=13) or g6:<graph6>");
  auto* s_file = s->add_option("--file", solve.file, "graph file");
  s_graph->excludes(s_file);
  s->add_option("--input-format", solve.input_format, "edgelist or graph6 (default: by extension)");
  s->add_option("--k", solve.k, "radius")->check(CLI::PositiveNumber);
  s->add_flag("--classical", solve.classical, "classical metric dimension (k = diam-1)");
  s->add_option("--budget", solve.budget, "branch-and-bound node limit");
  s->add_flag("--allow-disconnected", solve.allow_disconnected, "unreachable pairs read as k+1");
  s->add_flag("--timing", solve.timing, "include elapsed time");
  s->add_option("--format", solve.format)->check(CLI::IsMember({"json", "text"}));

  FormulaArgs formula;
  auto* f = app.add_subcommand("formula", "closed-form dim_k of a named family");
  f->add_option("--family", formula.family)->required();
  f->add_option("--n", formula.n);
  f->add_option("--k", formula.k)->check(CLI::PositiveNumber);
  f->add_option("--x", formula.x, "wheel_deletion multiplier")->check(CLI::PositiveNumber);
  f->add_option("--parts", formula.parts, "multipartite part sizes, e.g. 2-3-4");
  f->add_option("--format", formula.format)->check(CLI::IsMember({"json", "text"}));

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a family member as edge list or graph6");
  g->add_option("--family", gen.family, "family name or spec")->required();
  g->add_option("-p,--param", gen.params, "extra key=value parameter");
  g->add_option("--out", gen.out, "output path (default: stdout)");
  g->add_option("--format", gen.format)->check(CLI::IsMember({"edgelist", "graph6"}));

  VerifyArgs verify;
  verify.jobs = default_jobs();
  auto* v = app.add_subcommand("verify", "run one check suite");
  v->add_option("--suite", verify.suite)->required()->check(CLI::IsMember(suite_names()));
  v->add_option("--n-min", verify.n_min);
  v->add_option("--n-max", verify.n_max);
  v->add_option("--k-min", verify.k_min);
  v->add_option("--k-max", verify.k_max);
  v->add_option("--count", verify.count, "random instances");
  v->add_option("--seed", verify.seed);
  v->add_option("--jobs", verify.jobs)->check(CLI::PositiveNumber);
  v->add_flag("--timing", verify.timing, "add per-row elapsed time");
  v->add_option("--format", verify.format)->check(CLI::IsMember({"csv", "json", "text"}));

  VerifyArgs sweep;
  sweep.jobs = default_jobs();
  auto* w = app.add_subcommand("sweep", "every suite at its default ranges");
  w->add_option("--seed", sweep.seed);
  w->add_option("--jobs", sweep.jobs)->check(CLI::PositiveNumber);
  w->add_flag("--timing", sweep.timing);
  w->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json", "text"}));

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "connected graphs of order n up to isomorphism, as graph6");
  e->add_option("--n", en.n)->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  e->add_option("--format", en.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return kInputError;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out);
    if (f->parsed()) return cmd_formula(formula, out);
    if (g->parsed()) return cmd_generate(gen, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (w->parsed()) return cmd_sweep(sweep, out);
    if (e->parsed()) return cmd_enumerate(en, out);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace kdim::cli
