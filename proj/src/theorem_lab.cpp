#include "kdim/theorem_lab.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "kdim/enumerate.hpp"
#include "kdim/errors.hpp"
#include "kdim/families.hpp"
#include "kdim/formulas.hpp"
#include "kdim/graph_io.hpp"
#include "kdim/parallel.hpp"
#include "kdim/solver.hpp"

namespace kdim {

GapProfile gap_profile(Walk kind, int n, std::span<const int> members) {
  std::vector<int> m(members.begin(), members.end());
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  if (m.size() < 2) throw InputError("gap_profile needs at least two distinct members");
  if (m.front() < 0 || m.back() >= n) throw InputError("gap_profile: member out of range");

  GapProfile p;
  p.kind = kind;
  p.n = n;
  const int r = static_cast<int>(m.size());
  if (kind == Walk::Cycle) {
    for (int i = 0; i < r; ++i) {
      const int from = m[i], to = m[(i + 1) % r];
      p.gaps.push_back({((to - from - 1) % n + n) % n, from});
    }
    return p;
  }
  for (int i = 0; i + 1 < r; ++i) p.gaps.push_back({m[i + 1] - m[i] - 1, m[i]});
  p.initial = m.front();
  p.terminal = n - 1 - m.back();
  p.union_gap = *p.initial + *p.terminal;
  return p;
}

std::vector<std::string> gap_lemma_violations(const GapProfile& p, int k) {
  std::vector<std::string> bad;
  const int g = static_cast<int>(p.gaps.size());
  const int wide = 2 * k + 1;
  const bool cyclic = p.kind == Walk::Cycle;

  int at_wide = 0;
  for (const Gap& gap : p.gaps) {
    if (gap.size > wide) bad.push_back("gap of " + std::to_string(gap.size) + " > 2k+1");
    at_wide += gap.size == wide;
  }
  if (at_wide > 1) bad.push_back(std::to_string(at_wide) + " gaps of exactly 2k+1");

  // A gap of at least k+1 vertices forces its neighbouring gaps down to k.
  for (int i = 0; i < g; ++i) {
    if (p.gaps[i].size < k + 1) continue;
    for (int j : {i - 1, i + 1}) {
      if (cyclic) j = (j + g) % g;
      if (j < 0 || j >= g || j == i) continue;
      if (p.gaps[j].size > k)
        bad.push_back("gap after " + std::to_string(p.gaps[i].after) + " has a neighbour of " +
                      std::to_string(p.gaps[j].size));
    }
  }
  if (cyclic) return bad;

  if (*p.initial > k + 1) bad.push_back("initial gap " + std::to_string(*p.initial) + " > k+1");
  if (*p.terminal > k + 1) bad.push_back("terminal gap " + std::to_string(*p.terminal) + " > k+1");
  if (p.union_gap > wide) bad.push_back("union gap " + std::to_string(p.union_gap) + " > 2k+1");
  if (at_wide >= 1 && p.union_gap == wide) bad.push_back("both a 2k+1 gap and a 2k+1 union gap");
  if (*p.initial >= 1 && p.gaps.front().size > k)
    bad.push_back("nonempty initial gap next to a gap of " + std::to_string(p.gaps.front().size));
  if (*p.terminal >= 1 && p.gaps.back().size > k)
    bad.push_back("nonempty terminal gap next to a gap of " + std::to_string(p.gaps.back().size));
  return bad;
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::Skipped: return "skipped";
    case RowStatus::Vacuous: return "vacuous";
  }
  return "fail";
}

SweepReport::Summary SweepReport::summary() const {
  Summary s;
  for (const auto& row : rows) {
    ++s.total;
    switch (row.status) {
      case RowStatus::Pass: ++s.passed; break;
      case RowStatus::Fail: ++s.failed; break;
      case RowStatus::Skipped: ++s.skipped; break;
      case RowStatus::Vacuous: ++s.vacuous; break;
    }
  }
  return s;
}

void SweepReport::append(SweepReport other) {
  for (auto& row : other.rows) rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string bounds_text(const SweepRow& row) {
  std::string out;
  for (const auto& [name, value] : row.bounds) {
    if (!out.empty()) out += ';';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace

std::string to_csv(const SweepReport& r, bool with_timing) {
  std::ostringstream out;
  out << "suite,instance,k,check,expected,observed,bounds,status,detail";
  if (with_timing) out << ",elapsed_ms";
  out << '\n';
  for (const auto& row : r.rows) {
    out << csv_field(r.suite) << ',' << csv_field(row.instance) << ',' << row.k << ','
        << csv_field(row.check) << ',' << opt_text(row.expected) << ',' << opt_text(row.observed)
        << ',' << csv_field(bounds_text(row)) << ',' << to_string(row.status) << ','
        << csv_field(row.detail);
    if (with_timing) out << ',' << row.elapsed_ms;
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const SweepReport& r, bool with_timing) {
  const auto s = r.summary();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j = {{"instance", row.instance},
                        {"k", row.k},
                        {"check", row.check},
                        {"status", to_string(row.status)},
                        {"detail", row.detail}};
    j["expected"] = row.expected ? nlohmann::json(*row.expected) : nlohmann::json(nullptr);
    j["observed"] = row.observed ? nlohmann::json(*row.observed) : nlohmann::json(nullptr);
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [name, value] : row.bounds) b[name] = value;
    j["bounds"] = b;
    if (with_timing) j["elapsed_ms"] = row.elapsed_ms;
    rows.push_back(std::move(j));
  }
  return {{"suite", r.suite},
          {"summary",
           {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped},
            {"vacuous", s.vacuous}}},
          {"rows", rows}};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string instance_id(const Graph& g) {
  if (!g.label().empty()) return g.label();
  return g.order() <= 62 ? "g6:" + to_graph6(g) : "n=" + std::to_string(g.order());
}

int exact_dim(const Graph& g, int k) {
  SolveOptions opts;
  opts.cap_radius = false;
  return solve_dim_k(g, k, opts).dim;
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

SweepReport gap_lemma_check(Walk kind, int n, int k) {
  const auto start = Clock::now();
  const bool cyclic = kind == Walk::Cycle;
  if (k < 1) throw InputError("radius k must be positive");
  if (cyclic && n < 2 * k + 3) throw InputError("cycle gap lemma needs n >= 2k+3");
  if (!cyclic && n < k + 3) throw InputError("path gap lemma needs n >= k+3");
  if (n > 16) throw InputError("gap lemma checks enumerate all optima and cap n at 16");

  const Graph g = cyclic ? cycle(n) : path(n);
  const int dim = solve_dim_k(g, k).dim;
  const PairSystem ps = build_pair_system(g, k);
  int optima = 0, passing = 0, vacuous = 0;
  std::string first_failure;
  for_each_resolving_set(ps, dim, [&](const std::vector<int>& m) {
    ++optima;
    if (m.size() < 2) {
      ++vacuous;
      return;
    }
    auto bad = gap_lemma_violations(gap_profile(kind, n, m), k);
    if (bad.empty())
      ++passing;
    else if (first_failure.empty())
      first_failure = set_text(m) + ": " + bad.front();
  });

  SweepRow row;
  row.instance = std::string(cyclic ? "cycle" : "path") + ":n=" + std::to_string(n);
  row.k = k;
  row.check = cyclic ? "gap-lemma-cycle" : "gap-lemma-path";
  row.expected = optima - vacuous;
  row.observed = passing;
  row.bounds = {{"dim", dim}, {"optima", optima}};
  if (optima == vacuous)
    row.status = RowStatus::Vacuous;
  else
    row.status = passing == optima - vacuous ? RowStatus::Pass : RowStatus::Fail;
  row.detail = first_failure;
  row.elapsed_ms = ms_since(start);
  return {"gap-lemmas", {row}};
}

}  // namespace

SweepReport check_gap_lemma_cycle(int n, int k) { return gap_lemma_check(Walk::Cycle, n, k); }
SweepReport check_gap_lemma_path(int n, int k) { return gap_lemma_check(Walk::Path, n, k); }

SweepReport check_monotonicity(const Graph& g, int k_max) {
  const auto start = Clock::now();
  SweepReport rep{"monotonicity", {}};
  const std::string id = instance_id(g);
  if (g.order() < 2 || !is_connected(g)) {
    rep.rows.push_back({id, k_max, "monotone-chain", {}, {}, {}, RowStatus::Skipped, "not connected", 0});
    return rep;
  }
  std::vector<int> dims(k_max + 1, 0);
  for (int k = 1; k <= k_max; ++k) dims[k] = exact_dim(g, k);
  const int metric_dim = solve_dim(g).dim;
  const double elapsed = ms_since(start);
  for (int k = 2; k <= k_max; ++k) {
    SweepRow row{id, k, "dim_k<=dim_(k-1)", dims[k - 1], dims[k], {}, RowStatus::Pass, {}, elapsed};
    row.status = dims[k] <= dims[k - 1] ? RowStatus::Pass : RowStatus::Fail;
    rep.rows.push_back(row);
  }
  SweepRow last{id, k_max, "dim<=dim_k", dims[k_max], metric_dim, {}, RowStatus::Pass, {}, elapsed};
  last.status = metric_dim <= dims[k_max] ? RowStatus::Pass : RowStatus::Fail;
  rep.rows.push_back(last);
  return rep;
}

SweepReport check_diameter_collapse(const Graph& g) {
  const auto start = Clock::now();
  SweepReport rep{"monotonicity", {}};
  const std::string id = instance_id(g);
  const auto diam = diameter(g);
  if (g.order() < 2 || !diam) {
    rep.rows.push_back({id, 0, "diameter-collapse", {}, {}, {}, RowStatus::Skipped, "not connected", 0});
    return rep;
  }
  const int d = *diam;
  const int metric_dim = solve_dim(g).dim;
  const int k_lo = d <= 2 ? 1 : d - 1;
  const int k_hi = std::max(3, d + 1);
  for (int k = k_lo; k <= k_hi; ++k) {
    const int dk = exact_dim(g, k);
    SweepRow row{id, k, "dim_k=dim", metric_dim, dk, {{"diameter", d}}, RowStatus::Pass, {}, 0};
    row.status = dk == metric_dim ? RowStatus::Pass : RowStatus::Fail;
    row.elapsed_ms = ms_since(start);
    rep.rows.push_back(row);
  }
  return rep;
}

SweepReport characterization_sweep(int n, int k, int jobs) {
  const std::vector<Graph> graphs = enumerate_connected(n);
  auto rows = parallel_map(graphs.size(), jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    const Graph& g = graphs[i];
    const ExtremeClass cls = classify_extreme(g, k);
    const int dim = solve_dim_k(g, k).dim;
    SweepRow row;
    row.instance = "g6:" + to_graph6(g);
    row.k = k;
    row.check = "classify-vs-solver";
    const int implied = implied_dim(cls, n);
    row.observed = dim;
    if (implied >= 0) {
      row.expected = implied;
      row.status = dim == implied ? RowStatus::Pass : RowStatus::Fail;
    } else {
      // Other: the solver must not land on any characterised value.
      row.status = (dim == 1 || dim == n - 2 || dim == n - 1) ? RowStatus::Fail : RowStatus::Pass;
    }
    row.detail = to_string(cls.kind);
    if (cls.family != ExtremeClass::Family::None) row.detail += "/" + to_string(cls.family);
    row.elapsed_ms = ms_since(start);
    return row;
  });
  return {"characterization", std::move(rows)};
}

DeletionOutcome deletion_experiment(const Graph& g, const GraphElement& element, int k) {
  if (!is_connected(g)) throw NotConnected("deletion_experiment: graph is not connected");
  DeletionOutcome out;
  const bool is_edge = std::holds_alternative<Edge>(element);
  const Graph h = is_edge ? delete_edge(g, std::get<Edge>(element)) : delete_vertex(g, std::get<int>(element));
  if (h.order() < 2 || !is_connected(h)) {
    out.skipped = true;
    out.detail = "deletion disconnects the graph";
    return out;
  }
  out.before = solve_dim_k(g, k).dim;
  out.after = solve_dim_k(h, k).dim;
  out.delta = out.after - out.before;
  if (is_edge) {
    const int up = k >= 3 ? 2 : 1;
    if (out.delta > up) {
      out.bounds_hold = false;
      out.detail = "delta " + std::to_string(out.delta) + " > " + std::to_string(up);
    }
    if (k == 1 && out.delta < -1) {
      out.bounds_hold = false;
      out.detail = "delta " + std::to_string(out.delta) + " < -1";
    }
  }
  return out;
}

SweepReport bound_audit(const Graph& g, int k) {
  const auto start = Clock::now();
  SweepRow row;
  row.instance = instance_id(g);
  row.k = k;
  row.check = "bounds";
  const auto diam = diameter(g);
  if (g.order() < 2 || !diam) {
    row.status = RowStatus::Skipped;
    row.detail = "not connected";
    return {"bounds", {row}};
  }
  const int n = g.order();
  const int exact = solve_dim_k(g, k).dim;
  const int twin = twin_lower_bound(g);
  const int by_diam = diameter_upper_bound(n, *diam, k);
  const int refined = refined_upper_bound(n, *diam, k);
  const std::uint64_t order_cap = max_order(k, exact);
  row.observed = exact;
  row.expected = std::min(by_diam, refined);
  row.bounds = {{"twin", twin},
                {"diameter", by_diam},
                {"refined", refined},
                {"max_order", static_cast<std::int64_t>(std::min<std::uint64_t>(order_cap, INT64_MAX))}};
  std::vector<std::string> bad;
  if (twin > exact) bad.push_back("twin bound exceeds exact");
  if (exact > by_diam) bad.push_back("exact exceeds diameter bound");
  if (exact > refined) bad.push_back("exact exceeds refined bound");
  if (static_cast<std::uint64_t>(n) > order_cap) bad.push_back("order exceeds max_order");
  row.status = bad.empty() ? RowStatus::Pass : RowStatus::Fail;
  for (const auto& b : bad) row.detail += (row.detail.empty() ? "" : "; ") + b;
  row.elapsed_ms = ms_since(start);
  return {"bounds", {row}};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SweepRow family_delta_row(const std::string& id, const Graph& g, const GraphElement& el, int k,
                          int want_before, int want_after) {
  const auto start = Clock::now();
  const DeletionOutcome out = deletion_experiment(g, el, k);
  SweepRow row;
  row.instance = id;
  row.k = k;
  row.check = std::holds_alternative<Edge>(el) ? "edge-deletion" : "vertex-deletion";
  row.expected = want_after;
  row.observed = out.after;
  row.bounds = {{"before", out.before}, {"expected_before", want_before}};
  if (out.skipped) {
    row.status = RowStatus::Fail;
    row.detail = "unexpected disconnection";
  } else {
    row.status = (out.before == want_before && out.after == want_after && out.bounds_hold) ? RowStatus::Pass
                                                                                            : RowStatus::Fail;
    row.detail = "before=" + std::to_string(out.before) + " after=" + std::to_string(out.after);
    if (!out.detail.empty()) row.detail += "; " + out.detail;
  }
  row.elapsed_ms = ms_since(start);
  return row;
}

std::vector<std::vector<int>> partitions_with_two_parts(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  for (int t = 2; t <= max_total; ++t) rec(rec, t, t);
  return out;
}

SweepRow formula_row(const std::string& id, const Graph& g, const FamilyValue& fv) {
  const auto start = Clock::now();
  const int dim = solve_dim_k(g, fv.k).dim;
  SweepRow row{id, fv.k, "formula=solver", fv.value, dim, {}, RowStatus::Pass, fv.branch, 0};
  row.status = dim == fv.value ? RowStatus::Pass : RowStatus::Fail;
  row.elapsed_ms = ms_since(start);
  return row;
}

}  // namespace

Graph random_trial_graph(std::uint64_t seed, std::size_t index, int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min) throw InputError("random trials need 2 <= n_min <= n_max");
  const std::uint64_t h = splitmix64(seed ^ splitmix64(index));
  const int n = n_min + static_cast<int>(h % static_cast<std::uint64_t>(n_max - n_min + 1));
  const double p = 0.15 + 0.45 * static_cast<double>((h >> 20) % 1000) / 1000.0;
  return random_connected(n, p, splitmix64(h)).with_label("random:seed=" + std::to_string(seed) +
                                                          ",i=" + std::to_string(index));
}

SweepReport run_gap_lemma_suite(const SuiteOptions& o) {
  struct Job {
    Walk kind;
    int n, k;
  };
  std::vector<Job> jobs;
  const int n_max = std::min(o.n_max, 16);
  for (int k = o.k_min; k <= o.k_max; ++k) {
    for (int n = 2 * k + 3; n <= n_max; ++n) jobs.push_back({Walk::Cycle, n, k});
    for (int n = k + 3; n <= n_max; ++n) jobs.push_back({Walk::Path, n, k});
  }
  auto parts = parallel_map(jobs.size(), o.jobs, [&](std::size_t i) {
    return gap_lemma_check(jobs[i].kind, jobs[i].n, jobs[i].k);
  });
  SweepReport rep{"gap-lemmas", {}};
  for (auto& p : parts) rep.append(std::move(p));
  return rep;
}

SweepReport run_monotonicity_suite(const SuiteOptions& o) {
  std::vector<Graph> graphs = {petersen().with_label("petersen"), wheel(10).with_label("wheel:n=10"),
                               path(5).with_label("path:n=5"), path(7).with_label("path:n=7"),
                               complete(5).with_label("complete:n=5")};
  for (int i = 0; i < o.count; ++i) graphs.push_back(random_trial_graph(o.seed, i, o.n_min, o.n_max));
  auto parts = parallel_map(graphs.size(), o.jobs, [&](std::size_t i) {
    SweepReport r = check_monotonicity(graphs[i], o.k_max);
    r.append(check_diameter_collapse(graphs[i]));
    return r;
  });
  SweepReport rep{"monotonicity", {}};
  for (auto& p : parts) rep.append(std::move(p));
  return rep;
}

SweepReport run_characterization_suite(const SuiteOptions& o) {
  SweepReport rep{"characterization", {}};
  for (int n = std::max(o.n_min, 4); n <= std::min(o.n_max, kMaxEnumerationOrder); ++n)
    for (int k = o.k_min; k <= o.k_max; ++k) rep.append(characterization_sweep(n, k, o.jobs));
  return rep;
}

SweepReport run_deletion_suite(const SuiteOptions& o) {
  std::vector<std::function<SweepRow()>> tasks;
  {
    const auto [g, e] = edge_sharpness_family(3, 2, 3);
    tasks.push_back([g, e] { return family_delta_row("edge_sharpness:a=3,b=2,c=3", g, e, 3, 3, 5); });
    tasks.push_back([g, e] { return family_delta_row("edge_sharpness:a=3,b=2,c=3", g, e, 2, 4, 5); });
  }
  for (int a : {2, 3}) {
    const auto [g, e] = edge_gap_family(a);
    for (int k : {2, 3})
      tasks.push_back([g, e, a, k] {
        return family_delta_row("edge_gap:a=" + std::to_string(a), g, e, k, 2 * a, a + 1);
      });
    const auto [gv, v] = vdeletion_family(a);
    for (int k : {1, 2})
      tasks.push_back([gv, v, a, k] {
        return family_delta_row("vdeletion:a=" + std::to_string(a), gv, v, k, a + 1, 2 * a);
      });
  }

  // Random (graph, edge) trials; edges whose removal disconnects are passed over.
  for (int i = 0; i < o.count; ++i)
    for (int k = o.k_min; k <= o.k_max; ++k)
      tasks.push_back([&o, i, k] {
        const auto start = Clock::now();
        for (std::size_t attempt = 0;; ++attempt) {
          const Graph g = random_trial_graph(o.seed, static_cast<std::size_t>(i) * 64 + attempt, o.n_min, o.n_max);
          const auto es = g.edges();
          const std::size_t offset = splitmix64(o.seed + i) % es.size();
          for (std::size_t j = 0; j < es.size(); ++j) {
            const Edge e = es[(offset + j) % es.size()];
            if (!is_connected(delete_edge(g, e))) continue;
            const DeletionOutcome out = deletion_experiment(g, e, k);
            SweepRow row;
            row.instance = g.label() + ",e=" + std::to_string(e.u) + "-" + std::to_string(e.v);
            row.k = k;
            row.check = "edge-deletion-bound";
            row.expected = out.before;
            row.observed = out.after;
            row.bounds = {{"delta", out.delta}};
            row.status = out.bounds_hold ? RowStatus::Pass : RowStatus::Fail;
            row.detail = out.detail;
            row.elapsed_ms = ms_since(start);
            return row;
          }
        }
      });

  auto rows = parallel_map(tasks.size(), o.jobs, [&](std::size_t i) { return tasks[i](); });
  return {"deletion", std::move(rows)};
}

SweepReport run_bounds_suite(const SuiteOptions& o) {
  struct Job {
    int index, k;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < o.count; ++i) jobs.push_back({i, o.k_min + i % (o.k_max - o.k_min + 1)});
  auto parts = parallel_map(jobs.size(), o.jobs, [&](std::size_t i) {
    return bound_audit(random_trial_graph(o.seed, jobs[i].index, o.n_min, o.n_max), jobs[i].k);
  });
  SweepReport rep{"bounds", {}};
  for (auto& p : parts) rep.append(std::move(p));
  return rep;
}

SweepReport run_formula_suite(const SuiteOptions& o) {
  std::vector<std::function<SweepRow()>> tasks;
  for (int k = o.k_min; k <= o.k_max; ++k) {
    for (int n = 2; n <= o.n_max; ++n)
      tasks.push_back([n, k] { return formula_row("path:n=" + std::to_string(n), path(n), dim_k_path(n, k)); });
    for (int n = 3; n <= o.n_max; ++n)
      tasks.push_back(
          [n, k] { return formula_row("cycle:n=" + std::to_string(n), cycle(n), dim_k_cycle(n, k)); });
  }
  const int k_small = std::min(o.k_max, 3);
  for (int k = o.k_min; k <= k_small; ++k) {
    for (int n = 3; n <= 11; ++n)
      tasks.push_back(
          [n, k] { return formula_row("wheel:n=" + std::to_string(n), wheel(n), dim_k_wheel(n, k)); });
    for (int n = 1; n <= 11; ++n)
      tasks.push_back([n, k] { return formula_row("fan:n=" + std::to_string(n), fan(n), dim_k_fan(n, k)); });
    for (const auto& parts : partitions_with_two_parts(9)) {
      std::string id = "multipartite:parts=";
      for (std::size_t i = 0; i < parts.size(); ++i) id += (i ? "-" : "") + std::to_string(parts[i]);
      tasks.push_back([id, parts, k] {
        return formula_row(id, complete_multipartite(parts), dim_k_multipartite(parts, k));
      });
    }
    tasks.push_back([k] {
      FamilyValue fv = dim_k_petersen();
      fv.k = k;
      return formula_row("petersen", petersen(), fv);
    });
  }
  auto rows = parallel_map(tasks.size(), o.jobs, [&](std::size_t i) { return tasks[i](); });
  return {"formulas", std::move(rows)};
}

std::vector<std::string> suite_names() {
  return {"formulas", "characterization", "gap-lemmas", "monotonicity", "bounds", "deletion"};
}

SweepReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "gap-lemmas") return run_gap_lemma_suite(o);
  if (name == "monotonicity") return run_monotonicity_suite(o);
  if (name == "characterization") return run_characterization_suite(o);
  if (name == "deletion") return run_deletion_suite(o);
  if (name == "bounds") return run_bounds_suite(o);
  if (name == "formulas") return run_formula_suite(o);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace kdim
