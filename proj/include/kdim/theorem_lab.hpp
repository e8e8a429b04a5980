#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "kdim/graph.hpp"

namespace kdim {

// --- gaps ---------------------------------------------------------------

enum class Walk { Cycle, Path };

struct Gap {
  int size = 0;
  int after = 0;  ///< member of M immediately before the gap
};

/// Runs of non-members between consecutive members of M on C_n or P_n
/// (vertices u_0..u_{n-1} in order). Paths also carry the end runs.
struct GapProfile {
  Walk kind = Walk::Cycle;
  int n = 0;
  std::vector<Gap> gaps;  ///< |M| gaps on a cycle, |M|-1 interior gaps on a path
  std::optional<int> initial;
  std::optional<int> terminal;
  int union_gap = 0;  ///< initial + terminal (paths only)
};

/// InputError when |M| < 2 or a vertex is out of range.
GapProfile gap_profile(Walk kind, int n, std::span<const int> members);

/// One message per gap condition the profile breaks; empty when all hold.
std::vector<std::string> gap_lemma_violations(const GapProfile& p, int k);

// --- reports ------------------------------------------------------------

enum class RowStatus { Pass, Fail, Skipped, Vacuous };
std::string to_string(RowStatus s);

struct SweepRow {
  std::string instance;
  int k = 0;
  std::string check;
  std::optional<int> expected;
  std::optional<int> observed;
  std::vector<std::pair<std::string, std::int64_t>> bounds;
  RowStatus status = RowStatus::Pass;
  std::string detail;
  double elapsed_ms = 0;
};

struct SweepReport {
  std::string suite;
  std::vector<SweepRow> rows;

  struct Summary {
    int total = 0, passed = 0, failed = 0, skipped = 0, vacuous = 0;
  };
  Summary summary() const;
  bool ok() const { return summary().failed == 0; }
  void append(SweepReport other);
};

/// One header line plus one line per row. Timings are omitted unless asked
/// for, so reruns produce identical text.
std::string to_csv(const SweepReport& r, bool with_timing = false);
nlohmann::json to_json(const SweepReport& r, bool with_timing = false);

// --- checks -------------------------------------------------------------

/// Every minimum distance-k resolving set of C_n satisfies the cycle gap
/// lemma. One row per (n, k): expected = number of optima, observed = number
/// passing. Needs n >= 2k+3 and n <= 16.
SweepReport check_gap_lemma_cycle(int n, int k);
/// Path version; needs n >= k+3 and n <= 16.
SweepReport check_gap_lemma_path(int n, int k);

/// dim <= dim_{k_max} <= ... <= dim_1, each step one row.
SweepReport check_monotonicity(const Graph& g, int k_max);

/// dim_k = dim for k >= diam-1, and for every k in 1..3 when diam <= 2.
SweepReport check_diameter_collapse(const Graph& g);

/// classify_extreme against exact dim_k over all connected graphs of order n.
SweepReport characterization_sweep(int n, int k, int jobs = 1);

using GraphElement = std::variant<int, Edge>;

struct DeletionOutcome {
  bool skipped = false;  ///< deletion disconnects the graph
  int before = 0;
  int after = 0;
  int delta = 0;  ///< after - before
  bool bounds_hold = true;
  std::string detail;
};

/// Exact dim_k before and after deleting a vertex or an edge. Edge deletions
/// are checked against delta <= 2 (k >= 3), delta <= 1 (k <= 2) and, for
/// k = 1, delta >= -1.
DeletionOutcome deletion_experiment(const Graph& g, const GraphElement& element, int k);

/// twin <= exact <= min(diameter bound, refined bound), n <= max_order(k, exact).
SweepReport bound_audit(const Graph& g, int k);

// --- suites -------------------------------------------------------------

struct SuiteOptions {
  int n_min = 4;
  int n_max = 9;
  int k_min = 1;
  int k_max = 3;
  int count = 50;
  std::uint64_t seed = 2024;
  int jobs = 1;
};

/// Seeded connected graph for trial `index`; order drawn from [n_min, n_max].
Graph random_trial_graph(std::uint64_t seed, std::size_t index, int n_min, int n_max);

SweepReport run_gap_lemma_suite(const SuiteOptions& o);
SweepReport run_monotonicity_suite(const SuiteOptions& o);
SweepReport run_characterization_suite(const SuiteOptions& o);
SweepReport run_deletion_suite(const SuiteOptions& o);
SweepReport run_bounds_suite(const SuiteOptions& o);
SweepReport run_formula_suite(const SuiteOptions& o);

/// Suite names in the order `sweep` runs them.
std::vector<std::string> suite_names();
SweepReport run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace kdim
