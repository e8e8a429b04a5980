#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kdim/graph.hpp"

namespace kdim {

/**
 * Hitting-set instance for dim_k: one entry per unordered pair x < y holding
 * R_k{x,y}, the vertices whose truncated distances to x and y differ. A set
 * is distance-k resolving iff it meets every R.
 */
struct PairSystem {
  struct Pair {
    int x = 0;
    int y = 0;
    VertexSet resolvers;
  };

  int k = 1;
  int n = 0;
  std::vector<Pair> pairs;             ///< lexicographic (x, y) order
  std::vector<std::vector<int>> forced;  ///< twin classes of size >= 2
  bool infeasible = false;             ///< some R is empty
};

PairSystem build_pair_system(const Graph& g, int k);
PairSystem build_pair_system(const TruncatedMetric& d);

struct ResolveCheck {
  bool resolving = true;
  std::optional<Edge> unresolved;  ///< lexicographically smallest failing pair
  explicit operator bool() const { return resolving; }
};

ResolveCheck is_resolving(const Graph& g, std::span<const int> set, int k);
ResolveCheck is_resolving(const TruncatedMetric& d, std::span<const int> set);

/// (d_k(v, s_0), d_k(v, s_1), ...)
std::vector<int> code_vector(const Graph& g, std::span<const int> ordered, int v, int k);

// --- bounds -------------------------------------------------------------

/// Sum over twin classes of (|C| - 1).
int twin_lower_bound(const Graph& g);

/// n - min(d, k+1).
int diameter_upper_bound(int n, int d, int k);

/// n - (d + 1 - floor((2(d+1) + 4k - 1) / (3k + 2))).
int refined_upper_bound(int n, int d, int k);

/// Largest order of a graph with diameter d and metric dimension beta.
/// Saturates at UINT64_MAX.
std::uint64_t order_bound(int d, int beta);

/// Largest order of a graph with dim_j = beta.
std::uint64_t max_order(int j, int beta);

/// Greedy set cover on the dual: repeatedly take the vertex hitting the most
/// unresolved pairs, lowest index on ties. InputError on an infeasible system.
VertexSet greedy_upper(const PairSystem& ps);

// --- exact search -------------------------------------------------------

enum class Method { Exact, Formula, GreedyUpper, BoundOnly };
std::string to_string(Method m);

struct Certificate {
  int n = 0;
  int k = 1;            ///< radius as requested
  int k_effective = 1;  ///< radius actually searched after the diameter cap
  int dim = 0;
  std::vector<int> set;
  std::map<std::pair<int, int>, int> witnesses;  ///< pair -> lowest resolver in set
  Method method = Method::Exact;
  double elapsed_ms = 0;
  std::uint64_t nodes = 0;
  struct Bounds {
    int twin = 0;
    int lower = 0;  ///< best proven lower bound (twin, matching, or exact)
    std::optional<int> diameter;
    std::optional<int> refined;
  } bounds;
};

nlohmann::json to_json(const Certificate& c);

struct SolveOptions {
  /// Branch-and-bound node limit; nullopt means unlimited.
  std::optional<std::uint64_t> node_budget;
  /// Permit disconnected input (unreachable distances read k+1).
  bool allow_disconnected = false;
  /// Search at min(k, diam-1) instead of k. Same answer, smaller metric;
  /// turned off when the k-independence itself is under test.
  bool cap_radius = true;
};

/**
 * Exact dim_k(G) by branch and bound over the pair system.
 *
 * Branches on the unresolved pair with the fewest remaining resolvers,
 * trying resolvers lowest-index first and excluding earlier siblings.
 * Prunes with max(twin residue, disjoint-pair packing). The returned set is
 * the first optimum met in that order, so results are deterministic.
 *
 * Throws NotConnected for disconnected g unless allow_disconnected; throws
 * InputError for n < 2 or k < 1. When the node budget runs out the best
 * incumbent is returned with method GreedyUpper.
 */
Certificate solve_dim_k(const Graph& g, int k, const SolveOptions& opts = {});

/// Classical metric dimension: solve_dim_k at k = max(diam - 1, 1).
Certificate solve_dim(const Graph& g, const SolveOptions& opts = {});

/// Calls visit on every distance-k resolving set of exactly `size` vertices
/// (sorted ascending, in lexicographic order). Returns the number visited.
std::uint64_t for_each_resolving_set(const PairSystem& ps, int size,
                                     const std::function<void(const std::vector<int>&)>& visit);

}  // namespace kdim
