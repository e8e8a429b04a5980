#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdim/graph.hpp"

namespace kdim {

// Vertex numbering conventions:
//   path/cycle: u_0..u_{n-1} in order around the path or cycle.
//   wheel/fan: join order, so the rim/path is 0..n-1 and the hub is n.
//   grid(m,n): (row, col) -> row*n + col, 0-based.
//   Deletion families: hub(s) first, then groups in index order.

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph wheel(int n);
Graph fan(int n);
Graph petersen();
Graph grid(int m, int n);

/// K_{m+2} with one edge subdivided once; order m+3.
Graph subdivided_complete(int m);

struct GraphWithSet {
  Graph graph;
  std::vector<int> set;
};

/// Which c vertices ternary_extremal deletes.
enum class TernaryRemoval {
  /// c's whose distance-2 code equals some b_i's code, codes taken in the
  /// graph before any deletion. Fails to resolve at beta = 2.
  UnprunedCodes,
  /// Removed c's match some b_i's code in the graph that remains, and the
  /// landmarks resolve it. Same as UnprunedCodes whenever that works.
  SelfConsistent,
};

/**
 * Order beta + 3^beta graph with a distance-2 resolving set of size beta.
 * Vertices: a_i = 2i, b_i = 2i+1 for i < beta, then the surviving ternary
 * vertices c in increasing ternary value (digit i of c is the i-th most
 * significant). c ~ a_i on digit 0, c ~ b_i on digit 1. The all-2 ternary
 * vertex has no edges, so the graph is disconnected. set = {a_1..a_beta}.
 * Requires 1 <= beta <= 6.
 */
GraphWithSet ternary_extremal(int beta, TernaryRemoval rule = TernaryRemoval::SelfConsistent);

/**
 * B(G1, G2) restricted to the given binary strings. g1 supplies v_0..v_{beta-1};
 * strings follow as u_b in the given order, u_b ~ v_i iff digit i of b is 1.
 * g2, when given, has 2^beta vertices indexed by the binary value of b (first
 * digit most significant) and contributes the u-side edges.
 */
Graph b_graph(const Graph& g1, const std::vector<std::string>& strings,
              const std::optional<Graph>& g2 = std::nullopt);

struct RatioFamily {
  Graph h;                 ///< K_{m(m+1)/2}, vertices 0..m(m+1)/2-1
  Graph g;                 ///< h plus u_1..u_m
  std::vector<int> u;      ///< indices of u_1..u_m in g
};
/// Requires m >= 3.
RatioFamily ratio_family(int m);

/// grid(k^2, k^2) and the union of the two (k-1)-spaced lattices. 2 <= k <= 3.
GraphWithSet grid_resolving_set(int k);

/// Explicit minimum distance-k resolving set of C_n for n >= 3k+4.
std::vector<int> cycle_optimal_set(int n, int k);
/// Explicit minimum distance-k resolving set of P_n for n >= 2.
std::vector<int> path_optimal_set(int n, int k);

struct GraphWithVertex {
  Graph graph;
  int vertex = 0;
};
struct GraphWithEdge {
  Graph graph;
  Edge edge;
};

/**
 * Hub 0 joined to a disjoint triangles {x_i, y_i, z_i} (vertices 1+3i..3+3i),
 * plus v = 3a+1 adjacent to y_i of each triangle. Requires a >= 2.
 */
GraphWithVertex vdeletion_family(int a);

/// wheel(5(3k+2)x) with its hub. Requires k >= 2, x >= 1.
GraphWithVertex wheel_deletion_instance(int k, int x);

/**
 * Path h1-h2-h3 (vertices 0,1,2), leaves x_1..x_a on h1, y_1..y_b on h2,
 * z_1..z_c on h3, and the edge e = x_1 z_1. Requires a, b, c >= 2.
 */
GraphWithEdge edge_sharpness_family(int a, int b, int c);

/**
 * Hub h = 0, v = 1, e = hv. For each i: z_i, z'_i adjacent to h; x_i, y_i
 * adjacent to exactly z_i and z'_i; t_i adjacent to z'_i and v. Block i uses
 * vertices 2+5i.. in the order z, z', x, y, t. Requires a >= 2.
 */
GraphWithEdge edge_gap_family(int a);

/// Connected graph: random spanning tree plus each remaining pair with
/// probability edge_prob. Deterministic for a given seed.
Graph random_connected(int n, double edge_prob, std::uint64_t seed);

/**
 * Parses "name" or "name:key=value,key=value" and builds the graph. Keys are
 * integers except "parts" (dash-separated sizes, e.g. parts=2-3-4). The key
 * "delete=1" removes the family's distinguished vertex or edge.
 */
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;

  static FamilySpec parse(std::string_view text);
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  std::string to_string() const;
};

Graph build_family(const FamilySpec& spec);
Graph build_family(std::string_view text);

/// Names accepted by build_family.
std::vector<std::string> family_names();

}  // namespace kdim
