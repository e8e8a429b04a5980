#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdim/vertex_set.hpp"

namespace kdim {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is stored as one bit row per vertex. Rows are symmetric with a
 * clear diagonal; every constructor path goes through from_edge_list, which
 * enforces that.
 */
class Graph {
 public:
  /// Throws InputError on an out-of-range endpoint or a self-loop.
  /// Duplicate edges (in either orientation) collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges, std::string label = {});
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges, std::string label = {}) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;  ///< edge count
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  /// Adjacency equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  Graph() = default;
  std::vector<VertexSet> adj_;
  std::string label_;
};

/// Truncated distances d_k(u,v) = min(d(u,v), k+1); unreachable pairs read k+1.
class TruncatedMetric {
 public:
  TruncatedMetric(int k, int n, std::vector<int> d) : k_(k), n_(n), d_(std::move(d)) {}

  int k() const { return k_; }
  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  /// Sentinel value for "k+1 or more, including unreachable".
  int far() const { return k_ + 1; }

  friend bool operator==(const TruncatedMetric&, const TruncatedMetric&) = default;

 private:
  int k_;
  int n_;
  std::vector<int> d_;
};

TruncatedMetric truncated_metric(const Graph& g, int k);

/// Exact BFS distances; -1 marks unreachable pairs. Row-major n*n.
std::vector<int> distance_matrix(const Graph& g);

/// nullopt means infinite (g disconnected).
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Twin classes (N(u)-{w} = N(w)-{u}), as connected components of the
/// pairwise relation. Each class is sorted; classes are ordered by their
/// smallest member.
struct TwinPartition {
  std::vector<std::vector<int>> classes;
};
TwinPartition twin_partition(const Graph& g);
bool are_twins(const Graph& g, int u, int w);

/// Removes v and shifts every vertex above v down by one.
Graph delete_vertex(const Graph& g, int v);

/// delete_vertex plus the map new index -> original index.
struct VertexDeletion {
  Graph graph;
  std::vector<int> original;
};
VertexDeletion delete_vertex_mapped(const Graph& g, int v);

/// Throws InputError when the edge is absent.
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

/// g1 on 0..n1-1, g2 on n1..n1+n2-1, every cross pair joined.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Subgraph induced on the given vertices, relabelled in the order given.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace kdim
