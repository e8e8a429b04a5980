#include "kdim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kdim/errors.hpp"

namespace kdim {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges, std::string label) {
  if (n < 1) throw InputError("graph order must be at least 1, got " + std::to_string(n));
  Graph g;
  g.adj_.assign(n, VertexSet(n));
  g.label_ = std::move(label);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n));
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].set(e.v);
    g.adj_[e.v].set(e.u);
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.push_back({u, v});
    });
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

namespace {

// BFS from src; dist entries stay at `unset` when not reached within max_depth.
void bfs(const Graph& g, int src, int max_depth, int unset, int* dist) {
  const int n = g.order();
  std::fill(dist, dist + n, unset);
  dist[src] = 0;
  VertexSet seen(n);
  seen.set(src);
  VertexSet frontier(n);
  frontier.set(src);
  for (int depth = 1; depth <= max_depth && frontier.any(); ++depth) {
    VertexSet next(n);
    frontier.for_each([&](int u) { next |= g.neighbors(u); });
    next -= seen;
    next.for_each([&](int v) { dist[v] = depth; });
    seen |= next;
    frontier = std::move(next);
  }
}

}  // namespace

TruncatedMetric truncated_metric(const Graph& g, int k) {
  if (k < 1) throw InputError("radius k must be positive, got " + std::to_string(k));
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) bfs(g, s, k, k + 1, d.data() + static_cast<std::size_t>(s) * n);
  return TruncatedMetric(k, n, std::move(d));
}

std::vector<int> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) bfs(g, s, n, -1, d.data() + static_cast<std::size_t>(s) * n);
  return d;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int x : distance_matrix(g)) {
    if (x < 0) return std::nullopt;
    best = std::max(best, x);
  }
  return best;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(n);
  bfs(g, 0, n, -1, d.data());
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool are_twins(const Graph& g, int u, int w) {
  if (u == w) return false;
  VertexSet nu = g.neighbors(u);
  VertexSet nw = g.neighbors(w);
  nu.reset(w);
  nw.reset(u);
  return nu == nw;
}

TwinPartition twin_partition(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (are_twins(g, u, w)) {
        int a = find(u), b = find(w);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  TwinPartition out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[slot[r]].push_back(v);
  }
  return out;
}

VertexDeletion delete_vertex_mapped(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
  if (n == 1) throw InputError("cannot delete the only vertex of a graph");
  std::vector<int> keep;
  for (int u = 0; u < n; ++u)
    if (u != v) keep.push_back(u);
  Graph h = induced_subgraph(g, keep).with_label(g.label());
  return {std::move(h), std::move(keep)};
}

Graph delete_vertex(const Graph& g, int v) { return delete_vertex_mapped(g, v).graph; }

Graph delete_edge(const Graph& g, Edge e) {
  const int n = g.order();
  if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v))
    throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not in the graph");
  std::vector<Edge> es = g.edges();
  Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
  std::erase(es, key);
  return Graph::from_edge_list(n, es, g.label());
}

Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> es = g.edges();
  es.push_back(e);
  return Graph::from_edge_list(g.order(), es, g.label());
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> es = g1.edges();
  for (Edge e : g2.edges()) es.push_back({e.u + n1, e.v + n1});
  return Graph::from_edge_list(n1 + g2.order(), es);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> es = disjoint_union(g1, g2).edges();
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) es.push_back({u, n1 + v});
  return Graph::from_edge_list(n1 + n2, es);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  std::vector<Edge> es;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(vertices[i], vertices[j])) es.push_back({i, j});
  return Graph::from_edge_list(m, es);
}

}  // namespace kdim
