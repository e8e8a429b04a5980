#include "kdim/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "kdim/errors.hpp"

namespace kdim {

namespace {

// Stable colour refinement seeded with degrees. Colours are ranks of sorted
// signatures, so they do not depend on vertex labels.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> nb;
      g.neighbors(v).for_each([&](int u) { nb.push_back(colour[u]); });
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return colour;
}

std::uint64_t code_under(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InputError("canonical_code supports at most 11 vertices");
  const std::vector<int> colour = refine_colours(g);

  std::vector<std::vector<int>> cells(*std::max_element(colour.begin(), colour.end()) + 1);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);

  std::uint64_t best = 0;
  bool have = false;
  std::vector<int> order;
  order.reserve(n);
  // Every ordering that lists cells by colour, each cell permuted freely.
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      std::uint64_t c = code_under(g, order);
      if (!have || c > best) best = c, have = true;
      return;
    }
    std::vector<int>& members = cells[cell];
    std::sort(members.begin(), members.end());
    do {
      order.insert(order.end(), members.begin(), members.end());
      self(self, cell + 1);
      order.resize(order.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  recurse(recurse, 0);
  return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1U) edges.push_back({i, j});
    }
  return Graph::from_edge_list(n, edges);
}

void for_each_connected(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw InputError("enumeration order must be in [1," + std::to_string(kMaxEnumerationOrder) +
                     "], got " + std::to_string(n));
  // All graphs (connected or not) of order m, grown one vertex at a time.
  std::vector<std::uint64_t> level{0};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(m - 1, code);
      const auto base_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1U << (m - 1)); ++mask) {
        std::vector<Edge> es = base_edges;
        for (int u = 0; u < m - 1; ++u)
          if ((mask >> u) & 1U) es.push_back({u, m - 1});
        next.push_back(canonical_code(Graph::from_edge_list(m, es)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    if (is_connected(g)) visit(g);
  }
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace kdim
