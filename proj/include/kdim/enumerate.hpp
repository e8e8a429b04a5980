#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kdim/graph.hpp"

namespace kdim {

/// Largest order enumerate_connected accepts.
inline constexpr int kMaxEnumerationOrder = 7;

/**
 * Canonical code of a graph with at most 11 vertices: the upper-triangle
 * adjacency bits, maximised over every vertex ordering compatible with the
 * stable colour-refinement partition. Isomorphic graphs get equal codes.
 */
std::uint64_t canonical_code(const Graph& g);

/// Rebuilds the graph whose canonical ordering produced `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// One representative per isomorphism class of connected graphs of order n,
/// sorted by canonical code. InputError unless 1 <= n <= 7.
std::vector<Graph> enumerate_connected(int n);

/// Streaming form of enumerate_connected.
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);

}  // namespace kdim
