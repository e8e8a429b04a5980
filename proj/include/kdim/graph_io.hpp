#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "kdim/graph.hpp"

namespace kdim {

enum class GraphFormat { EdgeList, Graph6 };

/// "edgelist"/"edge-list" or "graph6"; anything else is an InputError.
GraphFormat parse_graph_format(std::string_view name);

// Edge list: first line "n m", then m lines "u v", 0-indexed. Blank lines and
// lines starting with # are skipped.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// graph6 as used by nauty/geng. Only the printable body; a ">>graph6<<"
// header is accepted on input and never written.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

Graph read_graph(const std::filesystem::path& path, GraphFormat format);
void write_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format);

}  // namespace kdim
