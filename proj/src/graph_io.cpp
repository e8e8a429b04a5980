#include "kdim/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "kdim/errors.hpp"

namespace kdim {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_record(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') return true;
  }
  return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  if (!next_record(in, line)) throw FormatError("edge list: missing 'n m' header");
  std::istringstream header(line);
  long n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 1 || m < 0)
    throw FormatError("edge list: malformed header '" + line + "'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    if (!next_record(in, line))
      throw FormatError("edge list: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    std::istringstream row(line);
    long u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      throw FormatError("edge list: malformed edge line '" + line + "'");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (next_record(in, line))
    throw FormatError("edge list: trailing content after " + std::to_string(m) + " edges");
  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (Edge e : es) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw FormatError("graph6: byte outside printable range");

  std::size_t pos = 0;
  auto take = [&]() { return static_cast<unsigned>(text[pos++] - 63); };
  long n = 0;
  if (text[0] != 126) {
    n = take();
  } else {
    if (text.size() < 4 || text[1] == 126) throw FormatError("graph6: unsupported order prefix");
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take();
  }
  if (n < 1) throw FormatError("graph6: order must be at least 1");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t want = (bits + 5) / 6;
  if (text.size() - pos != want)
    throw FormatError("graph6: expected " + std::to_string(want) + " data bytes, got " +
                      std::to_string(text.size() - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      unsigned byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) edges.push_back({i, j});
    }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 258047) throw FormatError("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  if (format == GraphFormat::EdgeList) return parse_edge_list(in);
  std::string line;
  std::getline(in, line);
  return parse_graph6(line);
}

void write_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << (format == GraphFormat::EdgeList ? to_edge_list(g) : to_graph6(g) + "\n");
}

}  // namespace kdim
