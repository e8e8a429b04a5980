#include "kdim/families.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

#include "kdim/errors.hpp"
#include "kdim/solver.hpp"

namespace kdim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph::from_edge_list(n, es, "path");
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, es, "cycle");
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph::from_edge_list(n, es, "complete");
}

Graph empty_graph(int n) { return Graph::from_edge_list(n, {}, "empty"); }

Graph complete_multipartite(const std::vector<int>& parts) {
  require(parts.size() >= 2, "complete multipartite graph needs at least 2 parts");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "every part needs at least one vertex");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) es.push_back({i, j});
  return Graph::from_edge_list(n, es, "multipartite");
}

Graph wheel(int n) { return join(cycle(n), complete(1)).with_label("wheel"); }

Graph fan(int n) { return join(path(n), complete(1)).with_label("fan"); }

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({5 + i, 5 + (i + 2) % 5});
    es.push_back({i, 5 + i});
  }
  return Graph::from_edge_list(10, es, "petersen");
}

Graph grid(int m, int n) {
  require(m >= 1 && n >= 1, "grid needs m, n >= 1");
  std::vector<Edge> es;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      if (r + 1 < m) es.push_back({r * n + c, (r + 1) * n + c});
      if (c + 1 < n) es.push_back({r * n + c, r * n + c + 1});
    }
  return Graph::from_edge_list(m * n, es, "grid");
}

Graph subdivided_complete(int m) {
  require(m >= 3, "subdivided_complete needs m >= 3");
  std::vector<Edge> es = complete(m + 2).edges();
  std::erase(es, Edge{0, 1});
  es.push_back({0, m + 2});
  es.push_back({1, m + 2});
  return Graph::from_edge_list(m + 3, es, "subdivided_complete");
}

GraphWithSet ternary_extremal(int beta, TernaryRemoval rule) {
  require(beta >= 1 && beta <= 6, "ternary_extremal needs 1 <= beta <= 6");
  int count = 1;
  for (int i = 0; i < beta; ++i) count *= 3;

  // digit(c, i): i-th ternary digit of c, most significant first.
  auto digit = [&](int c, int i) {
    for (int j = beta - 1; j > i; --j) c /= 3;
    return c % 3;
  };
  const int n_full = 2 * beta + count;
  std::vector<Edge> es;
  for (int i = 0; i < beta; ++i) es.push_back({2 * i, 2 * i + 1});
  for (int c = 0; c < count; ++c)
    for (int i = 0; i < beta; ++i) {
      if (digit(c, i) == 0) es.push_back({2 * beta + c, 2 * i});
      if (digit(c, i) == 1) es.push_back({2 * beta + c, 2 * i + 1});
    }
  const Graph full = Graph::from_edge_list(n_full, es);

  std::vector<int> landmarks;
  for (int i = 0; i < beta; ++i) landmarks.push_back(2 * i);
  auto code = [&](const TruncatedMetric& d, int v) {
    std::vector<int> out;
    for (int s : landmarks) out.push_back(d(v, s));
    return out;
  };
  // Keeps every vertex of `full` except the c's in `removed` (sorted).
  auto without = [&](const std::vector<int>& removed) {
    std::vector<int> keep;
    for (int v = 0; v < n_full; ++v)
      if (!std::binary_search(removed.begin(), removed.end(), v)) keep.push_back(v);
    return keep;
  };

  const TruncatedMetric d_full = truncated_metric(full, 2);
  std::set<std::vector<int>> b_codes;
  for (int i = 0; i < beta; ++i) b_codes.insert(code(d_full, 2 * i + 1));
  std::vector<int> removed;
  for (int c = 0; c < count; ++c)
    if (b_codes.contains(code(d_full, 2 * beta + c))) removed.push_back(2 * beta + c);
  if (rule == TernaryRemoval::UnprunedCodes)
    return {induced_subgraph(full, without(removed)).with_label("ternary"), landmarks};

  // Self-consistent: each removed c must share its code with some b_i in the
  // graph that remains, and the landmarks must resolve that graph. Deleting
  // c's can lengthen b-to-a paths, so the unpruned choice is tried first and
  // then one partner per b_i (digit i = 0, no other 0 digit) in lexicographic order.
  auto consistent = [&](const std::vector<int>& r) {
    const std::vector<int> keep = without(r);
    const Graph g = induced_subgraph(full, keep);
    std::vector<int> index(n_full, -1);
    for (std::size_t j = 0; j < keep.size(); ++j) index[keep[j]] = static_cast<int>(j);
    std::vector<int> local;
    for (int s : landmarks) local.push_back(index[s]);
    if (!is_resolving(g, local, 2)) return false;
    const TruncatedMetric d = truncated_metric(g, 2);
    std::set<std::vector<int>> bs;
    for (int i = 0; i < beta; ++i) bs.insert(code(d, index[2 * i + 1]));
    for (int c : r) {
      std::vector<int> back = r;
      std::erase(back, c);
      const std::vector<int> keep_c = without(back);
      const Graph gc = induced_subgraph(full, keep_c);
      const int pos = static_cast<int>(std::lower_bound(keep_c.begin(), keep_c.end(), c) - keep_c.begin());
      const TruncatedMetric dc = truncated_metric(gc, 2);
      std::vector<int> cc;
      for (int s : landmarks) cc.push_back(dc(pos, s));
      if (!bs.contains(cc)) return false;
    }
    return true;
  };
  if (consistent(removed)) return {induced_subgraph(full, without(removed)).with_label("ternary"), landmarks};

  std::vector<std::vector<int>> partners(beta);
  for (int c = 0; c < count; ++c)
    for (int i = 0; i < beta; ++i) {
      bool ok = digit(c, i) == 0;
      for (int j = 0; j < beta && ok; ++j) ok = j == i || digit(c, j) != 0;
      if (ok) partners[i].push_back(2 * beta + c);
    }
  std::vector<std::size_t> pick(beta, 0);
  while (true) {
    std::vector<int> r;
    for (int i = 0; i < beta; ++i) r.push_back(partners[i][pick[i]]);
    std::sort(r.begin(), r.end());
    if (consistent(r)) return {induced_subgraph(full, without(r)).with_label("ternary"), landmarks};
    int i = beta - 1;
    while (i >= 0 && ++pick[i] == partners[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  throw std::logic_error("ternary_extremal: no self-consistent removal found");
}

Graph b_graph(const Graph& g1, const std::vector<std::string>& strings, const std::optional<Graph>& g2) {
  const int beta = g1.order();
  require(beta <= 20, "b_graph supports at most 20 landmark vertices");
  std::set<std::string> seen;
  std::vector<int> value;
  for (const auto& s : strings) {
    require(static_cast<int>(s.size()) == beta, "binary string '" + s + "' has the wrong length");
    require(s.find_first_not_of("01") == std::string::npos, "'" + s + "' is not a binary string");
    require(seen.insert(s).second, "duplicate binary string '" + s + "'");
    value.push_back(static_cast<int>(std::stoul(s, nullptr, 2)));
  }
  if (g2) require(g2->order() == (1 << beta), "g2 must have 2^beta vertices");

  const int m = static_cast<int>(strings.size());
  std::vector<Edge> es = g1.edges();
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < beta; ++i)
      if (strings[j][i] == '1') es.push_back({i, beta + j});
    if (g2)
      for (int l = j + 1; l < m; ++l)
        if (g2->adjacent(value[j], value[l])) es.push_back({beta + j, beta + l});
  }
  return Graph::from_edge_list(beta + m, es, "b_graph");
}

RatioFamily ratio_family(int m) {
  require(m >= 3, "ratio_family needs m >= 3");
  const int h_order = m * (m + 1) / 2;
  // w_{i,j} (1 <= j <= i <= m) sits at i(i-1)/2 + (j-1).
  auto w = [](int i, int j) { return i * (i - 1) / 2 + (j - 1); };
  std::vector<Edge> es = complete(h_order).edges();
  std::vector<int> u;
  for (int i = 1; i <= m; ++i) {
    const int ui = h_order + i - 1;
    u.push_back(ui);
    for (int j = 1; j <= i; ++j) es.push_back({ui, w(i, j)});
    for (int j = i + 1; j <= m; ++j) es.push_back({ui, w(j, i)});
  }
  return {complete(h_order), Graph::from_edge_list(h_order + m, es, "ratio"), u};
}

GraphWithSet grid_resolving_set(int k) {
  require(k >= 2 && k <= 3, "grid_resolving_set needs 2 <= k <= 3");
  const int side = k * k;
  std::set<int> points;
  auto add = [&](int x, int y) {
    x = std::clamp(x, 1, side);
    y = std::clamp(y, 1, side);
    points.insert((x - 1) * side + (y - 1));
  };
  for (int i = 0; i <= k + 1; ++i)
    for (int j = 0; j <= k + 1; ++j) add(1 + (k - 1) * i, 1 + (k - 1) * j);
  const int offset = (k + 1) / 2;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) add(offset + (k - 1) * i, offset + (k - 1) * j);
  return {grid(side, side), std::vector<int>(points.begin(), points.end())};
}

std::vector<int> cycle_optimal_set(int n, int k) {
  require(k >= 1, "radius k must be positive");
  require(n >= 3 * k + 4, "cycle_optimal_set needs n >= 3k+4");
  const int block = 3 * k + 2;
  const int x = n / block;
  const int r = n % block;
  std::vector<int> s;
  if (r <= k + 2) {
    // Pairs at distance 2k+1 inside each block, shifted by one after the first.
    s = {0, 2 * k + 2};
    for (int i = 1; i < x; ++i) {
      s.push_back(block * i + 1);
      s.push_back(block * i + 2 * k + 2);
    }
    if (r >= 2) s.push_back(block * x + 1);
  } else if (r <= 3 * k + 1) {
    // Both the middle residues (k+3..ceil((3k+5)/2)-1) and the upper ones use one end of
    // every block plus the vertex 2k+1 further on.
    for (int i = 0; i < x; ++i) {
      s.push_back(block * i);
      s.push_back(block * i + 2 * k + 1);
    }
    s.push_back(block * x);
    s.push_back(std::min(n - 1, block * x + 2 * k + 1));
  } else {
    throw std::logic_error("cycle_optimal_set: no residue case matched");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<int> path_optimal_set(int n, int k) {
  require(k >= 1, "radius k must be positive");
  require(n >= 2, "path_optimal_set needs n >= 2");
  if (n <= k + 2) return {0};
  if (n <= 3 * k + 3) return {k, std::min(2 * k + 1, n - 1)};

  // Cut C_n inside a gap of the cycle construction; gaps of 2k+1 vertices
  // first, since cutting one of those in the middle always works.
  const std::vector<int> s = cycle_optimal_set(n, k);
  const TruncatedMetric d = truncated_metric(path(n), k);
  std::vector<int> cuts;  // vertex that becomes u_0 of the path
  const int m = static_cast<int>(s.size());
  for (int want : {2 * k + 1, -1})
    for (int i = 0; i < m; ++i) {
      const int from = s[i];
      const int to = s[(i + 1) % m];
      const int gap = ((to - from - 1) % n + n) % n;
      if (want >= 0 && gap != want) continue;
      cuts.push_back((from + 1 + (gap + 1) / 2) % n);
    }
  for (int c = 0; c < n; ++c) cuts.push_back(c);
  for (int start : cuts) {
    std::vector<int> mapped;
    for (int v : s) mapped.push_back(((v - start) % n + n) % n);
    std::sort(mapped.begin(), mapped.end());
    if (is_resolving(d, mapped)) return mapped;
  }
  throw std::logic_error("path_optimal_set: no cut of the cycle construction resolves P_n");
}

GraphWithVertex vdeletion_family(int a) {
  require(a >= 2, "vdeletion_family needs a >= 2");
  const int v = 3 * a + 1;
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i) {
    const int x = 1 + 3 * i, y = x + 1, z = x + 2;
    es.insert(es.end(), {{x, y}, {y, z}, {x, z}, {0, x}, {0, y}, {0, z}, {v, y}});
  }
  return {Graph::from_edge_list(3 * a + 2, es, "vdeletion"), v};
}

GraphWithVertex wheel_deletion_instance(int k, int x) {
  require(k >= 2 && x >= 1, "wheel_deletion_instance needs k >= 2, x >= 1");
  const int rim = 5 * (3 * k + 2) * x;
  return {wheel(rim), rim};
}

GraphWithEdge edge_sharpness_family(int a, int b, int c) {
  require(a >= 2 && b >= 2 && c >= 2, "edge_sharpness_family needs a, b, c >= 2");
  std::vector<Edge> es{{0, 1}, {1, 2}};
  int next = 3;
  const int x1 = next;
  for (int i = 0; i < a; ++i) es.push_back({0, next++});
  for (int i = 0; i < b; ++i) es.push_back({1, next++});
  const int z1 = next;
  for (int i = 0; i < c; ++i) es.push_back({2, next++});
  es.push_back({x1, z1});
  return {Graph::from_edge_list(next, es, "edge_sharpness"), Edge{x1, z1}};
}

GraphWithEdge edge_gap_family(int a) {
  require(a >= 2, "edge_gap_family needs a >= 2");
  const int h = 0, v = 1;
  std::vector<Edge> es{{h, v}};
  for (int i = 0; i < a; ++i) {
    const int z = 2 + 5 * i, zp = z + 1, x = z + 2, y = z + 3, t = z + 4;
    es.insert(es.end(), {{h, z}, {h, zp}, {x, z}, {x, zp}, {y, z}, {y, zp}, {t, zp}, {t, v}});
  }
  return {Graph::from_edge_list(5 * a + 2, es, "edge_gap"), Edge{h, v}};
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
  require(n >= 1, "random_connected needs n >= 1");
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v});
  const Graph tree = Graph::from_edge_list(n, es);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && unit() < edge_prob) es.push_back({u, v});
  return Graph::from_edge_list(n, es, "random");
}

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw InputError("empty family name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw InputError("family parameter '" + std::string(item) + "' is not key=value");
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

int FamilySpec::get_int(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw InputError("family '" + name + "' needs parameter '" + key + "'");
  int value = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("parameter " + key + "='" + s + "' is not an integer");
  return value;
}

int FamilySpec::get_int(const std::string& key, int fallback) const {
  return params.contains(key) ? get_int(key) : fallback;
}

std::string FamilySpec::to_string() const {
  std::string out = name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

namespace {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '-')) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw InputError("parts='" + text + "' must be dash-separated integers");
    parts.push_back(v);
  }
  return parts;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
  const std::string& f = spec.name;
  const bool drop = spec.get_int("delete", 0) != 0;
  Graph g = [&]() -> Graph {
    if (f == "path") return path(spec.get_int("n"));
    if (f == "cycle") return cycle(spec.get_int("n"));
    if (f == "complete") return complete(spec.get_int("n"));
    if (f == "wheel") return wheel(spec.get_int("n"));
    if (f == "fan") return fan(spec.get_int("n"));
    if (f == "petersen") return petersen();
    if (f == "grid") return grid(spec.get_int("m"), spec.get_int("n"));
    if (f == "multipartite") {
      auto it = spec.params.find("parts");
      if (it == spec.params.end()) throw InputError("family 'multipartite' needs parameter 'parts'");
      return complete_multipartite(parse_parts(it->second));
    }
    if (f == "subdivided_complete") return subdivided_complete(spec.get_int("m"));
    if (f == "ternary") return ternary_extremal(spec.get_int("beta")).graph;
    if (f == "ratio") return ratio_family(spec.get_int("m")).g;
    if (f == "ratio_h") return ratio_family(spec.get_int("m")).h;
    if (f == "grid_resolving") return grid_resolving_set(spec.get_int("k")).graph;
    if (f == "vdeletion") {
      auto [g, v] = vdeletion_family(spec.get_int("a"));
      return drop ? delete_vertex(g, v) : g;
    }
    if (f == "wheel_deletion") {
      auto [g, v] = wheel_deletion_instance(spec.get_int("k"), spec.get_int("x"));
      return drop ? delete_vertex(g, v) : g;
    }
    if (f == "edge_sharpness") {
      auto [g, e] = edge_sharpness_family(spec.get_int("a"), spec.get_int("b"), spec.get_int("c"));
      return drop ? delete_edge(g, e) : g;
    }
    if (f == "edge_gap") {
      auto [g, e] = edge_gap_family(spec.get_int("a"));
      return drop ? delete_edge(g, e) : g;
    }
    if (f == "random")
      return random_connected(spec.get_int("n"), spec.get_int("p", 30) / 100.0,
                              static_cast<std::uint64_t>(spec.get_int("seed", 1)));
    throw InputError("unknown family '" + f + "'");
  }();
  return g.with_label(spec.to_string());
}

Graph build_family(std::string_view text) { return build_family(FamilySpec::parse(text)); }

std::vector<std::string> family_names() {
  return {"path",   "cycle",   "complete",       "wheel",     "fan",        "petersen",
          "grid",   "multipartite", "subdivided_complete", "ternary", "ratio", "ratio_h",
          "grid_resolving", "vdeletion", "wheel_deletion", "edge_sharpness", "edge_gap", "random"};
}

}  // namespace kdim
