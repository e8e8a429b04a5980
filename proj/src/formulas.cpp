#include "kdim/formulas.hpp"

#include <algorithm>
#include <string>

#include "kdim/errors.hpp"

namespace kdim {

namespace {

// Shared long-range case for paths and cycles on n >= 3k+4 vertices.
FamilyValue residue_case(std::string family, int n, int k) {
  const int modulus = 3 * k + 2;
  const int r = n % modulus;
  const int mid_lo = k + 3;
  const int mid_hi = (3 * k + 6) / 2 - 1;  // ceil((3k+5)/2) - 1; empty when k = 1
  FamilyValue fv{std::move(family), {n}, k, 0, {}};
  const std::string mod = " (mod " + std::to_string(modulus) + ")";
  if (r >= mid_lo && r <= mid_hi) {
    fv.value = (2 * n + 4 * k - 1) / modulus;
    fv.branch = "n = " + std::to_string(mid_lo) + ".." + std::to_string(mid_hi) + mod;
  } else if (r <= k + 2) {
    fv.value = (2 * n + 3 * k - 1) / modulus;
    fv.branch = "n = 0.." + std::to_string(k + 2) + mod;
  } else {
    fv.value = (2 * n + 3 * k - 1) / modulus;
    fv.branch = "n = " + std::to_string(mid_hi + 1) + ".." + std::to_string(3 * k + 1) + mod;
  }
  return fv;
}

void require_k(int k) {
  if (k < 1) throw InputError("radius k must be positive, got " + std::to_string(k));
}

}  // namespace

FamilyValue dim_k_path(int n, int k) {
  require_k(k);
  if (n < 2) throw InputError("path needs n >= 2");
  if (n <= k + 2) return {"path", {n}, k, 1, "n <= k+2"};
  if (n <= 3 * k + 3) return {"path", {n}, k, 2, "k+3 <= n <= 3k+3"};
  return residue_case("path", n, k);
}

FamilyValue dim_k_cycle(int n, int k) {
  require_k(k);
  if (n < 3) throw InputError("cycle needs n >= 3");
  if (n <= 3 * k + 3) return {"cycle", {n}, k, 2, "n <= 3k+3"};
  return residue_case("cycle", n, k);
}

FamilyValue dim_k_wheel(int n, int k) {
  require_k(k);
  if (n < 3) throw InputError("wheel needs a rim of n >= 3");
  if (n == 3 || n == 6) return {"wheel", {n}, k, 3, "n in {3,6}"};
  return {"wheel", {n}, k, (2 * n + 2) / 5, "floor((2n+2)/5)"};
}

FamilyValue dim_k_fan(int n, int k) {
  require_k(k);
  if (n < 1) throw InputError("fan needs n >= 1");
  if (n == 1) return {"fan", {n}, k, 1, "n = 1"};
  if (n == 2 || n == 3) return {"fan", {n}, k, 2, "n in {2,3}"};
  if (n == 6) return {"fan", {n}, k, 3, "n = 6"};
  return {"fan", {n}, k, (2 * n + 2) / 5, "floor((2n+2)/5)"};
}

FamilyValue dim_k_multipartite(const std::vector<int>& parts, int k) {
  require_k(k);
  const int m = static_cast<int>(parts.size());
  if (m < 2) throw InputError("complete multipartite graph needs at least 2 parts");
  int n = 0, singles = 0;
  for (int p : parts) {
    if (p < 1) throw InputError("every part needs at least one vertex");
    n += p;
    singles += p == 1;
  }
  if (singles == 0) return {"multipartite", parts, k, n - m, "s = 0"};
  return {"multipartite", parts, k, n - m + singles - 1, "s != 0"};
}

FamilyValue dim_k_complete(int n) {
  if (n < 2) throw InputError("complete graph needs n >= 2");
  return {"complete", {n}, 1, n - 1, "K_n"};
}

FamilyValue dim_k_petersen() { return {"petersen", {}, 1, 3, "diameter 2"}; }

std::string to_string(ExtremeClass::Kind kind) {
  switch (kind) {
    case ExtremeClass::Kind::DimOne: return "dim-one";
    case ExtremeClass::Kind::NMinusOne: return "n-minus-one";
    case ExtremeClass::Kind::NMinusTwo: return "n-minus-two";
    case ExtremeClass::Kind::Other: return "other";
  }
  return "other";
}

std::string to_string(ExtremeClass::Family family) {
  switch (family) {
    case ExtremeClass::Family::None: return "none";
    case ExtremeClass::Family::CompleteBipartite: return "K_{s,t}";
    case ExtremeClass::Family::CliqueJoinIndependent: return "K_s+co(K_t)";
    case ExtremeClass::Family::CliqueJoinK1UnionClique: return "K_s+(K_1uK_t)";
    case ExtremeClass::Family::P4Special: return "P_4";
  }
  return "none";
}

bool is_path_graph(const Graph& g) {
  const int n = g.order();
  if (g.size() != n - 1 || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_complete_graph(const Graph& g) {
  const int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

namespace {

// Sizes of the two colour classes when g is complete bipartite, else {0,0}.
std::pair<int, int> complete_bipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    bool ok = true;
    g.neighbors(u).for_each([&](int v) {
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        queue.push_back(v);
      } else if (side[v] == side[u]) {
        ok = false;
      }
    });
    if (!ok) return {0, 0};
  }
  const int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
  const int b = n - a;
  if (a == 0 || b == 0 || g.size() != a * b) return {0, 0};
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

ExtremeClass classify_extreme(const Graph& g, int k) {
  require_k(k);
  const int n = g.order();
  if (n < 2) throw InputError("classify_extreme needs n >= 2");
  if (!is_connected(g)) throw NotConnected("classify_extreme: graph is not connected");

  using Kind = ExtremeClass::Kind;
  using Family = ExtremeClass::Family;
  const bool path = is_path_graph(g);
  if (path && n <= k + 2) return {Kind::DimOne, Family::None, n, 0, 0};
  if (is_complete_graph(g)) return {Kind::NMinusOne, Family::None, 0, 0, 0};
  if (n < 4) return {};

  if (auto [s, t] = complete_bipartite_parts(g); s > 0)
    return {Kind::NMinusTwo, Family::CompleteBipartite, 0, s, t};

  std::vector<int> rest;
  int universal = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1)
      ++universal;
    else
      rest.push_back(v);
  }
  if (universal >= 1) {
    const Graph r = induced_subgraph(g, rest);
    const int m = r.order();
    if (m >= 2 && r.size() == 0) return {Kind::NMinusTwo, Family::CliqueJoinIndependent, 0, universal, m};
    int isolated = 0;
    bool clique_rest = true;
    for (int v = 0; v < m; ++v) {
      if (r.degree(v) == 0)
        ++isolated;
      else if (r.degree(v) != m - 2)
        clique_rest = false;
    }
    if (m >= 2 && isolated == 1 && clique_rest)
      return {Kind::NMinusTwo, Family::CliqueJoinK1UnionClique, 0, universal, m - 1};
  }

  if (k == 1 && path && n == 4) return {Kind::NMinusTwo, Family::P4Special, 0, 0, 0};
  return {};
}

int implied_dim(const ExtremeClass& c, int n) {
  switch (c.kind) {
    case ExtremeClass::Kind::DimOne: return 1;
    case ExtremeClass::Kind::NMinusOne: return n - 1;
    case ExtremeClass::Kind::NMinusTwo: return n - 2;
    case ExtremeClass::Kind::Other: return -1;
  }
  return -1;
}

}  // namespace kdim
