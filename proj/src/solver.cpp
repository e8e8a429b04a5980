#include "kdim/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <string>

#include "kdim/errors.hpp"

namespace kdim {

PairSystem build_pair_system(const TruncatedMetric& d) {
  const int n = d.order();
  PairSystem ps;
  ps.k = d.k();
  ps.n = n;
  ps.pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      VertexSet r(n);
      for (int z = 0; z < n; ++z)
        if (d(x, z) != d(y, z)) r.set(z);
      // R = {x, y} exactly when x and y are twins.
      if (r.count() == 2) {
        int a = find(x), b = find(y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
      if (r.none()) ps.infeasible = true;
      ps.pairs.push_back({x, y, std::move(r)});
    }
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  for (auto& grp : groups)
    if (grp.size() >= 2) ps.forced.push_back(std::move(grp));
  return ps;
}

PairSystem build_pair_system(const Graph& g, int k) { return build_pair_system(truncated_metric(g, k)); }

ResolveCheck is_resolving(const TruncatedMetric& d, std::span<const int> set) {
  const int n = d.order();
  for (int v : set)
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool hit = false;
      for (int s : set)
        if (d(x, s) != d(y, s)) {
          hit = true;
          break;
        }
      if (!hit) return {false, Edge{x, y}};
    }
  return {};
}

ResolveCheck is_resolving(const Graph& g, std::span<const int> set, int k) {
  return is_resolving(truncated_metric(g, k), set);
}

std::vector<int> code_vector(const Graph& g, std::span<const int> ordered, int v, int k) {
  if (ordered.empty()) throw InputError("code_vector needs a nonempty landmark list");
  const TruncatedMetric d = truncated_metric(g, k);
  std::vector<int> out;
  out.reserve(ordered.size());
  for (int s : ordered) out.push_back(d(v, s));
  return out;
}

int twin_lower_bound(const Graph& g) {
  int total = 0;
  for (const auto& c : twin_partition(g).classes) total += static_cast<int>(c.size()) - 1;
  return total;
}

int diameter_upper_bound(int n, int d, int k) {
  if (n < 2 || d < 1 || k < 1) throw InputError("diameter_upper_bound needs n>=2, d>=1, k>=1");
  return n - std::min(d, k + 1);
}

int refined_upper_bound(int n, int d, int k) {
  if (n < 2 || d < 1 || k < 1) throw InputError("refined_upper_bound needs n>=2, d>=1, k>=1");
  const int path_dim = (2 * (d + 1) + 4 * k - 1) / (3 * k + 2);
  return n - (d + 1 - path_dim);
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}
std::uint64_t sat_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

// (floor(2D/3) + 1)^beta + beta * sum_{i=1}^{ceil(D/3)} (2i-1)^(beta-1)
std::uint64_t hernando_order(int diam, int beta) {
  std::uint64_t total = sat_pow(static_cast<std::uint64_t>(2 * diam / 3 + 1), beta);
  std::uint64_t sum = 0;
  for (int i = 1; i <= (diam + 2) / 3; ++i) sum = sat_add(sum, sat_pow(2 * i - 1, beta - 1));
  return sat_add(total, sat_mul(static_cast<std::uint64_t>(beta), sum));
}

}  // namespace

std::uint64_t order_bound(int d, int beta) {
  if (d < 1 || beta < 1) throw InputError("order_bound needs d>=1, beta>=1");
  return hernando_order(d, beta);
}

std::uint64_t max_order(int j, int beta) {
  if (j < 1 || beta < 1) throw InputError("max_order needs j>=1, beta>=1");
  return hernando_order(j + 1, beta);
}

VertexSet greedy_upper(const PairSystem& ps) {
  if (ps.infeasible) throw InputError("pair system is infeasible (some pair has no resolver)");
  VertexSet chosen(ps.n);
  std::vector<char> hit(ps.pairs.size(), 0);
  std::size_t open = ps.pairs.size();
  while (open > 0) {
    std::vector<int> gain(ps.n, 0);
    for (std::size_t p = 0; p < ps.pairs.size(); ++p)
      if (!hit[p]) ps.pairs[p].resolvers.for_each([&](int v) { ++gain[v]; });
    const int pick = static_cast<int>(std::max_element(gain.begin(), gain.end()) - gain.begin());
    chosen.set(pick);
    for (std::size_t p = 0; p < ps.pairs.size(); ++p)
      if (!hit[p] && ps.pairs[p].resolvers.test(pick)) {
        hit[p] = 1;
        --open;
      }
  }
  return chosen;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Formula: return "formula";
    case Method::GreedyUpper: return "greedy-upper";
    case Method::BoundOnly: return "bound-only";
  }
  return "unknown";
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json bounds = {{"twin", c.bounds.twin}, {"lower", c.bounds.lower}};
  bounds["diameter"] = c.bounds.diameter ? nlohmann::json(*c.bounds.diameter) : nlohmann::json(nullptr);
  bounds["refined"] = c.bounds.refined ? nlohmann::json(*c.bounds.refined) : nlohmann::json(nullptr);
  return {{"n", c.n},
          {"k", c.k},
          {"k_effective", c.k_effective},
          {"dim", c.dim},
          {"set", c.set},
          {"method", to_string(c.method)},
          {"elapsed_ms", c.elapsed_ms},
          {"nodes", c.nodes},
          {"bounds", bounds}};
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const PairSystem& ps, std::optional<std::uint64_t> budget)
      : ps_(ps), budget_(budget), chosen_(ps.n), excluded_(ps.n) {
    order_.resize(ps.pairs.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return ps.pairs[a].resolvers.count() < ps.pairs[b].resolvers.count();
    });
    for (const auto& cls : ps.forced) forced_.push_back(VertexSet::from_range(ps.n, cls));
  }

  int root_lower_bound() {
    Node node;
    scan(node);
    return node.lower;
  }

  /// Searches for a hitting set of size <= cap. Returns false if the budget ran out.
  bool run(int cap, int stop_at) {
    best_size_ = cap + 1;
    stop_at_ = stop_at;
    dfs();
    return !aborted_;
  }

  const std::optional<VertexSet>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Node {
    bool dead = false;
    bool covered = true;
    std::size_t branch_pair = 0;
    int lower = 0;
  };

  // One pass over the open pairs: detects dead ends, picks the branching pair
  // (fewest live resolvers, first in |R| order), and computes the bound.
  void scan(Node& node) {
    int best_live = std::numeric_limits<int>::max();
    VertexSet packed(ps_.n);
    int packing = 0;
    for (std::size_t idx : order_) {
      const VertexSet& r = ps_.pairs[idx].resolvers;
      if (r.intersects(chosen_)) continue;
      node.covered = false;
      const int live = r.count_minus(excluded_);
      if (live == 0) {
        node.dead = true;
        return;
      }
      if (live < best_live) {
        best_live = live;
        node.branch_pair = idx;
      }
      if (!r.intersects(packed)) {
        ++packing;
        packed.unite_minus(r, excluded_);
      }
    }
    int twin = 0;
    for (const VertexSet& cls : forced_) {
      const int need = cls.count() - 1 - (cls & chosen_).count();
      if (need > 0) twin += need;
    }
    node.lower = std::max(packing, twin);
  }

  void dfs() {
    if (aborted_ || done_) return;
    if (budget_ && nodes_ >= *budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    Node node;
    scan(node);
    if (node.dead) return;
    const int size = chosen_.count();
    if (node.covered) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen_;
        if (best_size_ <= stop_at_) done_ = true;
      }
      return;
    }
    if (size + node.lower >= best_size_) return;

    const VertexSet& r = ps_.pairs[node.branch_pair].resolvers;
    std::vector<int> tried;
    for (int v = r.first_minus(excluded_); v >= 0; v = r.next(v)) {
      if (excluded_.test(v)) continue;
      chosen_.set(v);
      dfs();
      chosen_.reset(v);
      if (aborted_ || done_) break;
      excluded_.set(v);
      tried.push_back(v);
      if (size + 1 >= best_size_) break;
    }
    for (int v : tried) excluded_.reset(v);
  }

  const PairSystem& ps_;
  std::optional<std::uint64_t> budget_;
  std::vector<std::size_t> order_;
  std::vector<VertexSet> forced_;
  VertexSet chosen_;
  VertexSet excluded_;
  std::optional<VertexSet> best_;
  int best_size_ = 0;
  int stop_at_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

}  // namespace

Certificate solve_dim_k(const Graph& g, int k, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.order();
  if (n < 2) throw InputError("solve_dim_k needs at least 2 vertices");
  if (k < 1) throw InputError("radius k must be positive, got " + std::to_string(k));
  const std::optional<int> diam = diameter(g);
  if (!diam && !opts.allow_disconnected) throw NotConnected("solve_dim_k: graph is not connected");

  Certificate cert;
  cert.n = n;
  cert.k = k;
  // dim_k = dim_{d-1} for k >= d-1; unreachable pairs forbid the cap.
  cert.k_effective = (diam && opts.cap_radius) ? (*diam >= 2 ? std::min(k, *diam - 1) : 1) : k;
  cert.bounds.twin = twin_lower_bound(g);
  if (diam) {
    cert.bounds.diameter = diameter_upper_bound(n, *diam, k);
    cert.bounds.refined = refined_upper_bound(n, *diam, k);
  }

  const PairSystem ps = build_pair_system(g, cert.k_effective);
  const VertexSet greedy = greedy_upper(ps);

  BranchAndBound search(ps, opts.node_budget);
  const int root_lower = search.root_lower_bound();
  const bool complete = search.run(greedy.count(), root_lower);

  VertexSet chosen = search.best() ? *search.best() : greedy;
  cert.set = chosen.to_vector();
  cert.dim = static_cast<int>(cert.set.size());
  cert.nodes = search.nodes();
  cert.method = complete ? Method::Exact : Method::GreedyUpper;
  cert.bounds.lower = complete ? cert.dim : std::max(root_lower, cert.bounds.twin);
  for (const auto& p : ps.pairs) {
    int w = (p.resolvers & chosen).first();
    cert.witnesses[{p.x, p.y}] = w;
  }
  cert.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

Certificate solve_dim(const Graph& g, const SolveOptions& opts) {
  const std::optional<int> diam = diameter(g);
  if (!diam) throw NotConnected("solve_dim: graph is not connected");
  return solve_dim_k(g, std::max(*diam - 1, 1), opts);
}

std::uint64_t for_each_resolving_set(const PairSystem& ps, int size,
                                     const std::function<void(const std::vector<int>&)>& visit) {
  if (size < 0 || size > ps.n) return 0;
  std::vector<int> last(ps.pairs.size());
  for (std::size_t p = 0; p < ps.pairs.size(); ++p) last[p] = ps.pairs[p].resolvers.last();

  std::uint64_t count = 0;
  std::vector<int> pick;
  VertexSet chosen(ps.n);
  auto recurse = [&](auto&& self, int from) -> void {
    // A pair not yet hit whose resolvers all lie below `from` can never be hit.
    bool covered = true;
    for (std::size_t p = 0; p < ps.pairs.size(); ++p) {
      if (ps.pairs[p].resolvers.intersects(chosen)) continue;
      covered = false;
      if (last[p] < from) return;
    }
    const int remaining = size - static_cast<int>(pick.size());
    if (remaining == 0) {
      if (covered) {
        ++count;
        visit(pick);
      }
      return;
    }
    for (int v = from; v <= ps.n - remaining; ++v) {
      pick.push_back(v);
      chosen.set(v);
      self(self, v + 1);
      chosen.reset(v);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return count;
}

}  // namespace kdim
