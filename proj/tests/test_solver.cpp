#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kdim/enumerate.hpp"
#include "kdim/errors.hpp"
#include "kdim/families.hpp"
#include "kdim/solver.hpp"
#include "oracles.hpp"

using namespace kdim;

TEST_CASE("pair system") {
  const PairSystem ps = build_pair_system(path(4), 1);
  CHECK(ps.n == 4);
  CHECK(ps.pairs.size() == 6);
  CHECK_FALSE(ps.infeasible);
  CHECK(ps.forced.empty());
  // Pairs are in lexicographic order. R_1{0,3}: d_1 from 0 is (0,1,2,2),
  // from 3 is (2,2,1,0), so every vertex separates them.
  CHECK(ps.pairs.front().x == 0);
  CHECK(ps.pairs.front().y == 1);
  CHECK(ps.pairs.back().x == 2);
  CHECK(ps.pairs.back().y == 3);
  CHECK(ps.pairs[2].x == 0);
  CHECK(ps.pairs[2].y == 3);
  CHECK(ps.pairs[2].resolvers.count() == 4);

  const PairSystem kn = build_pair_system(complete(4), 2);
  REQUIRE(kn.forced.size() == 1);
  CHECK(kn.forced[0] == std::vector<int>{0, 1, 2, 3});
  for (const auto& p : kn.pairs) CHECK(p.resolvers.count() == 2);
}

TEST_CASE("resolvers match the definition") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = random_connected(8, 0.3, seed);
    for (int k = 1; k <= 3; ++k) {
      const auto d = oracle::truncated(g, k);
      for (const auto& p : build_pair_system(g, k).pairs)
        for (int z = 0; z < 8; ++z) REQUIRE(p.resolvers.test(z) == (d[p.x][z] != d[p.y][z]));
    }
  }
}

TEST_CASE("is_resolving") {
  const std::vector<int> s01 = {0, 1};
  CHECK(is_resolving(cycle(4), s01, 1).resolving);
  CHECK(oracle::resolves(cycle(4), s01, 1));

  const Graph pet = petersen();
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  CHECK(is_resolving(pet, all, 1).resolving);

  const std::vector<int> mid = {3};
  const auto r = is_resolving(path(7), mid, 1);
  CHECK_FALSE(r.resolving);
  REQUIRE(r.unresolved.has_value());
  CHECK(r.unresolved->u < r.unresolved->v);
  CHECK(code_vector(path(7), mid, 0, 1) == code_vector(path(7), mid, 6, 1));
  CHECK_FALSE(oracle::resolves(path(7), mid, 1));

  const std::vector<int> empty;
  CHECK(is_resolving(Graph::from_edge_list(1, {}), empty, 1).resolving);
  CHECK_FALSE(is_resolving(path(2), empty, 1).resolving);
}

TEST_CASE("code vectors") {
  const std::vector<int> s01 = {0, 1};
  for (int k = 1; k <= 3; ++k) CHECK(code_vector(complete(3), s01, 2, k) == std::vector<int>{1, 1});
  const std::vector<int> s0 = {0};
  CHECK(code_vector(path(4), s0, 3, 1) == std::vector<int>{2});
  CHECK(code_vector(path(4), s0, 3, 2) == std::vector<int>{3});
}

TEST_CASE("solver on named graphs") {
  CHECK(solve_dim_k(petersen(), 1).dim == 3);
  for (int k = 1; k <= 4; ++k) CHECK(solve_dim_k(complete(5), k).dim == 4);
  CHECK(solve_dim_k(cycle(13), 2).dim == 4);
  CHECK(oracle::dim_k(cycle(13), 2) == 4);

  CHECK(solve_dim(path(9)).dim == 1);
  CHECK(solve_dim(grid(3, 4)).dim == 2);
  CHECK(solve_dim(complete_multipartite({2, 3})).dim == 3);
}

TEST_CASE("solver agrees with subset enumeration on every connected graph up to order 6") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n))
      for (int k = 1; k <= 3; ++k) {
        const Certificate c = solve_dim_k(g, k);
        REQUIRE(c.dim == oracle::dim_k(g, k));
        REQUIRE(c.method == Method::Exact);
        REQUIRE(oracle::resolves(g, c.set, k));
      }
}

TEST_CASE("solver agrees with subset enumeration on random graphs up to order 12") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 7 + static_cast<int>(seed % 6);
    const Graph g = random_connected(n, 0.1 + 0.02 * static_cast<double>(seed % 10), seed);
    for (int k = 1; k <= 4; ++k) {
      const Certificate c = solve_dim_k(g, k);
      INFO("seed " << seed << " k " << k);
      REQUIRE(c.dim == oracle::dim_k(g, k));
      REQUIRE(static_cast<int>(c.set.size()) == c.dim);
      REQUIRE(std::is_sorted(c.set.begin(), c.set.end()));
    }
  }
}

TEST_CASE("certificate contents") {
  const Certificate c = solve_dim_k(cycle(10), 1);
  CHECK(c.n == 10);
  CHECK(c.k == 1);
  CHECK(c.dim == 4);
  CHECK(c.bounds.lower == 4);
  CHECK(c.bounds.diameter == diameter_upper_bound(10, 5, 1));
  CHECK(c.bounds.refined == refined_upper_bound(10, 5, 1));
  CHECK(c.witnesses.size() == 45);
  for (const auto& [pair, w] : c.witnesses) {
    CHECK(std::find(c.set.begin(), c.set.end(), w) != c.set.end());
    const auto d = truncated_metric(cycle(10), 1);
    CHECK(d(pair.first, w) != d(pair.second, w));
  }
  const auto j = to_json(c);
  CHECK(j["dim"] == 4);
  CHECK(j["method"] == "exact");
  CHECK(j["set"].size() == 4);
}

TEST_CASE("radius cap keeps the answer and records the searched radius") {
  const Certificate capped = solve_dim_k(path(5), 10);
  CHECK(capped.k == 10);
  CHECK(capped.k_effective == 3);
  SolveOptions raw;
  raw.cap_radius = false;
  const Certificate full = solve_dim_k(path(5), 10, raw);
  CHECK(full.k_effective == 10);
  CHECK(full.dim == capped.dim);
}

TEST_CASE("solver is deterministic") {
  const Graph g = random_connected(11, 0.25, 99);
  const Certificate a = solve_dim_k(g, 2), b = solve_dim_k(g, 2);
  CHECK(a.set == b.set);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("errors and disconnected input") {
  const Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(solve_dim_k(two_k2, 1), NotConnected);
  CHECK_THROWS_AS(solve_dim_k(path(3), 0), InputError);
  CHECK_THROWS_AS(solve_dim_k(Graph::from_edge_list(1, {}), 1), InputError);

  SolveOptions opts;
  opts.allow_disconnected = true;
  const Certificate c = solve_dim_k(two_k2, 1, opts);
  CHECK(c.dim == oracle::dim_k(two_k2, 1));
  CHECK(c.dim == 2);
}

TEST_CASE("node budget falls back to the greedy incumbent") {
  SolveOptions opts;
  opts.node_budget = 1;
  const Graph g = cycle(16);
  const Certificate c = solve_dim_k(g, 1, opts);
  CHECK(c.method == Method::GreedyUpper);
  CHECK(c.dim >= solve_dim_k(g, 1).dim);
  CHECK(is_resolving(g, c.set, 1).resolving);
  CHECK(c.bounds.lower <= solve_dim_k(g, 1).dim);
}

TEST_CASE("greedy upper bound") {
  CHECK(greedy_upper(build_pair_system(complete(6), 1)).count() == 5);

  const auto p4 = greedy_upper(build_pair_system(path(4), 3));
  CHECK(p4.count() == 1);
  CHECK(is_resolving(path(4), p4.to_vector(), 3).resolving);

  const auto c10 = greedy_upper(build_pair_system(cycle(10), 1));
  CHECK(c10.count() <= 6);
  CHECK(is_resolving(cycle(10), c10.to_vector(), 1).resolving);

  PairSystem bad = build_pair_system(path(3), 1);
  bad.infeasible = true;
  CHECK_THROWS_AS(greedy_upper(bad), InputError);
}

TEST_CASE("sandwich: twin <= exact <= greedy <= n-1") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_connected(9, 0.35, seed);
    for (int k = 1; k <= 3; ++k) {
      const int exact = solve_dim_k(g, k).dim;
      const int greedy = greedy_upper(build_pair_system(g, k)).count();
      CHECK(twin_lower_bound(g) <= exact);
      CHECK(exact <= greedy);
      CHECK(greedy <= 8);
    }
  }
}

TEST_CASE("twin lower bound") {
  CHECK(twin_lower_bound(complete(7)) == 6);
  CHECK(twin_lower_bound(Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == 3);
  CHECK(twin_lower_bound(edge_gap_family(2).graph) >= 2);
  CHECK(twin_lower_bound(path(6)) == 0);
}

TEST_CASE("diameter and refined bounds") {
  CHECK(diameter_upper_bound(10, 3, 1) == 8);
  CHECK(diameter_upper_bound(10, 3, 5) == 7);
  for (int n = 2; n <= 8; ++n) {
    CHECK(diameter_upper_bound(n, 1, 1) == n - 1);
    CHECK(solve_dim_k(complete(n), 1).dim == diameter_upper_bound(n, 1, 1));
    CHECK(refined_upper_bound(n, 1, 1) >= n - 1);
  }
  CHECK(refined_upper_bound(20, 9, 1) == 14);
}

TEST_CASE("order bounds") {
  for (int beta = 1; beta <= 6; ++beta) {
    CHECK(max_order(1, beta) == static_cast<std::uint64_t>(beta + (1 << beta)));
    std::uint64_t p3 = 1;
    for (int i = 0; i < beta; ++i) p3 *= 3;
    CHECK(max_order(2, beta) == p3 + beta);
  }
  CHECK(max_order(4, 1) == 6);
  // dim_4(P_6) = 1 and P_6 has exactly that order.
  CHECK(solve_dim_k(path(6), 4).dim == 1);
  // Met with equality by K_3 (d = 1, dim 2) and P_4 (d = 3, dim 1).
  CHECK(order_bound(1, 2) == 3);
  CHECK(order_bound(3, 1) == 4);
  CHECK(max_order(1000, 60) == UINT64_MAX);
}

TEST_CASE("enumerating resolving sets") {
  const PairSystem ps = build_pair_system(cycle(6), 1);
  const int dim = solve_dim_k(cycle(6), 1).dim;
  std::vector<std::vector<int>> seen;
  const auto count = for_each_resolving_set(ps, dim, [&](const std::vector<int>& s) { seen.push_back(s); });
  CHECK(count == seen.size());
  CHECK(seen == oracle::all_minimum(cycle(6), 1));
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(for_each_resolving_set(ps, dim - 1, [](const std::vector<int>&) {}) == 0);
}
