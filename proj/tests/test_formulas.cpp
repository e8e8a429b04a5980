#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kdim/enumerate.hpp"
#include "kdim/errors.hpp"
#include "kdim/families.hpp"
#include "kdim/formulas.hpp"
#include "oracles.hpp"

using namespace kdim;

TEST_CASE("path formula examples") {
  CHECK(dim_k_path(4, 2).value == 1);
  CHECK(dim_k_path(10, 1).value == 4);
  CHECK(dim_k_path(13, 2).value == 4);
  CHECK(dim_k_path(2, 1).value == 1);
  CHECK(dim_k_path(7, 2).value == 2);
}

TEST_CASE("cycle formula examples") {
  CHECK(dim_k_cycle(8, 2).value == 2);
  CHECK(dim_k_cycle(10, 1).value == 4);
  CHECK(dim_k_cycle(13, 2).value == 4);
  CHECK(dim_k_cycle(3, 1).value == 2);
}

TEST_CASE("path and cycle formulas match subset enumeration") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2; n <= 16; ++n) {
      INFO("path n=" << n << " k=" << k);
      CHECK(dim_k_path(n, k).value == oracle::dim_k(path(n), k));
    }
    for (int n = 3; n <= 16; ++n) {
      INFO("cycle n=" << n << " k=" << k);
      CHECK(dim_k_cycle(n, k).value == oracle::dim_k(cycle(n), k));
    }
  }
}

TEST_CASE("every residue branch fires somewhere") {
  std::set<std::string> branches;
  for (int k = 1; k <= 4; ++k)
    for (int n = 3; n <= 60; ++n) {
      branches.insert(dim_k_cycle(n, k).branch);
      branches.insert(dim_k_path(std::max(n, 2), k).branch);
    }
  CHECK(branches.size() >= 8);
}

TEST_CASE("wheel and fan formulas") {
  CHECK(dim_k_wheel(3, 1).value == 3);
  CHECK(dim_k_wheel(6, 2).value == 3);
  CHECK(dim_k_wheel(10, 3).value == 4);
  CHECK(dim_k_fan(1, 1).value == 1);
  CHECK(dim_k_fan(6, 2).value == 3);
  CHECK(dim_k_fan(10, 1).value == 4);
  for (int k = 1; k <= 3; ++k) {
    for (int n = 3; n <= 11; ++n) CHECK(dim_k_wheel(n, k).value == oracle::dim_k(wheel(n), k));
    for (int n = 1; n <= 11; ++n) CHECK(dim_k_fan(n, k).value == oracle::dim_k(fan(n), k));
  }
}

TEST_CASE("multipartite formula") {
  CHECK(dim_k_multipartite({2, 3}, 1).value == 3);
  CHECK(dim_k_multipartite({1, 1, 1, 1, 1}, 2).value == 4);
  CHECK(dim_k_multipartite({1, 2, 2}, 1).value == 2);
  CHECK(oracle::dim_k(complete_multipartite({1, 2, 2}), 1) == 2);
  const std::vector<std::vector<int>> lists = {{1, 1}, {1, 3}, {2, 2}, {1, 1, 2}, {3, 3, 1}, {1, 1, 1, 4}, {2, 2, 2}};
  for (const auto& parts : lists)
    for (int k = 1; k <= 3; ++k)
      CHECK(dim_k_multipartite(parts, k).value == oracle::dim_k(complete_multipartite(parts), k));
  CHECK_THROWS_AS(dim_k_multipartite({3}, 1), InputError);
}

TEST_CASE("complete graphs and Petersen") {
  CHECK(dim_k_complete(2).value == 1);
  CHECK(dim_k_complete(7).value == 6);
  CHECK(dim_k_petersen().value == 3);
  for (int k = 1; k <= 3; ++k) CHECK(oracle::dim_k(petersen(), k) == 3);
}

TEST_CASE("formulas reject out-of-range arguments") {
  CHECK_THROWS_AS(dim_k_path(1, 1), InputError);
  CHECK_THROWS_AS(dim_k_cycle(2, 1), InputError);
  CHECK_THROWS_AS(dim_k_path(5, 0), InputError);
  CHECK_THROWS_AS(dim_k_wheel(2, 1), InputError);
  CHECK_THROWS_AS(dim_k_fan(0, 1), InputError);
}

TEST_CASE("classify_extreme examples") {
  auto c = classify_extreme(path(4), 1);
  CHECK(c.kind == ExtremeClass::Kind::NMinusTwo);
  CHECK(c.family == ExtremeClass::Family::P4Special);

  c = classify_extreme(path(4), 2);
  CHECK(c.kind == ExtremeClass::Kind::DimOne);
  CHECK(c.path_order == 4);

  c = classify_extreme(complete_multipartite({2, 3}), 3);
  CHECK(c.kind == ExtremeClass::Kind::NMinusTwo);
  CHECK(c.family == ExtremeClass::Family::CompleteBipartite);

  CHECK(classify_extreme(complete(5), 2).kind == ExtremeClass::Kind::NMinusOne);
  CHECK(classify_extreme(path(2), 1).kind == ExtremeClass::Kind::DimOne);
  CHECK(classify_extreme(cycle(6), 1).kind == ExtremeClass::Kind::Other);

  // K_2 + complement(K_3): two universal vertices over an independent triple.
  c = classify_extreme(join(complete(2), empty_graph(3)), 1);
  CHECK(c.kind == ExtremeClass::Kind::NMinusTwo);
  CHECK(c.family == ExtremeClass::Family::CliqueJoinIndependent);

  // K_1 + (K_1 u K_3).
  c = classify_extreme(join(complete(1), disjoint_union(complete(1), complete(3))), 2);
  CHECK(c.kind == ExtremeClass::Kind::NMinusTwo);
  CHECK(c.family == ExtremeClass::Family::CliqueJoinK1UnionClique);

  CHECK_THROWS_AS(classify_extreme(Graph::from_edge_list(4, {{0, 1}, {2, 3}}), 1), NotConnected);
  CHECK_THROWS_AS(classify_extreme(Graph::from_edge_list(1, {}), 1), InputError);
}

TEST_CASE("classification agrees with subset enumeration on small graphs") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n))
      for (int k = 1; k <= 3; ++k) {
        const ExtremeClass c = classify_extreme(g, k);
        const int exact = oracle::dim_k(g, k);
        const int implied = implied_dim(c, n);
        if (implied >= 0) {
          REQUIRE(implied == exact);
        } else {
          REQUIRE(exact != 1);
          REQUIRE(exact != n - 1);
          if (n >= 4) REQUIRE(exact != n - 2);
        }
      }
}

TEST_CASE("path and complete recognisers") {
  CHECK(is_path_graph(path(6)));
  CHECK_FALSE(is_path_graph(cycle(6)));
  CHECK(is_path_graph(Graph::from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}})));
  CHECK(is_complete_graph(complete(4)));
  CHECK_FALSE(is_complete_graph(cycle(4)));
}
