#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kdim/errors.hpp"
#include "kdim/families.hpp"
#include "kdim/graph.hpp"
#include "oracles.hpp"

using namespace kdim;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph::from_edge_list(n, es);
}

}  // namespace

TEST_CASE("vertex set operations") {
  VertexSet a(130), b(130);
  a.set(0), a.set(64), a.set(129);
  b.set(64), b.set(100);
  CHECK(a.count() == 3);
  CHECK(a.first() == 0);
  CHECK(a.next(0) == 64);
  CHECK(a.next(64) == 129);
  CHECK(a.next(129) == -1);
  CHECK(a.intersects(b));
  CHECK(a.count_minus(b) == 2);
  CHECK(a.first_minus(b) == 0);
  VertexSet c = a;
  c &= b;
  CHECK(c.to_vector() == std::vector<int>{64});
  CHECK(c.is_subset_of(a));
  c.reset(64);
  CHECK(c.none());
}

TEST_CASE("from_edge_list") {
  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.order() == 4);
  CHECK(p4.size() == 3);
  CHECK(p4 == path(4));

  const Graph k1 = Graph::from_edge_list(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph c3 = Graph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.size() == 3);
  CHECK(c3 == cycle(3));

  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 2}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), InputError);
}

TEST_CASE("truncated metric") {
  const Graph p4 = path(4);
  CHECK(truncated_metric(p4, 1)(0, 3) == 2);
  CHECK(truncated_metric(p4, 3)(0, 3) == 3);
  const Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  const auto d = truncated_metric(two_k2, 2);
  CHECK(d(0, 2) == 3);
  CHECK(d(1, 3) == 3);
  CHECK(d(0, 1) == 1);
  CHECK(d.far() == 3);
}

TEST_CASE("truncated metric agrees with Floyd-Warshall and is monotone in k") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_graph(9, 0.25, seed);
    for (int k = 1; k <= 5; ++k) {
      const auto ref = oracle::truncated(g, k);
      const auto d = truncated_metric(g, k);
      const auto d_next = truncated_metric(g, k + 1);
      for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) {
          REQUIRE(d(u, v) == ref[u][v]);
          REQUIRE(d(u, v) <= d_next(u, v));
          REQUIRE(d(u, v) == d(v, u));
        }
    }
  }
}

TEST_CASE("diameter and connectivity") {
  CHECK(diameter(petersen()) == 2);
  CHECK(diameter(complete(5)) == 1);
  CHECK(diameter(path(7)) == 6);
  CHECK(diameter(Graph::from_edge_list(1, {})) == 0);
  CHECK_FALSE(diameter(Graph::from_edge_list(4, {{0, 1}, {2, 3}})).has_value());

  CHECK(is_connected(path(4)));
  CHECK_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph::from_edge_list(1, {})));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(8, 0.3, seed);
    CHECK(is_connected(g) == oracle::connected(g));
    if (is_connected(g)) CHECK(*diameter(g) == oracle::diameter(g));
  }
}

TEST_CASE("distance matrix marks unreachable pairs") {
  const auto d = distance_matrix(Graph::from_edge_list(3, {{0, 1}}));
  CHECK(d[0 * 3 + 1] == 1);
  CHECK(d[0 * 3 + 2] == -1);
  CHECK(d[2 * 3 + 2] == 0);
}

TEST_CASE("twin partition") {
  const Graph star = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto tp = twin_partition(star);
  REQUIRE(tp.classes.size() == 2);
  CHECK(tp.classes[0] == std::vector<int>{0});
  CHECK(tp.classes[1] == std::vector<int>{1, 2, 3, 4});

  tp = twin_partition(complete(6));
  REQUIRE(tp.classes.size() == 1);
  CHECK(tp.classes[0].size() == 6);

  tp = twin_partition(path(5));
  CHECK(tp.classes.size() == 5);
  for (int u = 0; u < 5; ++u)
    for (int w = u + 1; w < 5; ++w) CHECK_FALSE(are_twins(path(5), u, w));

  // K_2 is a pair of adjacent twins.
  CHECK(are_twins(path(2), 0, 1));
}

TEST_CASE("twins have equal truncated distances to every third vertex") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_graph(8, 0.45, seed);
    const auto d = oracle::truncated(g, 2);
    for (const auto& cls : twin_partition(g).classes)
      for (std::size_t i = 1; i < cls.size(); ++i) {
        REQUIRE(are_twins(g, cls[0], cls[i]));
        for (int z = 0; z < 8; ++z)
          if (z != cls[0] && z != cls[i]) REQUIRE(d[cls[0]][z] == d[cls[i]][z]);
      }
  }
}

TEST_CASE("vertex and edge deletion") {
  CHECK(delete_edge(cycle(4), {3, 0}) == Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(delete_vertex(complete(4), 2) == complete(3));
  const Graph split = delete_vertex(path(3), 1);
  CHECK(split.order() == 2);
  CHECK(split.size() == 0);
  CHECK_THROWS_AS(delete_edge(path(4), {0, 2}), InputError);

  const auto mapped = delete_vertex_mapped(path(5), 1);
  CHECK(mapped.original == std::vector<int>{0, 2, 3, 4});
  CHECK(mapped.graph.adjacent(1, 2));  // original 2-3
}

TEST_CASE("delete then add edge is the identity") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(7, 0.5, seed);
    for (const Edge e : g.edges()) {
      const Graph h = delete_edge(g, e);
      CHECK(h.size() == g.size() - 1);
      CHECK_FALSE(h.adjacent(e.u, e.v));
      CHECK(add_edge(h, {e.v, e.u}) == g);
    }
  }
}

TEST_CASE("join and disjoint union") {
  CHECK(join(cycle(5), Graph::from_edge_list(1, {})) == wheel(5));
  CHECK(join(Graph::from_edge_list(1, {}), Graph::from_edge_list(1, {})) == complete(2));
  CHECK(join(empty_graph(2), empty_graph(3)) == complete_multipartite({2, 3}));

  const Graph u = disjoint_union(path(2), path(3));
  CHECK(u.order() == 5);
  CHECK(u.size() == 3);
  CHECK(u.adjacent(2, 3));
  CHECK_FALSE(is_connected(u));
}

TEST_CASE("induced subgraph relabels in the given order") {
  const Graph c6 = cycle(6);
  const std::vector<int> keep = {4, 3, 0};
  const Graph h = induced_subgraph(c6, keep);
  CHECK(h.order() == 3);
  CHECK(h.adjacent(0, 1));
  CHECK_FALSE(h.adjacent(0, 2));
  CHECK_FALSE(h.adjacent(1, 2));
}

TEST_CASE("labels do not affect equality") {
  CHECK(path(3).with_label("a") == path(3).with_label("b"));
  CHECK(path(3).with_label("a").label() == "a");
}
