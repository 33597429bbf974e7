#include <doctest.h>

#include <random>

#include "closeness/shortest_paths.hpp"
#include "oracles.hpp"

using namespace closeness;

namespace {

Graph p3() { return Graph::from_edges(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}}); }

Graph k4() {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) edges.push_back({u, v, 1});
  return Graph::from_edges(4, edges);
}

const std::vector<Edge> kTriangle{{0, 1, 5}, {1, 2, 1}, {0, 2, 1}};

}  // namespace

TEST_CASE("sssp on the fixture graphs") {
  CHECK(sssp(p3(), 0).dist == std::vector<Weight>{0, 1, 2});
  CHECK(sssp(k4(), 2).dist == std::vector<Weight>{1, 1, 0, 1});
}

TEST_CASE("weighted triangle matches simple-path enumeration") {
  const auto expected = oracle::simple_path_distances(3, kTriangle, 0);
  REQUIRE(expected == std::vector<double>{0, 2, 1});
  const auto g = Graph::from_edges(3, kTriangle);
  CHECK(sssp(g, 0).dist == expected);
  CHECK(sssp(g, 0, SearchMethod::heap).dist == expected);
}

TEST_CASE("sssp argument checks") {
  CHECK_THROWS_AS(sssp(p3(), 3), InvalidArgument);
  const auto weighted = Graph::from_edges(3, kTriangle);
  CHECK_THROWS_AS(sssp(weighted, 0, SearchMethod::breadth_first), InvalidArgument);
}

TEST_CASE("unreachable vertices hold the infinity sentinel") {
  const auto g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1}});
  const auto dv = sssp(g, 0);
  CHECK(dv.dist[2] == kInfinity);
  CHECK_THROWS_AS(eccentricity(dv), DisconnectedGraph);
}

TEST_CASE("eccentricity") {
  CHECK(eccentricity(sssp(p3(), 0)) == 2);
  CHECK(eccentricity(sssp(p3(), 1)) == 1);
  for (VertexId s = 0; s < 4; ++s) CHECK(eccentricity(sssp(k4(), s)) == 1);
}

TEST_CASE("property: heap search equals Bellman-Ford on small random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const bool directed = trial % 3 == 0;
    auto rg = oracle::random_connected(rng, n, 10.0, 0.25);
    const auto g = Graph::from_edges(n, rg.edges,
                                     directed ? Directedness::directed : Directedness::undirected);
    for (VertexId s = 0; s < n; ++s) {
      SearchStats stats;
      const auto dv = sssp(g, s, SearchMethod::heap, SearchDirection::from, &stats);
      CHECK(dv.source == s);
      CHECK(dv.dist == oracle::bellman_ford(n, rg.edges, s, directed));
      // One settle per reachable vertex, stale entries skipped.
      std::size_t reachable = 0;
      for (const auto d : dv.dist) reachable += d != kInfinity;
      CHECK(stats.settled == reachable);
      CHECK(stats.pushes == stats.settled + stats.stale_pops);
    }
  }
}

TEST_CASE("property: searching into a vertex equals the transposed Floyd-Warshall column") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    auto rg = oracle::random_connected(rng, n, 3.0, 0.2);
    const auto g = Graph::from_edges(n, rg.edges, Directedness::directed);
    const auto fw = oracle::floyd_warshall(n, rg.edges, true);
    for (VertexId t = 0; t < n; ++t) {
      const auto dv = sssp(g, t, SearchMethod::heap, SearchDirection::into);
      for (std::size_t i = 0; i < n; ++i) CHECK(dv.dist[i] == fw[i][t]);
    }
  }
}

TEST_CASE("property: breadth-first path equals heap path on unit weights") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    auto rg = oracle::random_connected(rng, n, 0.0, 0.05);
    const auto g = Graph::from_edges(n, rg.edges);
    REQUIRE(g.unit_weights());
    const auto s = static_cast<VertexId>(rng() % n);
    CHECK(sssp(g, s, SearchMethod::breadth_first).dist == sssp(g, s, SearchMethod::heap).dist);
  }
}

TEST_CASE("property: triangle consistency and symmetry") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    auto rg = oracle::random_connected(rng, n, 5.0, 0.1);
    const auto g = Graph::from_edges(n, rg.edges);
    std::vector<std::vector<Weight>> all;
    for (VertexId s = 0; s < n; ++s) all.push_back(sssp(g, s).dist);
    for (VertexId s = 0; s < n; ++s) {
      CHECK(all[s][s] == 0);
      for (const auto& e : g.edges()) {
        CHECK(all[s][e.to] <= all[s][e.from] + e.weight);
        CHECK(all[s][e.from] <= all[s][e.to] + e.weight);
      }
      for (VertexId t = 0; t < n; ++t) CHECK(all[s][t] == doctest::Approx(all[t][s]).epsilon(1e-12));
    }
  }
}
