#include <stdexcept>

#include <doctest.h>

#include "evograph/config.hpp"
#include "evograph/graph.hpp"
#include "evograph/harness.hpp"
#include "evograph/metrics.hpp"

using namespace evograph;

namespace {

GrowingGraph path_graph(std::uint32_t n) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(0);
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(EdgeKind::Proper, i, i + 1, 0);
  return g;
}

GrowingGraph cycle_graph(std::uint32_t n) {
  GrowingGraph g = path_graph(n);
  g.add_edge(EdgeKind::Proper, 0, n - 1, 0);
  return g;
}

GrowingGraph star_graph(std::uint32_t leaves) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t i = 0; i <= leaves; ++i) g.add_vertex(0);
  for (std::uint32_t i = 1; i <= leaves; ++i) g.add_edge(EdgeKind::Proper, 0, i, 0);
  return g;
}

GrowingGraph clique_graph(std::uint32_t n) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(EdgeKind::Proper, i, j, 0);
  return g;
}

}  // namespace

TEST_CASE("distance view collapses multiplicity and drops loops and dummies") {
  GrowingGraph g(GraphMode::Undirected);
  for (int i = 0; i < 3; ++i) g.add_vertex(0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Proper, 1, 2, 0);
  g.add_edge(EdgeKind::Loop, 2, 2, 0);
  DistanceView view(g);
  CHECK(view.num_vertices() == 3);
  CHECK(view.num_undirected_edges() == 2);
  CHECK(view.simple_degree(0) == 1);
  CHECK(view.simple_degree(2) == 1);

  GrowingGraph d(GraphMode::GeneralizedDirected);
  for (int i = 0; i < 2; ++i) d.add_vertex(0);
  d.add_edge(EdgeKind::Proper, 1, 0, 0);  // direction ignored
  d.add_edge(EdgeKind::Proper, 1, 1, 0);  // directed self-edge carries no distance
  d.add_edge(EdgeKind::Headless, 0, kNoVertex, 0);
  d.add_edge(EdgeKind::Tailless, kNoVertex, 1, 0);
  DistanceView dv(d);
  CHECK(dv.num_undirected_edges() == 1);
  CHECK(dv.simple_degree(0) == 1);
  CHECK(dv.simple_degree(1) == 1);
}

TEST_CASE("bfs depths from one and many sources") {
  GrowingGraph g = path_graph(5);
  DistanceView view(g);
  const auto d = bfs_depths(view, 0);
  for (int i = 0; i < 5; ++i) CHECK(d[i] == i);

  const auto both = bfs_depths_multi(view, {0, 4});
  CHECK(both[0] == 0);
  CHECK(both[2] == 2);
  CHECK(both[4] == 0);

  GrowingGraph split(GraphMode::Undirected);
  for (int i = 0; i < 3; ++i) split.add_vertex(0);
  split.add_edge(EdgeKind::Proper, 0, 1, 0);
  const auto ds = bfs_depths(DistanceView(split), 0);
  CHECK(ds[1] == 1);
  CHECK(ds[2] == -1);  // unreachable
}

TEST_CASE("eccentricity at the ends and middle of a path") {
  DistanceView view(path_graph(5));
  CHECK(eccentricity(view, 0) == 4);
  CHECK(eccentricity(view, 2) == 2);
}

TEST_CASE("exact diameter matches hand values and the oracle") {
  CHECK(diameter_exact(DistanceView(path_graph(1))) == 0);
  CHECK(diameter_exact(DistanceView(path_graph(5))) == 4);
  CHECK(diameter_exact(DistanceView(cycle_graph(6))) == 3);
  CHECK(diameter_exact(DistanceView(cycle_graph(7))) == 3);
  CHECK(diameter_exact(DistanceView(star_graph(8))) == 2);
  CHECK(diameter_exact(DistanceView(clique_graph(4))) == 1);
  CHECK(diameter_oracle(DistanceView(clique_graph(4))) == 1);
  CHECK(diameter_oracle(DistanceView(cycle_graph(6))) == 3);

  GrowingGraph split(GraphMode::Undirected);
  for (int i = 0; i < 4; ++i) split.add_vertex(0);
  split.add_edge(EdgeKind::Proper, 0, 1, 0);
  split.add_edge(EdgeKind::Proper, 2, 3, 0);
  CHECK_THROWS_AS(diameter_exact(DistanceView(split)), std::runtime_error);
}

TEST_CASE("oracle refuses oversized graphs") {
  CHECK_THROWS_AS(diameter_oracle(DistanceView(path_graph(2001))), std::exception);
}

TEST_CASE("height from root and the factor-two diameter bound") {
  CHECK(height_from_root(DistanceView(path_graph(3)), 0) == 2);
  CHECK(height_from_root(DistanceView(star_graph(6)), 0) == 1);
  CHECK(diameter_exact(DistanceView(star_graph(6))) == 2);  // boundary of 2x

  const RunResult r = run(ModelConfig::defaults(ModelTag::Pref), 500, 3, AuditLevel::Off);
  REQUIRE(r.ok());
  CHECK(r.height <= r.diameter);
  CHECK(r.diameter <= 2 * r.height);
}

TEST_CASE("distances ignore added loops and duplicated edges") {
  GrowingGraph g = cycle_graph(9);
  const int before = diameter_exact(DistanceView(g));
  g.add_edge(EdgeKind::Loop, 4, 4, 1);
  g.add_edge(EdgeKind::Proper, 0, 1, 1);
  g.add_edge(EdgeKind::Proper, 0, 1, 1);
  CHECK(diameter_exact(DistanceView(g)) == before);
  CHECK(height_from_root(DistanceView(g), 0) == 4);
}
