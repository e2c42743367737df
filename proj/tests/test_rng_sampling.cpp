#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "evograph/graph.hpp"
#include "evograph/rng.hpp"
#include "evograph/sampling.hpp"

using namespace evograph;

namespace {

// linear-scan reference for WeightIndex::find_prefix
std::size_t prefix_oracle(const std::vector<std::int64_t>& w, std::int64_t x) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    if (acc > x) return i;
  }
  return w.size();
}

GrowingGraph sample_multigraph() {
  // 0-1 doubled, 1-2, loop at 2, 0-3
  GrowingGraph g(GraphMode::Undirected);
  for (int i = 0; i < 4; ++i) g.add_vertex(0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Proper, 1, 2, 0);
  g.add_edge(EdgeKind::Loop, 2, 2, 0);
  g.add_edge(EdgeKind::Proper, 0, 3, 0);
  return g;
}

GrowingGraph sample_digraph() {
  // 0->1 doubled, 1->2, 2->0, self-arc at 1
  GrowingGraph g(GraphMode::Directed);
  for (int i = 0; i < 3; ++i) g.add_vertex(0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Proper, 1, 2, 0);
  g.add_edge(EdgeKind::Proper, 2, 0, 0);
  g.add_edge(EdgeKind::Proper, 1, 1, 0);
  return g;
}

double empirical_tv(const std::vector<std::uint64_t>& counts, const std::vector<Frac>& want,
                    std::uint64_t draws) {
  double tv = 0.0;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    const double p = static_cast<double>(counts[v]) / static_cast<double>(draws);
    const double q = static_cast<double>(want[v].num) / static_cast<double>(want[v].den);
    tv += std::abs(p - q);
  }
  return tv / 2.0;
}

}  // namespace

TEST_CASE("rng stream is a pure function of seed, stream and counter") {
  RngStream a(12345, 7), b(12345, 7);
  for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(a.counter() == 64);

  RngStream c(12345, 8);
  bool differs = false;
  for (int i = 0; i < 8; ++i) differs |= b.next_u64() != c.next_u64();
  CHECK(differs);

  RngStream d(12346, 7);
  RngStream e(12345, 7);
  bool seed_differs = false;
  for (int i = 0; i < 8; ++i) seed_differs |= d.next_u64() != e.next_u64();
  CHECK(seed_differs);
}

TEST_CASE("below stays in range and is roughly uniform") {
  RngStream rng(1, 0);
  CHECK(rng.below(1) == 0);

  std::vector<std::uint64_t> counts(4, 0);
  const std::uint64_t draws = 40000;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const std::uint64_t v = rng.below(4);
    REQUIRE(v < 4);
    ++counts[v];
  }
  // 5 sigma around draws/4, sigma = sqrt(n p (1-p))
  const double sigma = std::sqrt(draws * 0.25 * 0.75);
  for (std::uint64_t c : counts) {
    CHECK(static_cast<double>(c) > draws / 4.0 - 5 * sigma);
    CHECK(static_cast<double>(c) < draws / 4.0 + 5 * sigma);
  }
}

TEST_CASE("unit and bernoulli behave at the edges") {
  RngStream rng(2, 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.unit();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.bernoulli(1.0));
  }
}

TEST_CASE("geometric sampler matches its mean and mass at zero") {
  RngStream rng(3, 0);
  for (int i = 0; i < 100; ++i) CHECK(geo_sample(rng, 1.0) == 0);

  const double p = 0.5;
  const std::uint64_t draws = 40000;
  std::uint64_t sum = 0, zeros = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const std::uint64_t x = geo_sample(rng, p);
    sum += x;
    zeros += x == 0;
  }
  // mean (1-p)/p = 1, var (1-p)/p^2 = 2
  const double mean = static_cast<double>(sum) / draws;
  CHECK(std::abs(mean - 1.0) < 5 * std::sqrt(2.0 / draws));
  const double z = static_cast<double>(zeros) / draws;
  CHECK(std::abs(z - 0.5) < 5 * std::sqrt(0.25 / draws));
}

TEST_CASE("weight index tracks push, add and exact prefix search") {
  WeightIndex idx;
  std::vector<std::int64_t> raw{3, 0, 5, 1, 7, 0, 2};
  for (std::int64_t w : raw) idx.push(w);
  CHECK(idx.size() == raw.size());
  CHECK(idx.total() == 18);
  CHECK(idx.weight(2) == 5);

  for (std::int64_t x = 0; x < idx.total(); ++x)
    CHECK(idx.find_prefix(x) == prefix_oracle(raw, x));

  idx.add(4, -5);
  raw[4] -= 5;
  idx.add(1, 4);
  raw[1] += 4;
  CHECK(idx.total() == 17);
  for (std::int64_t x = 0; x < idx.total(); ++x)
    CHECK(idx.find_prefix(x) == prefix_oracle(raw, x));
}

TEST_CASE("weight index prefix search survives capacity growth") {
  // regression: the internal tree must stay consistent across every
  // capacity doubling, not only up to the occupied prefix
  WeightIndex idx;
  std::vector<std::int64_t> raw;
  RngStream rng(4, 0);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t w = static_cast<std::int64_t>(rng.below(4));
    idx.push(w);
    raw.push_back(w);
    if (i % 37 == 0 && idx.total() > 0)
      for (std::int64_t x = 0; x < idx.total(); ++x)
        REQUIRE(idx.find_prefix(x) == prefix_oracle(raw, x));
  }
  REQUIRE(idx.total() > 0);
  for (std::int64_t x = 0; x < idx.total(); ++x)
    REQUIRE(idx.find_prefix(x) == prefix_oracle(raw, x));
}

TEST_CASE("weight index sampling is proportional and skips zero weights") {
  WeightIndex idx;
  idx.push(1);
  idx.push(0);
  idx.push(3);
  RngStream rng(5, 0);
  const std::uint64_t draws = 40000;
  std::vector<std::uint64_t> counts(3, 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[idx.sample(rng)];
  CHECK(counts[1] == 0);
  const double f0 = static_cast<double>(counts[0]) / draws;
  CHECK(std::abs(f0 - 0.25) < 5 * std::sqrt(0.25 * 0.75 / draws));
}

TEST_CASE("uniform endpoint picks loop vertices and proper ends evenly") {
  GrowingGraph g = sample_multigraph();
  RngStream rng(6, 0);
  for (int i = 0; i < 50; ++i) CHECK(uniform_endpoint(rng, g, 3) == 2);  // the loop

  std::uint64_t zeros = 0;
  const std::uint64_t draws = 20000;
  for (std::uint64_t i = 0; i < draws; ++i) zeros += uniform_endpoint(rng, g, 0) == 0;
  const double f = static_cast<double>(zeros) / draws;
  CHECK(std::abs(f - 0.5) < 5 * std::sqrt(0.25 / draws));
}

TEST_CASE("rho0 sampling matches the exact degree distribution") {
  GrowingGraph g = sample_multigraph();
  const auto want = rho0_dist(g);
  // degrees: v0=3, v1=3, v2=3 (loop counts twice), v3=1
  CHECK(frac_eq(want[0].num, want[0].den, 3, 10));
  CHECK(frac_eq(want[2].num, want[2].den, 3, 10));
  CHECK(frac_eq(want[3].num, want[3].den, 1, 10));

  RngStream rng(7, 0);
  const std::uint64_t draws = 200000;
  std::vector<std::uint64_t> counts(g.num_vertices(), 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[rho0_sample(rng, g, g.num_edges()).vertex];
  CHECK(empirical_tv(counts, want, draws) < 0.01);
}

TEST_CASE("rho0 snapshots ignore edges added after the draw point") {
  GrowingGraph g = sample_multigraph();
  const std::uint64_t m0 = g.num_edges();
  const VertexId v = g.add_vertex(1);
  g.add_edge(EdgeKind::Proper, 0, v, 1);
  RngStream rng(8, 0);
  for (int i = 0; i < 2000; ++i) {
    const EdgeEndpoint ee = rho0_sample(rng, g, m0);
    CHECK(ee.edge < m0);
    CHECK(ee.vertex != v);
  }
}

TEST_CASE("rho_in and rho_out match their exact distributions") {
  GrowingGraph g = sample_digraph();
  const auto win = rho_in_dist(g);
  const auto wout = rho_out_dist(g);
  // in-degrees: 1, 3, 1 ; out-degrees: 2, 2, 1
  CHECK(frac_eq(win[1].num, win[1].den, 3, 5));
  CHECK(frac_eq(wout[0].num, wout[0].den, 2, 5));

  RngStream rng(9, 0);
  const std::uint64_t draws = 200000;
  std::vector<std::uint64_t> cin(3, 0), cout(3, 0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    ++cin[rho_in_sample(rng, g, g.num_headed_edges()).vertex];
    ++cout[rho_out_sample(rng, g, g.num_tailed_edges()).vertex];
  }
  CHECK(empirical_tv(cin, win, draws) < 0.01);
  CHECK(empirical_tv(cout, wout, draws) < 0.01);
}

TEST_CASE("in and out distributions count dummy half-edges") {
  GrowingGraph g(GraphMode::GeneralizedDirected);
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Tailless, kNoVertex, 1, 0);
  g.add_edge(EdgeKind::Headless, 0, kNoVertex, 0);
  const auto win = rho_in_dist(g);
  const auto wout = rho_out_dist(g);
  CHECK(frac_eq(win[0].num, win[0].den, 0, 1));
  CHECK(frac_eq(win[1].num, win[1].den, 1, 1));
  CHECK(frac_eq(wout[0].num, wout[0].den, 1, 1));
  CHECK(frac_eq(wout[1].num, wout[1].den, 0, 1));
}

TEST_CASE("random walks follow out-arcs and reject dangling vertices") {
  GrowingGraph cyc(GraphMode::Directed);
  for (int i = 0; i < 5; ++i) cyc.add_vertex(0);
  for (VertexId v = 0; v < 5; ++v) cyc.add_edge(EdgeKind::Proper, v, (v + 1) % 5, 0);
  RngStream rng(10, 0);
  CHECK(random_walk_end(rng, cyc, 1, 7) == 3);
  CHECK(random_walk_end(rng, cyc, 0, 0) == 0);

  GrowingGraph path(GraphMode::Directed);
  path.add_vertex(0);
  path.add_vertex(0);
  path.add_edge(EdgeKind::Proper, 0, 1, 0);
  CHECK_THROWS_AS(random_walk_end(rng, path, 0, 2), std::exception);
}

TEST_CASE("pagerank power iteration is a distribution and respects symmetry") {
  GrowingGraph cyc(GraphMode::Directed);
  for (int i = 0; i < 6; ++i) cyc.add_vertex(0);
  for (VertexId v = 0; v < 6; ++v) cyc.add_edge(EdgeKind::Proper, v, (v + 1) % 6, 0);
  const auto pi = pagerank_power(cyc, 0.8, 1e-12);
  double sum = 0.0;
  for (double x : pi) sum += x;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  // vertex-transitive graph: stationary vector is uniform
  for (double x : pi) CHECK(x == doctest::Approx(1.0 / 6).epsilon(1e-9));

  GrowingGraph dangling(GraphMode::Directed);
  dangling.add_vertex(0);
  dangling.add_vertex(0);
  dangling.add_edge(EdgeKind::Proper, 0, 1, 0);
  CHECK_THROWS_AS(pagerank_power(dangling, 0.5, 1e-10), std::exception);
}

TEST_CASE("total variation of simple vectors") {
  CHECK(total_variation({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(total_variation({0.5, 0.5}, {0.5, 0.5}) == doctest::Approx(0.0));
  CHECK(total_variation({0.75, 0.25}, {0.25, 0.75}) == doctest::Approx(0.5));
}

TEST_CASE("rationals reduce and compare exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0, 1));
  const Rational neg(3, -6);
  CHECK(neg.den >= 1);
  CHECK(neg.value() == doctest::Approx(-0.5));
  CHECK(frac_eq(1, 2, 2, 4));
  CHECK_FALSE(frac_eq(1, 2, 2, 3));
}

TEST_CASE("degree-plus-delta distribution at delta zero collapses to rho0") {
  GrowingGraph g = sample_multigraph();
  const auto a = rho0_dist(g);
  const auto b = rho_delta_dist(g, Rational(0, 1));
  REQUIRE(a.size() == b.size());
  for (std::size_t v = 0; v < a.size(); ++v)
    CHECK(frac_eq(a[v].num, a[v].den, b[v].num, b[v].den));

  // K2 at delta = 1/2: each endpoint has weight 1.5 of 3
  GrowingGraph k2(GraphMode::Undirected);
  k2.add_vertex(0);
  k2.add_vertex(0);
  k2.add_edge(EdgeKind::Proper, 0, 1, 0);
  const auto h = rho_delta_dist(k2, Rational(1, 2));
  CHECK(frac_eq(h[0].num, h[0].den, 1, 2));
  CHECK(frac_eq(h[1].num, h[1].den, 1, 2));
}
