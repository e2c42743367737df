#include <cmath>
#include <vector>

#include <doctest.h>

#include "evograph/config.hpp"
#include "evograph/models.hpp"
#include "evograph/rng.hpp"
#include "evograph/validate.hpp"

using namespace evograph;

namespace {

void grow(GrowthModel& model, std::uint64_t n, std::uint64_t seed) {
  RngStream rng(seed, n);
  for (std::uint64_t t = 1; t <= n; ++t) model.step(rng);
}

void require_all(const std::vector<CheckResult>& results) {
  REQUIRE_FALSE(results.empty());
  for (const CheckResult& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

struct MeanVar {
  double mean = 0.0, var = 0.0;
};

MeanVar stats(const std::vector<double>& xs) {
  MeanVar mv;
  for (double x : xs) mv.mean += x;
  mv.mean /= static_cast<double>(xs.size());
  for (double x : xs) mv.var += (x - mv.mean) * (x - mv.mean);
  mv.var /= static_cast<double>(xs.size() - 1);
  return mv;
}

}  // namespace

TEST_CASE("sampler batteries pass at unit-test scale") {
  require_all(validate_samplers(true));
}

TEST_CASE("weighted sampling equals uniform-edge sampling on the expanded graph") {
  // rational enumeration over small connected multigraphs and digraphs
  require_all(validate_reductions(true));
}

TEST_CASE("expanded undirected growth carries 2s copies per edge plus r loops") {
  // delta = 1/2 gives s = 2, r = 1: every degree is 4k + 2
  auto model = make_model(ModelConfig::defaults(ModelTag::Glp), true);
  CHECK(model->tree_kind() == TreeKind::EdgeTree);
  grow(*model, 400, 31);
  const GrowingGraph& g = model->graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::uint64_t d = g.degree(v);
    CHECK(d >= 2);
    CHECK((d - 2) % 4 == 0);
  }
}

TEST_CASE("expanded directed growth carries s copies per arc plus one stub each way") {
  // alpha = beta = 1/2 gives s = 2, r = q = 1: weights s*deg + 1 are odd
  auto model = make_model(ModelConfig::defaults(ModelTag::Dsf), true);
  CHECK(model->tree_kind() == TreeKind::GeneralizedEdgeTree);
  grow(*model, 400, 32);
  const GrowingGraph& g = model->graph();
  CHECK(g.num_tailless_edges() == g.num_vertices());
  CHECK(g.num_headless_edges() == g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    CHECK(g.in_degree(v) % 2 == 1);
    CHECK(g.out_degree(v) % 2 == 1);
  }
}

TEST_CASE("native and expanded forms grow the same vertex-count law") {
  // both realize the same process, so vertex counts share one distribution
  const ModelConfig cfg = ModelConfig::defaults(ModelTag::Glp);
  const std::uint64_t n = 300;
  const std::size_t runs = 40;
  std::vector<double> native, expanded;
  for (std::size_t i = 0; i < runs; ++i) {
    auto nm = make_model(cfg, false);
    grow(*nm, n, 100 + i);
    native.push_back(static_cast<double>(nm->graph().num_vertices()));
    auto em = make_model(cfg, true);
    grow(*em, n, 500 + i);
    expanded.push_back(static_cast<double>(em->graph().num_vertices()));
  }
  const MeanVar a = stats(native);
  const MeanVar b = stats(expanded);
  const double se = std::sqrt(a.var / runs + b.var / runs);
  CHECK(std::abs(a.mean - b.mean) < 5 * se + 1e-9);
}

TEST_CASE("expanded degrees divide back to the native degree law") {
  // root degree in the expanded graph is 2 s k + 2 r for native degree k
  const ModelConfig cfg = ModelConfig::defaults(ModelTag::Glp);
  const std::uint64_t n = 300;
  const std::size_t runs = 40;
  std::vector<double> native, reduced;
  for (std::size_t i = 0; i < runs; ++i) {
    auto nm = make_model(cfg, false);
    grow(*nm, n, 900 + i);
    native.push_back(static_cast<double>(nm->graph().degree(0)));
    auto em = make_model(cfg, true);
    grow(*em, n, 1300 + i);
    reduced.push_back(static_cast<double>(em->graph().degree(0) - 2) / 4.0);
  }
  const MeanVar a = stats(native);
  const MeanVar b = stats(reduced);
  const double se = std::sqrt(a.var / runs + b.var / runs);
  CHECK(std::abs(a.mean - b.mean) < 5 * se + 1e-9);
}

TEST_CASE("walk-length tails stay under the geometric envelope at unit scale") {
  require_all(validate_walk_dominance(true));
}

TEST_CASE("diameter engine agrees with the oracle at unit scale") {
  require_all(validate_diameter(true));
}

TEST_CASE("determinism battery holds") {
  require_all(validate_determinism());
}
