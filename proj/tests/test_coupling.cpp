#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "evograph/config.hpp"
#include "evograph/coupling.hpp"
#include "evograph/harness.hpp"
#include "evograph/models.hpp"
#include "evograph/rng.hpp"

using namespace evograph;

namespace {

GrowingGraph clique_graph(std::uint32_t n) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(EdgeKind::Proper, i, j, 0);
  return g;
}

constexpr ModelTag kAllTags[] = {
    ModelTag::ForestFire, ModelTag::Copying,  ModelTag::Hybrid,   ModelTag::Pref,
    ModelTag::AclD,       ModelTag::Glp,      ModelTag::Parid,    ModelTag::AclC,
    ModelTag::Directed,   ModelTag::Dsf,      ModelTag::CooperFrieze, ModelTag::Pegging,
    ModelTag::KTree,      ModelTag::Apollonian};

}  // namespace

TEST_CASE("edge tree seeding matches graph edge depths") {
  GrowingGraph k2 = clique_graph(2);
  CoupledTree t2 = CoupledTree::from_seed(k2, TreeKind::EdgeTree);
  CHECK(t2.num_nodes() == 2);  // sentinel root + one edge
  CHECK(t2.height() == 1);
  CHECK(t2.depth(NodeKey::edge(0)) == 1);
  CHECK(t2.parent(NodeKey::edge(0)) == NodeKey::root());
  CHECK(t2.children(NodeKey::root()) == 1);
  CHECK_FALSE(t2.has(NodeKey::vertex(0)));

  GrowingGraph k3 = clique_graph(3);
  CoupledTree t3 = CoupledTree::from_seed(k3, TreeKind::EdgeTree);
  CHECK(t3.num_nodes() == 4);
  CHECK(t3.depth(NodeKey::edge(0)) == 1);  // 0-1 touches the root
  CHECK(t3.depth(NodeKey::edge(1)) == 1);  // 0-2 touches the root
  CHECK(t3.depth(NodeKey::edge(2)) == 2);  // 1-2 hangs off a depth-1 edge
  CHECK(t3.parent(NodeKey::edge(2)) == NodeKey::edge(0));
}

TEST_CASE("vertex tree seeding is a bfs tree of the seed graph") {
  GrowingGraph path(GraphMode::Undirected);
  for (int i = 0; i < 4; ++i) path.add_vertex(0);
  for (VertexId i = 0; i + 1 < 4; ++i) path.add_edge(EdgeKind::Proper, i, i + 1, 0);
  CoupledTree t = CoupledTree::from_seed(path, TreeKind::VertexTree);
  CHECK(t.num_nodes() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(t.depth(NodeKey::vertex(v)) == v);
  CHECK(t.parent(NodeKey::vertex(3)) == NodeKey::vertex(2));
}

TEST_CASE("mixed tree hangs seed edges under the deepest vertex") {
  GrowingGraph k3 = clique_graph(3);
  CoupledTree t = CoupledTree::from_seed(k3, TreeKind::MultiTypedTree);
  CHECK(t.num_nodes() == 6);
  CHECK(t.depth(NodeKey::vertex(0)) == 0);
  CHECK(t.depth(NodeKey::vertex(1)) == 1);
  CHECK(t.depth(NodeKey::vertex(2)) == 1);
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(t.depth(NodeKey::edge(e)) == 2);
    CHECK(t.parent(NodeKey::edge(e)) == NodeKey::vertex(1));
  }
}

TEST_CASE("clique tree seeding is the single root clique") {
  CoupledTree t = CoupledTree::from_seed(clique_graph(3), TreeKind::CliqueTree);
  CHECK(t.num_nodes() == 1);
  CHECK(t.depth(NodeKey::clique(0)) == 0);
}

TEST_CASE("seeding rejects disconnected graphs") {
  GrowingGraph split(GraphMode::Undirected);
  for (int i = 0; i < 4; ++i) split.add_vertex(0);
  split.add_edge(EdgeKind::Proper, 0, 1, 0);
  split.add_edge(EdgeKind::Proper, 2, 3, 0);
  CHECK_THROWS_AS(CoupledTree::from_seed(split, TreeKind::VertexTree), std::logic_error);
}

TEST_CASE("vertex-op edges all become children of the step pivot") {
  ModelConfig cfg = ModelConfig::defaults(ModelTag::Pref);
  std::get<PrefParams>(cfg.params).a = SequenceSpec::constant(3);
  auto model = make_model(cfg, false);
  CoupledTree tree = CoupledTree::from_seed(model->graph(), model->tree_kind());
  RngStream rng(41, 1);
  const StepTrace tr = model->step(rng);
  tree.apply(model->graph(), tr);

  REQUIRE(tr.new_edges.size() == 3);
  for (EdgeId e : tr.new_edges) {
    CHECK(tree.parent(NodeKey::edge(e)) == NodeKey::edge(tr.vertex_op_pivot));
    CHECK(tree.depth(NodeKey::edge(e)) == tree.depth(NodeKey::edge(tr.vertex_op_pivot)) + 1);
  }
  CHECK(tree.children(NodeKey::edge(tr.vertex_op_pivot)) == 3);
}

TEST_CASE("weighted tree hops carry the walk length plus one") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Hybrid), true);
  CoupledTree tree = CoupledTree::from_seed(model->graph(), model->tree_kind());
  CHECK(tree.kind() == TreeKind::WeightedVertexTree);
  RngStream rng(42, 50);
  for (int t = 0; t < 50; ++t) {
    const StepTrace tr = model->step(rng);
    tree.apply(model->graph(), tr);
    const NodeKey v = NodeKey::vertex(tr.new_vertices.at(0));
    const NodeKey s = NodeKey::vertex(tr.walk_start);
    CHECK(tree.depth(v) == tree.depth(s) + 1);
    CHECK(tree.weighted_depth(v) == tree.weighted_depth(s) + tr.walk_length + 1);
  }
  CHECK(tree.weighted_height() >= tree.height());
}

TEST_CASE("pegging relabels retired edges in place and attaches the gadget") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Pegging), false);
  CoupledTree tree = CoupledTree::from_seed(model->graph(), model->tree_kind());
  CHECK(tree.num_nodes() == 7);  // sentinel + the six seed edges

  RngStream rng(43, 10);
  for (int t = 0; t < 10; ++t) {
    const std::size_t nodes_before = tree.num_nodes();
    const StepTrace tr = model->step(rng);
    const std::uint32_t keep0 = tree.depth(NodeKey::edge(tr.retired_edges[0]));
    const std::uint32_t keep1 = tree.depth(NodeKey::edge(tr.retired_edges[1]));
    tree.apply(model->graph(), tr);

    CHECK(tree.num_nodes() == nodes_before + 3);
    CHECK_FALSE(tree.has(NodeKey::edge(tr.retired_edges[0])));
    CHECK_FALSE(tree.has(NodeKey::edge(tr.retired_edges[1])));
    CHECK(tree.depth(NodeKey::edge(tr.new_edges[0])) == keep0);
    CHECK(tree.depth(NodeKey::edge(tr.new_edges[1])) == keep1);
    for (std::size_t i = 2; i < 5; ++i)
      CHECK(tree.depth(NodeKey::edge(tr.new_edges[i])) == keep0 + 1);
  }
}

TEST_CASE("applying one trace twice is rejected") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Pref), false);
  CoupledTree tree = CoupledTree::from_seed(model->graph(), model->tree_kind());
  RngStream rng(44, 1);
  const StepTrace tr = model->step(rng);
  tree.apply(model->graph(), tr);
  CHECK_THROWS_AS(tree.apply(model->graph(), tr), std::logic_error);
}

TEST_CASE("tree export lists every node with its parent") {
  CoupledTree t = CoupledTree::from_seed(clique_graph(2), TreeKind::EdgeTree);
  std::ostringstream os;
  t.write_tsv(os);
  const std::string s = os.str();
  CHECK(s.find("# tree kind=edge nodes=2") != std::string::npos);
  CHECK(s.find("root\t-\t1") != std::string::npos);
  CHECK(s.find("e0\troot\t1") != std::string::npos);
}

TEST_CASE("domination checker flags depths beyond the policy factor") {
  GrowingGraph star(GraphMode::Undirected);
  for (int i = 0; i < 5; ++i) star.add_vertex(0);
  for (VertexId v = 1; v < 5; ++v) star.add_edge(EdgeKind::Proper, 0, v, 0);
  const CoupledTree tree = CoupledTree::from_seed(star, TreeKind::VertexTree);

  GrowingGraph path(GraphMode::Undirected);
  for (int i = 0; i < 5; ++i) path.add_vertex(0);
  for (VertexId v = 0; v + 1 < 5; ++v) path.add_edge(EdgeKind::Proper, v, v + 1, 0);

  const DominationReport rep =
      check_domination(path, tree, DominationPolicy{}, nullptr, CheckScope::All);
  CHECK(rep.checked == 5);  // a vertex tree has no sentinel, every node counts
  CHECK(rep.violations == 2);  // depths 3 and 4 exceed twice the tree depth 1
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.details.empty());
}

TEST_CASE("every family passes an every-step audit at small scale") {
  for (ModelTag tag : kAllTags) {
    const std::uint64_t n = tag == ModelTag::Pegging ? 800 : 250;
    const RunResult r = run(ModelConfig::defaults(tag), n, 77, AuditLevel::EveryStep);
    INFO(model_tag_name(tag), ": ", r.status);
    CHECK(r.ok());
    CHECK(r.violations == 0);
    CHECK(r.checks > 0);
    CHECK(r.tree_height >= 0);
  }
}

TEST_CASE("uniform edge pivots drive the recursive edge tree") {
  // with one edge per step, the pivot at step t is uniform on [0, t)
  ModelConfig cfg = ModelConfig::defaults(ModelTag::Pref);
  auto model = make_model(cfg, false);
  RngStream rng(45, 3000);
  std::vector<double> bins(10, 0.0);
  std::uint64_t used = 0;
  for (std::uint64_t t = 1; t <= 3000; ++t) {
    const StepTrace tr = model->step(rng);
    if (t < 50) continue;  // skip the tiny-denominator steps
    const double u = static_cast<double>(tr.vertex_op_pivot) / static_cast<double>(t);
    ++bins[std::min<std::size_t>(9, static_cast<std::size_t>(u * 10))];
    ++used;
  }
  double chi2 = 0.0;
  const double expect = static_cast<double>(used) / 10.0;
  for (double b : bins) chi2 += (b - expect) * (b - expect) / expect;
  CHECK(chi2 < 60.0);  // 9 degrees of freedom, generous tail
}

TEST_CASE("recursive edge tree height obeys the log bound at desk scale") {
  const ModelConfig cfg = ModelConfig::defaults(ModelTag::Pref);  // a=1, b=0
  const std::uint64_t n = 10000;
  const double bound = std::exp(1.0) * std::log(static_cast<double>(n)) +
                       2 * std::exp(1.0) + 2;  // tree starts with 2 nodes
  int within = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RunOptions opts;
    opts.audit = AuditLevel::Checkpoints;
    opts.measure = false;
    const RunOutput out = run_model(cfg, n, seed, opts);
    REQUIRE(out.result.ok());
    within += static_cast<double>(out.result.tree_height) <= bound;
  }
  CHECK(within >= 19);
}

TEST_CASE("apollonian tree leaves are exactly the eligible cliques") {
  RunOptions opts;
  opts.audit = AuditLevel::Checkpoints;
  const std::uint64_t n = 400;
  const RunOutput out = run_model(ModelConfig::defaults(ModelTag::Apollonian), n, 5, opts);
  REQUIRE(out.result.ok());
  REQUIRE(out.tree != nullptr);
  std::uint64_t leaves = 0;
  for (const auto& node : out.tree->nodes()) leaves += node.nchildren == 0;
  CHECK(leaves == 1 + n * 2);  // 1 + t(k-1) with k = 3
  CHECK(out.tree->num_nodes() == 1 + n * 3);
}
