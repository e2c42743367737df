#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "evograph/config.hpp"
#include "evograph/models.hpp"
#include "evograph/rng.hpp"

using namespace evograph;

namespace {

std::vector<StepTrace> grow(GrowthModel& model, std::uint64_t n, std::uint64_t seed) {
  RngStream rng(seed, n);
  std::vector<StepTrace> traces;
  traces.reserve(n);
  for (std::uint64_t t = 1; t <= n; ++t) traces.push_back(model.step(rng));
  return traces;
}

constexpr ModelTag kAllTags[] = {
    ModelTag::ForestFire, ModelTag::Copying,  ModelTag::Hybrid,   ModelTag::Pref,
    ModelTag::AclD,       ModelTag::Glp,      ModelTag::Parid,    ModelTag::AclC,
    ModelTag::Directed,   ModelTag::Dsf,      ModelTag::CooperFrieze, ModelTag::Pegging,
    ModelTag::KTree,      ModelTag::Apollonian};

}  // namespace

TEST_CASE("default configs validate and tag names round-trip") {
  for (ModelTag tag : kAllTags) {
    const ModelConfig cfg = ModelConfig::defaults(tag);
    CHECK_NOTHROW(cfg.validate());
    CHECK(model_tag_from_name(model_tag_name(tag)) == tag);
  }
  CHECK_THROWS_AS(model_tag_from_name("nope"), std::exception);
}

TEST_CASE("config validation rejects malformed parameters") {
  auto expect_invalid = [](ModelConfig cfg) {
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  };

  ModelConfig ff = ModelConfig::defaults(ModelTag::ForestFire);
  std::get<ForestFireParams>(ff.params).p = 1.5;
  expect_invalid(ff);

  ModelConfig hy = ModelConfig::defaults(ModelTag::Hybrid);
  std::get<HybridParams>(hy.params).pa = 0.9;  // pa+pb+pc > 1
  expect_invalid(hy);

  ModelConfig pa = ModelConfig::defaults(ModelTag::Parid);
  std::get<ParidParams>(pa.params).ell = 9;  // ell > u
  expect_invalid(pa);

  ModelConfig pa2 = ModelConfig::defaults(ModelTag::Parid);
  std::get<ParidParams>(pa2.params).x = SequenceSpec::uniform_int(1, 9);  // strict, support > u
  expect_invalid(pa2);

  ModelConfig ac = ModelConfig::defaults(ModelTag::AclC);
  std::get<AclCParams>(ac.params).x = SequenceSpec::constant(0);
  std::get<AclCParams>(ac.params).y = SequenceSpec::constant(0);  // x+y must be >= 1
  expect_invalid(ac);

  ModelConfig cf = ModelConfig::defaults(ModelTag::CooperFrieze);
  std::get<CooperFriezeParams>(cf.params).pa = 0.5;  // probabilities no longer sum to 1
  expect_invalid(cf);

  ModelConfig kt = ModelConfig::defaults(ModelTag::KTree);
  std::get<KTreeParams>(kt.params).k = 1;
  expect_invalid(kt);

  ModelConfig gl = ModelConfig::defaults(ModelTag::Glp);
  std::get<GlpParams>(gl.params).delta = Rational(-1, 1);  // must exceed -1
  expect_invalid(gl);
}

TEST_CASE("default seed graphs have the documented shapes") {
  const GrowingGraph ff = build_g0(ModelConfig::defaults(ModelTag::ForestFire));
  CHECK(ff.mode() == GraphMode::Directed);
  CHECK(ff.num_vertices() == 2);
  CHECK(ff.num_edges() == 1);

  ModelConfig cp = ModelConfig::defaults(ModelTag::Copying);
  std::get<CopyingParams>(cp.params).d = 3;
  const GrowingGraph cg = build_g0(cp);
  CHECK(cg.num_vertices() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(cg.out_degree(v) == 3);

  const GrowingGraph peg = build_g0(ModelConfig::defaults(ModelTag::Pegging));
  CHECK(peg.num_vertices() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(peg.degree(v) == 3);

  const GrowingGraph k2 = build_g0(ModelConfig::defaults(ModelTag::Pref));
  CHECK(k2.num_vertices() == 2);
  CHECK(k2.num_edges() == 1);

  ModelConfig bad = ModelConfig::defaults(ModelTag::KTree);
  bad.g0.preset = "k4";  // clique models grow from their own clique only
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("forest fire with zero burn probabilities is one edge per step") {
  ModelConfig cfg = ModelConfig::defaults(ModelTag::ForestFire);
  std::get<ForestFireParams>(cfg.params).p = 0.0;
  std::get<ForestFireParams>(cfg.params).q = 0.0;
  auto model = make_model(cfg, false);
  const auto traces = grow(*model, 400, 1);
  for (const StepTrace& tr : traces) {
    CHECK(tr.new_edges.size() == 1);
    CHECK(tr.burned.empty());
    CHECK(tr.new_edge_specs[0].head == tr.ambassador);
  }
  CHECK(model->graph().num_vertices() == 2 + 400);
  CHECK(model->graph().num_edges() == 1 + 400);
  CHECK(model->graph().is_connected());
}

TEST_CASE("forest fire burns within the snapshot and stays connected") {
  auto model = make_model(ModelConfig::defaults(ModelTag::ForestFire), false);
  const auto traces = grow(*model, 500, 2);
  for (const StepTrace& tr : traces) {
    CHECK(tr.new_edges.size() == 1 + tr.burned.size());
    for (VertexId b : tr.burned) CHECK(b < tr.new_vertices[0]);
  }
  CHECK(model->graph().num_vertices() == 2 + 500);
  CHECK(model->graph().is_connected());
  CHECK_NOTHROW(model->check_structure());
}

TEST_CASE("copying keeps every vertex at out-degree d") {
  ModelConfig cfg = ModelConfig::defaults(ModelTag::Copying);
  std::get<CopyingParams>(cfg.params).d = 3;
  std::get<CopyingParams>(cfg.params).p = 0.4;
  auto model = make_model(cfg, false);
  const auto traces = grow(*model, 600, 3);
  const GrowingGraph& g = model->graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(g.out_degree(v) == 3);
  for (const StepTrace& tr : traces) CHECK(tr.copy_flags.size() == 3);
  CHECK_NOTHROW(model->check_structure());
  CHECK(g.num_vertices() == 4 + 600);
}

TEST_CASE("hybrid walks start inside the snapshot and keep out-degree d") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Hybrid), false);
  const auto traces = grow(*model, 600, 4);
  const GrowingGraph& g = model->graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(g.out_degree(v) == 2);
  for (const StepTrace& tr : traces) {
    CHECK(tr.new_edges.size() == 2);
    CHECK(tr.walk_start < tr.new_vertices[0]);
  }
  CHECK_NOTHROW(model->check_structure());
  CHECK(g.is_connected());
}

TEST_CASE("vertex-and-edge-op growth follows its drawn counts") {
  ModelConfig cfg = ModelConfig::defaults(ModelTag::Pref);
  std::get<PrefParams>(cfg.params).a = SequenceSpec::constant(2);
  std::get<PrefParams>(cfg.params).b = SequenceSpec::constant(1);
  auto model = make_model(cfg, false);
  const auto traces = grow(*model, 400, 5);
  for (const StepTrace& tr : traces) {
    CHECK(tr.new_vertices.size() == 1);
    CHECK(tr.vertex_op_edges == 2);
    CHECK(tr.edge_op_pivots.size() == 1);
    CHECK(tr.new_edges.size() == 3);
  }
  CHECK(model->graph().num_vertices() == 2 + 400);
  CHECK(model->graph().num_edges() == 1 + 3 * 400);

  // a == 0 steps skip the vertex entirely
  ModelConfig edges_only = ModelConfig::defaults(ModelTag::Pref);
  std::get<PrefParams>(edges_only.params).a = SequenceSpec::constant(0);
  std::get<PrefParams>(edges_only.params).b = SequenceSpec::constant(2);
  auto em = make_model(edges_only, false);
  grow(*em, 100, 6);
  CHECK(em->graph().num_vertices() == 2);
  CHECK(em->graph().num_edges() == 1 + 2 * 100);
}

TEST_CASE("multi-draw undirected model adds x+y+z edges per step") {
  auto model = make_model(ModelConfig::defaults(ModelTag::AclD), false);
  const auto traces = grow(*model, 500, 7);
  for (const StepTrace& tr : traces) {
    CHECK(tr.vertex_op_edges == 3);  // x=2 neighbours + y=1 loop
    CHECK(tr.new_edges.size() == 4);
    CHECK(tr.new_edge_specs[2].kind == EdgeKind::Loop);
  }
  CHECK(model->graph().num_vertices() == 2 + 500);
  CHECK(model->graph().num_edges() == 1 + 4 * 500);
  CHECK(model->graph().is_connected());
}

TEST_CASE("degree-plus-delta native growth keeps its weight table consistent") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Glp), false);
  const auto traces = grow(*model, 800, 8);
  CHECK(model->graph().num_edges() == 1 + 2 * 800);  // x = 2 edges either op
  std::uint64_t vertex_ops = 0;
  for (const StepTrace& tr : traces) vertex_ops += tr.new_vertices.size();
  CHECK(model->graph().num_vertices() == 2 + vertex_ops);
  CHECK(vertex_ops > 800 * 0.75 - 5 * std::sqrt(800 * 0.75 * 0.25));
  CHECK(vertex_ops < 800 * 0.75 + 5 * std::sqrt(800 * 0.75 * 0.25));
  CHECK_NOTHROW(model->check_structure());
  CHECK(model->tree_kind() == TreeKind::None);
}

TEST_CASE("bounded-degree variant always adds a vertex and clamps leniently") {
  auto strict_model = make_model(ModelConfig::defaults(ModelTag::Parid), false);
  grow(*strict_model, 600, 9);
  CHECK(strict_model->graph().num_vertices() == 2 + 600);
  CHECK(strict_model->clamp_events() == 0);
  CHECK_NOTHROW(strict_model->check_structure());

  ModelConfig lenient = ModelConfig::defaults(ModelTag::Parid);
  auto& p = std::get<ParidParams>(lenient.params);
  p.x = SequenceSpec::uniform_int(1, 8);
  p.strict = false;  // draws above u get clamped
  CHECK_NOTHROW(lenient.validate());
  auto model = make_model(lenient, false);
  const auto traces = grow(*model, 400, 10);
  CHECK(model->clamp_events() > 0);
  for (const StepTrace& tr : traces) {
    CHECK(tr.new_vertices.size() == 1);
    CHECK(tr.new_edges.size() >= 1);
    CHECK(tr.new_edges.size() <= 4);
  }
  CHECK_NOTHROW(model->check_structure());
}

TEST_CASE("directed multi-draw model adds x+y+q+z arcs around each new vertex") {
  auto model = make_model(ModelConfig::defaults(ModelTag::AclC), false);
  grow(*model, 500, 11);
  const GrowingGraph& g = model->graph();
  CHECK(g.num_vertices() == 2 + 500);
  CHECK(g.num_edges() == 2 + 3 * 500);  // x + y + z = 3, q = 0

  ModelConfig with_self = ModelConfig::defaults(ModelTag::AclC);
  std::get<AclCParams>(with_self.params).q = SequenceSpec::constant(1);
  auto sm = make_model(with_self, false);
  const auto traces = grow(*sm, 50, 12);
  for (const StepTrace& tr : traces) {
    CHECK(tr.vertex_op_edges == 3);  // x + y + q
    CHECK(tr.new_edges.size() == 4);
    const EdgeSpec& self = tr.new_edge_specs[2];
    CHECK(self.tail == self.head);  // the proper self-arc
  }
}

TEST_CASE("generalized directed steps follow the case split") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Directed), false);
  const auto traces = grow(*model, 400, 13);
  const GrowingGraph& g = model->graph();
  CHECK(g.num_vertices() == 2 + 400);
  CHECK(g.num_edges() == 2 + 5 * 400);  // a+b+c+d = 4 vertex-op edges, e = 1
  CHECK(g.num_headless_edges() == 400);
  CHECK(g.num_tailless_edges() == 400);
  for (const StepTrace& tr : traces) {
    CHECK(tr.case_tag == 1);  // a >= 1 forces the headed-pivot case
    CHECK(tr.vertex_op_edges == 4);
  }

  ModelConfig tailcase = ModelConfig::defaults(ModelTag::Directed);
  std::get<DirectedParams>(tailcase.params).a = SequenceSpec::constant(0);
  auto tm = make_model(tailcase, false);
  for (const StepTrace& tr : grow(*tm, 100, 14)) CHECK(tr.case_tag == 2);

  // a+b = 0 suppresses the vertex op, dummy edges included
  ModelConfig edges_only = ModelConfig::defaults(ModelTag::Directed);
  auto& ep = std::get<DirectedParams>(edges_only.params);
  ep.a = SequenceSpec::constant(0);
  ep.b = SequenceSpec::constant(0);
  ep.c = SequenceSpec::constant(3);
  ep.d = SequenceSpec::constant(1);
  ep.e = SequenceSpec::constant(2);
  auto em = make_model(edges_only, false);
  const auto etraces = grow(*em, 100, 15);
  CHECK(em->graph().num_vertices() == 2);
  CHECK(em->graph().num_edges() == 2 + 2 * 100);
  CHECK(em->graph().num_headless_edges() == 0);
  for (const StepTrace& tr : etraces) {
    CHECK(tr.case_tag == 0);
    CHECK(tr.new_vertices.empty());
    CHECK(tr.edge_op_pivots.size() == 2);
  }
}

TEST_CASE("directed scale-free growth adds x arcs per step across all three ops") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Dsf), false);
  const auto traces = grow(*model, 500, 16);
  const GrowingGraph& g = model->graph();
  CHECK(g.num_edges() == 2 + 500);
  std::uint64_t births = 0;
  for (const StepTrace& tr : traces) {
    CHECK(tr.case_tag >= 1);
    CHECK(tr.case_tag <= 3);
    CHECK(tr.new_edges.size() == 1);
    CHECK(tr.new_vertices.size() == (tr.case_tag == 3 ? 0 : 1));
    births += tr.new_vertices.size();
  }
  CHECK(g.num_vertices() == 2 + births);
  CHECK_NOTHROW(model->check_structure());
}

TEST_CASE("cooper-frieze edge count equals seed edges plus the drawn sum") {
  auto model = make_model(ModelConfig::defaults(ModelTag::CooperFrieze), false);
  grow(*model, 500, 17);
  CHECK(model->graph().num_edges() == 1 + 500);  // x is constant 1
  CHECK_NOTHROW(model->check_structure());
  CHECK(model->graph().is_connected());

  ModelConfig varied = ModelConfig::defaults(ModelTag::CooperFrieze);
  std::get<CooperFriezeParams>(varied.params).x = SequenceSpec::uniform_int(1, 3);
  auto vm = make_model(varied, false);
  const auto traces = grow(*vm, 300, 18);
  std::uint64_t drawn = 0;
  for (const StepTrace& tr : traces) drawn += tr.new_edges.size();
  CHECK(vm->graph().num_edges() == 1 + drawn);
  CHECK(drawn >= 300);
  CHECK(drawn <= 900);
  CHECK_NOTHROW(vm->check_structure());
}

TEST_CASE("pegging preserves 3-regularity and its count laws") {
  auto model = make_model(ModelConfig::defaults(ModelTag::Pegging), false);
  const auto traces = grow(*model, 2000, 19);
  const GrowingGraph& g = model->graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) == 3);
  CHECK(g.num_vertices() == 4 + 2 * 2000);
  CHECK(g.num_edges() == 6 + 3 * 2000);
  CHECK(g.num_edges_ever() == 6 + 5 * 2000);
  CHECK(g.is_connected());
  CHECK_NOTHROW(model->check_structure());
  for (const StepTrace& tr : traces) {
    CHECK(tr.retired_edges.size() == 2);
    CHECK(tr.new_edges.size() == 5);
    CHECK(tr.new_vertices.size() == 2);
    CHECK(tr.oriented.size() == 4);
  }
}

TEST_CASE("clique growth obeys the clique, eligibility and edge counts") {
  auto kt = make_model(ModelConfig::defaults(ModelTag::KTree), false);
  const auto ktraces = grow(*kt, 500, 20);
  REQUIRE(kt->cliques() != nullptr);
  CHECK(kt->cliques()->size() == 1 + 3 * 500);
  for (const auto& c : *kt->cliques()) CHECK(c.size() == 3);
  CHECK(kt->graph().num_edges() == 3 + 3 * 500);
  CHECK_NOTHROW(kt->check_structure());
  for (const StepTrace& tr : ktraces) CHECK(tr.new_cliques.size() == 3);

  auto ap = make_model(ModelConfig::defaults(ModelTag::Apollonian), false);
  const auto atraces = grow(*ap, 500, 21);
  CHECK(ap->cliques()->size() == 1 + 3 * 500);
  CHECK_NOTHROW(ap->check_structure());  // asserts eligible = 1 + t(k-1)
  std::set<std::uint32_t> chosen;
  for (const StepTrace& tr : atraces) CHECK(chosen.insert(tr.clique).second);
}

TEST_CASE("step abort records the failing step") {
  const StepAbort e(7, "probe");
  CHECK(e.step == 7);
  CHECK(std::string(e.what()).find("at step 7") != std::string::npos);
}
