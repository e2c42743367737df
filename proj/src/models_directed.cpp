// Directed families: the generalized vertex-op/edge-op process with dummy
// half-edges, and the three-op directed scale-free process. The latter runs
// natively on in/out Fenwick weights; with a coupling attached it runs on
// the expanded half-edge multigraph where each weighted draw is an endpoint
// of a uniform headed or tailed edge.

#include <numeric>
#include <stdexcept>

#include "evograph/sampling.hpp"
#include "models_impl.hpp"

namespace evograph::detail {
namespace {

class DirectedModel final : public GrowthModel {
 public:
  DirectedModel(const DirectedParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), a_(p.a), b_(p.b), c_(p.c), d_(p.d), e_(p.e),
        vertex_(p.vertex) {}

  TreeKind tree_kind() const override { return TreeKind::GeneralizedEdgeTree; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Directed;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const std::int64_t a = a_.draw(rng);
    const std::int64_t b = b_.draw(rng);
    const std::int64_t c = c_.draw(rng);
    const std::int64_t d = d_.draw(rng);
    const std::int64_t e = e_.draw(rng);
    const std::uint64_t h0 = g_.num_headed_edges();
    const std::uint64_t t0 = g_.num_tailed_edges();
    const std::uint64_t n0 = g_.num_vertices();

    // a+b = 0 suppresses the whole vertex operation, dummy edges included
    if (a + b > 0) {
      EdgeId pivot;
      VertexId anchor;
      std::vector<VertexId> heads, tails;
      if (a > 0) {
        tr.case_tag = 1;
        pivot = g_.headed_edges()[rng.below(h0)];
        anchor = g_.edge(pivot).head;
        heads.reserve(a - 1);
        for (std::int64_t i = 1; i < a; ++i)
          heads.push_back(vertex_.pick_vertex(rng, g_, n0, kNoVertex,
                                              static_cast<std::uint32_t>(i - 1)));
        tails.reserve(b);
        for (std::int64_t i = 0; i < b; ++i)
          tails.push_back(vertex_.pick_vertex(rng, g_, n0, kNoVertex,
                                              static_cast<std::uint32_t>(a - 1 + i)));
      } else {
        tr.case_tag = 2;
        pivot = g_.tailed_edges()[rng.below(t0)];
        anchor = g_.edge(pivot).tail;
        tails.reserve(b - 1);
        for (std::int64_t i = 1; i < b; ++i)
          tails.push_back(vertex_.pick_vertex(rng, g_, n0, kNoVertex,
                                              static_cast<std::uint32_t>(i - 1)));
      }
      const VertexId v = g_.add_vertex(birth);
      tr.new_vertices.push_back(v);
      tr.vertex_op_pivot = pivot;
      tr.vertex_op_edges = static_cast<std::uint32_t>(a + b + c + d);
      if (a > 0)
        push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, anchor, birth));
      else
        push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, anchor, v, birth));
      for (VertexId h : heads) push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, h, birth));
      for (VertexId w : tails) push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, w, v, birth));
      for (std::int64_t i = 0; i < c; ++i)
        push_edge(tr, g_, g_.add_edge(EdgeKind::Headless, v, kNoVertex, birth));
      for (std::int64_t i = 0; i < d; ++i)
        push_edge(tr, g_, g_.add_edge(EdgeKind::Tailless, kNoVertex, v, birth));
    }

    for (std::int64_t j = 0; j < e; ++j) {
      const EdgeId ej = g_.tailed_edges()[rng.below(t0)];
      const VertexId w = g_.edge(ej).tail;
      const VertexId x =
          vertex_.pick_vertex(rng, g_, n0, kNoVertex, static_cast<std::uint32_t>(j));
      tr.edge_op_pivots.push_back(ej);
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, w, x, birth));
    }
    return tr;
  }

 private:
  SequenceSpec a_, b_, c_, d_, e_;
  Strategy vertex_;
};

struct DsfWeights {
  std::int64_t s, r, q;  // in-weight s*indeg+r, out-weight s*outdeg+q
};

DsfWeights dsf_weights(const DsfParams& p) {
  const std::int64_t s = std::lcm(p.alpha.den, p.beta.den);
  return {s, p.alpha.num * (s / p.alpha.den), p.beta.num * (s / p.beta.den)};
}

class DsfNative final : public GrowthModel {
 public:
  DsfNative(const DsfParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), pa_(p.pa), pb_(p.pb), w_(dsf_weights(p)), x_(p.x) {
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      win_.push(w_.s * static_cast<std::int64_t>(g_.in_degree(v)) + w_.r);
      wout_.push(w_.s * static_cast<std::int64_t>(g_.out_degree(v)) + w_.q);
    }
  }

  TreeKind tree_kind() const override { return TreeKind::None; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Dsf;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const double op = rng.unit();
    const std::int64_t x = x_.draw(rng);

    if (op < pa_) {
      tr.case_tag = 1;
      std::vector<VertexId> targets(static_cast<std::size_t>(x));
      for (auto& w : targets) w = static_cast<VertexId>(win_.sample(rng));
      const VertexId v = new_vertex(tr, birth);
      for (VertexId w : targets) add_arc(tr, v, w, birth);
    } else if (op < pa_ + pb_) {
      tr.case_tag = 2;
      std::vector<VertexId> sources(static_cast<std::size_t>(x));
      for (auto& w : sources) w = static_cast<VertexId>(wout_.sample(rng));
      const VertexId v = new_vertex(tr, birth);
      for (VertexId w : sources) add_arc(tr, w, v, birth);
    } else {
      tr.case_tag = 3;
      std::vector<std::pair<VertexId, VertexId>> pairs(static_cast<std::size_t>(x));
      for (auto& pr : pairs) {
        pr.first = static_cast<VertexId>(wout_.sample(rng));
        pr.second = static_cast<VertexId>(win_.sample(rng));
      }
      for (const auto& pr : pairs) add_arc(tr, pr.first, pr.second, birth);
    }
    return tr;
  }

  void check_structure() const override {
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (win_.weight(v) != w_.s * static_cast<std::int64_t>(g_.in_degree(v)) + w_.r ||
          wout_.weight(v) != w_.s * static_cast<std::int64_t>(g_.out_degree(v)) + w_.q)
        throw std::runtime_error("in/out weight drifted at vertex " + std::to_string(v));
    }
  }

 private:
  VertexId new_vertex(StepTrace& tr, std::uint32_t birth) {
    const VertexId v = g_.add_vertex(birth);
    win_.push(w_.r);
    wout_.push(w_.q);
    tr.new_vertices.push_back(v);
    return v;
  }
  void add_arc(StepTrace& tr, VertexId from, VertexId to, std::uint32_t birth) {
    push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, from, to, birth));
    wout_.add(from, w_.s);
    win_.add(to, w_.s);
  }

  double pa_, pb_;
  DsfWeights w_;
  SequenceSpec x_;
  WeightIndex win_, wout_;
};

// expanded half-edge form: s copies per edge, plus r tailless and q headless
// stubs per vertex, so in-weight = #headed incidences, out-weight = #tailed
class DsfExpanded final : public GrowthModel {
 public:
  DsfExpanded(const DsfParams& p, GrowingGraph g0)
      : GrowthModel(expand(p, g0)), pa_(p.pa), pb_(p.pb), w_(dsf_weights(p)), x_(p.x) {}

  TreeKind tree_kind() const override { return TreeKind::GeneralizedEdgeTree; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Directed;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const double op = rng.unit();
    const std::int64_t x = x_.draw(rng);
    const std::uint64_t h0 = g_.num_headed_edges();
    const std::uint64_t t0 = g_.num_tailed_edges();

    if (op < pa_ + pb_) {
      const bool in_side = op < pa_;
      tr.case_tag = in_side ? 1 : 2;
      std::vector<EdgeEndpoint> targets(static_cast<std::size_t>(x));
      for (auto& ee : targets)
        ee = in_side ? rho_in_sample(rng, g_, h0) : rho_out_sample(rng, g_, t0);
      const VertexId v = g_.add_vertex(birth);
      tr.new_vertices.push_back(v);
      tr.vertex_op_pivot = targets.front().edge;
      tr.vertex_op_edges = static_cast<std::uint32_t>(w_.s * x + w_.q + w_.r);
      for (const auto& ee : targets)
        for (std::int64_t cpy = 0; cpy < w_.s; ++cpy) {
          if (in_side)
            push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, ee.vertex, birth));
          else
            push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, ee.vertex, v, birth));
        }
      for (std::int64_t i = 0; i < w_.q; ++i)
        push_edge(tr, g_, g_.add_edge(EdgeKind::Headless, v, kNoVertex, birth));
      for (std::int64_t i = 0; i < w_.r; ++i)
        push_edge(tr, g_, g_.add_edge(EdgeKind::Tailless, kNoVertex, v, birth));
    } else {
      tr.case_tag = 0;
      std::vector<std::pair<EdgeEndpoint, EdgeEndpoint>> pairs(static_cast<std::size_t>(x));
      for (auto& pr : pairs) {
        pr.first = rho_out_sample(rng, g_, t0);
        pr.second = rho_in_sample(rng, g_, h0);
      }
      for (const auto& pr : pairs)
        for (std::int64_t cpy = 0; cpy < w_.s; ++cpy) {
          tr.edge_op_pivots.push_back(pr.first.edge);
          push_edge(tr, g_,
                    g_.add_edge(EdgeKind::Proper, pr.first.vertex, pr.second.vertex, birth));
        }
    }
    return tr;
  }

 private:
  static GrowingGraph expand(const DsfParams& p, const GrowingGraph& g0) {
    const DsfWeights w = dsf_weights(p);
    GrowingGraph g(GraphMode::GeneralizedDirected);
    for (VertexId v = 0; v < g0.num_vertices(); ++v) g.add_vertex(0);
    for (EdgeId e : g0.live_edges()) {
      const EdgeRecord& rec = g0.edge(e);
      for (std::int64_t cpy = 0; cpy < w.s; ++cpy)
        g.add_edge(EdgeKind::Proper, rec.tail, rec.head, 0);
    }
    for (VertexId v = 0; v < g0.num_vertices(); ++v) {
      for (std::int64_t i = 0; i < w.q; ++i) g.add_edge(EdgeKind::Headless, v, kNoVertex, 0);
      for (std::int64_t i = 0; i < w.r; ++i) g.add_edge(EdgeKind::Tailless, kNoVertex, v, 0);
    }
    g.set_root(g0.root());
    return g;
  }

  double pa_, pb_;
  DsfWeights w_;
  SequenceSpec x_;
};

}  // namespace

std::unique_ptr<GrowthModel> make_directed(const DirectedParams& p, GrowingGraph g0) {
  return std::make_unique<DirectedModel>(p, std::move(g0));
}
std::unique_ptr<GrowthModel> make_dsf(const DsfParams& p, GrowingGraph g0, bool expanded) {
  if (expanded) return std::make_unique<DsfExpanded>(p, std::move(g0));
  return std::make_unique<DsfNative>(p, std::move(g0));
}

}  // namespace evograph::detail
