// Degree-driven families in vertex-op/edge-op form: the endpoint-of-uniform-
// edge model, its multi-draw undirected and directed relatives, and the
// degree-plus-delta processes. The latter run natively on Fenwick-indexed
// weights; with a coupling attached they run on the expanded multigraph
// where every draw is again an endpoint of a uniform edge and so carries a
// genuine pivot.

#include <stdexcept>

#include "evograph/sampling.hpp"
#include "models_impl.hpp"

namespace evograph::detail {
namespace {

class PrefModel final : public GrowthModel {
 public:
  PrefModel(const PrefParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), a_(p.a), b_(p.b), endpoint_(p.endpoint), vertex_(p.vertex) {}

  TreeKind tree_kind() const override { return TreeKind::EdgeTree; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Pref;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const std::int64_t a = a_.draw(rng);
    const std::int64_t b = b_.draw(rng);
    const std::uint64_t m0 = g_.num_edges_ever();
    const std::uint64_t n0 = g_.num_vertices();

    if (a > 0) {
      const EdgeId e1 = static_cast<EdgeId>(rng.below(m0));
      const VertexId w1 = endpoint_.pick_endpoint(rng, g_, e1);
      const VertexId v = g_.add_vertex(birth);
      tr.new_vertices.push_back(v);
      tr.vertex_op_pivot = e1;
      tr.vertex_op_edges = static_cast<std::uint32_t>(a);
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, w1, birth));
      for (std::int64_t i = 1; i < a; ++i) {
        const VertexId u =
            vertex_.pick_vertex(rng, g_, n0, v, static_cast<std::uint32_t>(i - 1));
        g0_add_vertex_edge(tr, v, u, birth);
      }
    }
    for (std::int64_t j = 0; j < b; ++j) {
      const EdgeId ej = static_cast<EdgeId>(rng.below(m0));
      const VertexId wj = endpoint_.pick_endpoint(rng, g_, ej);
      const VertexId xj =
          vertex_.pick_vertex(rng, g_, n0, kNoVertex, static_cast<std::uint32_t>(j));
      tr.edge_op_pivots.push_back(ej);
      g0_add_vertex_edge(tr, wj, xj, birth);
    }
    return tr;
  }

 private:
  void g0_add_vertex_edge(StepTrace& tr, VertexId x, VertexId y, std::uint32_t birth) {
    const EdgeKind kind = x == y ? EdgeKind::Loop : EdgeKind::Proper;
    push_edge(tr, g_, g_.add_edge(kind, x, y, birth));
  }

  SequenceSpec a_, b_;
  Strategy endpoint_, vertex_;
};

// multi-draw undirected: X neighbour draws for the new vertex, Y loops on
// it, Z endpoint-pair edges, all degree-proportional against the start
// snapshot; pivots are the uniform edges realizing the draws
class AclDModel final : public GrowthModel {
 public:
  AclDModel(const AclDParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), x_(p.x), y_(p.y), z_(p.z) {}

  TreeKind tree_kind() const override { return TreeKind::EdgeTree; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Pref;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const std::int64_t x = x_.draw(rng);
    const std::int64_t y = y_.draw(rng);
    const std::int64_t z = z_.draw(rng);
    const std::uint64_t m0 = g_.num_edges_ever();

    std::vector<EdgeEndpoint> nbrs(static_cast<std::size_t>(x));
    for (auto& ee : nbrs) ee = rho0_sample(rng, g_, m0);
    std::vector<std::pair<EdgeEndpoint, EdgeEndpoint>> pairs(static_cast<std::size_t>(z));
    for (auto& pr : pairs) {
      pr.first = rho0_sample(rng, g_, m0);
      pr.second = rho0_sample(rng, g_, m0);
    }

    const VertexId v = g_.add_vertex(birth);
    tr.new_vertices.push_back(v);
    tr.vertex_op_edges = static_cast<std::uint32_t>(x + y);
    tr.vertex_op_pivot = nbrs.front().edge;
    for (const auto& ee : nbrs)
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, ee.vertex, birth));
    for (std::int64_t i = 0; i < y; ++i)
      push_edge(tr, g_, g_.add_edge(EdgeKind::Loop, v, v, birth));
    for (const auto& pr : pairs) {
      tr.edge_op_pivots.push_back(pr.first.edge);
      const EdgeKind kind = pr.first.vertex == pr.second.vertex ? EdgeKind::Loop : EdgeKind::Proper;
      push_edge(tr, g_, g_.add_edge(kind, pr.first.vertex, pr.second.vertex, birth));
    }
    return tr;
  }

 private:
  SequenceSpec x_, y_, z_;
};

// degree-plus-delta weights on a Fenwick index; covers both the two-op
// process (vertex op w.p. p, else pair op) and the bounded one-op variant
// with its strict or clamping out-of-range handling
class DegreeDeltaNative final : public GrowthModel {
 public:
  DegreeDeltaNative(GrowingGraph g0, double p, Rational delta, SequenceSpec x, bool bounded,
                    std::int64_t ell, std::int64_t u, bool strict, StepOp op)
      : GrowthModel(std::move(g0)),
        p_(p),
        s_(delta.den),
        r_(delta.num),
        x_(std::move(x)),
        bounded_(bounded),
        ell_(ell),
        u_(u),
        strict_(strict),
        op_(op) {
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      weights_.push(s_ * static_cast<std::int64_t>(g_.degree(v)) + r_);
  }

  TreeKind tree_kind() const override { return TreeKind::None; }
  std::uint64_t clamp_events() const override { return clamped_; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = op_;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const bool vertex_op = bounded_ || p_ >= 1.0 || rng.bernoulli(p_);
    std::int64_t x = x_.draw(rng);
    if (bounded_ && (x < ell_ || x > u_)) {
      if (strict_) throw StepAbort(t_, "initial degree outside the declared range");
      x = x < ell_ ? ell_ : u_;
      ++clamped_;
    }
    tr.case_tag = vertex_op ? 1 : 2;

    if (vertex_op) {
      std::vector<VertexId> targets(static_cast<std::size_t>(x));
      for (auto& w : targets) w = static_cast<VertexId>(weights_.sample(rng));
      const VertexId v = g_.add_vertex(birth);
      weights_.push(0);
      tr.new_vertices.push_back(v);
      for (VertexId w : targets) {
        push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, w, birth));
        weights_.add(v, s_);
        weights_.add(w, s_);
      }
      weights_.add(v, r_);
    } else {
      std::vector<VertexId> ends(2 * static_cast<std::size_t>(x));
      for (auto& w : ends) w = static_cast<VertexId>(weights_.sample(rng));
      for (std::int64_t j = 0; j < x; ++j) {
        const VertexId a = ends[2 * j], b = ends[2 * j + 1];
        if (a == b) {
          push_edge(tr, g_, g_.add_edge(EdgeKind::Loop, a, a, birth));
          weights_.add(a, 2 * s_);
        } else {
          push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, a, b, birth));
          weights_.add(a, s_);
          weights_.add(b, s_);
        }
      }
    }
    return tr;
  }

  void check_structure() const override {
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      const std::int64_t want = s_ * static_cast<std::int64_t>(g_.degree(v)) + r_;
      if (weights_.weight(v) != want)
        throw std::runtime_error("degree weight drifted at vertex " + std::to_string(v));
    }
  }

 private:
  double p_;
  std::int64_t s_, r_;
  SequenceSpec x_;
  bool bounded_;
  std::int64_t ell_, u_;
  bool strict_;
  StepOp op_;
  WeightIndex weights_;
  std::uint64_t clamped_ = 0;
};

// same processes on the expanded multigraph: every edge carried 2s times and
// r loops per vertex, so a weight draw is an endpoint of a uniform edge
class DegreeDeltaExpanded final : public GrowthModel {
 public:
  DegreeDeltaExpanded(GrowingGraph g0, double p, Rational delta, SequenceSpec x, bool bounded,
                      std::int64_t ell, std::int64_t u, bool strict)
      : GrowthModel(expand(g0, delta)),
        p_(p),
        s_(delta.den),
        r_(delta.num),
        x_(std::move(x)),
        bounded_(bounded),
        ell_(ell),
        u_(u),
        strict_(strict) {}

  TreeKind tree_kind() const override { return TreeKind::EdgeTree; }
  std::uint64_t clamp_events() const override { return clamped_; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Pref;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const bool vertex_op = bounded_ || p_ >= 1.0 || rng.bernoulli(p_);
    std::int64_t x = x_.draw(rng);
    if (bounded_ && (x < ell_ || x > u_)) {
      if (strict_) throw StepAbort(t_, "initial degree outside the declared range");
      x = x < ell_ ? ell_ : u_;
      ++clamped_;
    }
    const std::uint64_t m0 = g_.num_edges_ever();

    if (vertex_op) {
      std::vector<EdgeEndpoint> targets(static_cast<std::size_t>(x));
      for (auto& ee : targets) ee = rho0_sample(rng, g_, m0);
      const VertexId v = g_.add_vertex(birth);
      tr.new_vertices.push_back(v);
      tr.vertex_op_edges = static_cast<std::uint32_t>(2 * s_ * x + r_);
      tr.vertex_op_pivot = targets.front().edge;
      for (const auto& ee : targets)
        for (std::int64_t c = 0; c < 2 * s_; ++c)
          push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, ee.vertex, birth));
      for (std::int64_t c = 0; c < r_; ++c)
        push_edge(tr, g_, g_.add_edge(EdgeKind::Loop, v, v, birth));
    } else {
      std::vector<std::pair<EdgeEndpoint, EdgeEndpoint>> pairs(static_cast<std::size_t>(x));
      for (auto& pr : pairs) {
        pr.first = rho0_sample(rng, g_, m0);
        pr.second = rho0_sample(rng, g_, m0);
      }
      for (const auto& pr : pairs) {
        const VertexId a = pr.first.vertex, b = pr.second.vertex;
        const EdgeKind kind = a == b ? EdgeKind::Loop : EdgeKind::Proper;
        for (std::int64_t c = 0; c < s_; ++c) {
          tr.edge_op_pivots.push_back(pr.first.edge);
          push_edge(tr, g_, g_.add_edge(kind, a, b, birth));
        }
        for (std::int64_t c = 0; c < s_; ++c) {
          tr.edge_op_pivots.push_back(pr.second.edge);
          push_edge(tr, g_, g_.add_edge(kind, a, b, birth));
        }
      }
    }
    return tr;
  }

 private:
  static GrowingGraph expand(const GrowingGraph& g0, Rational delta) {
    if (delta.num < 0)
      throw std::invalid_argument("expanded multigraph form needs delta >= 0");
    const std::int64_t s = delta.den, r = delta.num;
    GrowingGraph g(GraphMode::Undirected);
    for (VertexId v = 0; v < g0.num_vertices(); ++v) g.add_vertex(0);
    for (EdgeId e : g0.live_edges()) {
      const EdgeRecord& rec = g0.edge(e);
      for (std::int64_t c = 0; c < 2 * s; ++c) g.add_edge(rec.kind, rec.tail, rec.head, 0);
    }
    for (VertexId v = 0; v < g0.num_vertices(); ++v)
      for (std::int64_t c = 0; c < r; ++c) g.add_edge(EdgeKind::Loop, v, v, 0);
    g.set_root(g0.root());
    return g;
  }

  double p_;
  std::int64_t s_, r_;
  SequenceSpec x_;
  bool bounded_;
  std::int64_t ell_, u_;
  bool strict_;
  std::uint64_t clamped_ = 0;
};

// directed multi-draw: X in-neighbour draws by out-degree, Y out-neighbour
// draws by in-degree, Q self-edges, Z out/in endpoint pairs; reduces to the
// vertex-op/edge-op form on the undirected projection
class AclCModel final : public GrowthModel {
 public:
  AclCModel(const AclCParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), x_(p.x), y_(p.y), z_(p.z), q_(p.q) {}

  TreeKind tree_kind() const override { return TreeKind::EdgeTree; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Pref;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const std::int64_t x = x_.draw(rng);
    const std::int64_t y = y_.draw(rng);
    const std::int64_t z = z_.draw(rng);
    const std::int64_t q = q_.draw(rng);
    const std::uint64_t t0 = g_.num_tailed_edges();
    const std::uint64_t h0 = g_.num_headed_edges();

    std::vector<EdgeEndpoint> ins(static_cast<std::size_t>(x));
    for (auto& ee : ins) ee = rho_out_sample(rng, g_, t0);
    std::vector<EdgeEndpoint> outs(static_cast<std::size_t>(y));
    for (auto& ee : outs) ee = rho_in_sample(rng, g_, h0);
    std::vector<std::pair<EdgeEndpoint, EdgeEndpoint>> pairs(static_cast<std::size_t>(z));
    for (auto& pr : pairs) {
      pr.first = rho_out_sample(rng, g_, t0);
      pr.second = rho_in_sample(rng, g_, h0);
    }

    const VertexId v = g_.add_vertex(birth);
    tr.new_vertices.push_back(v);
    tr.vertex_op_edges = static_cast<std::uint32_t>(x + y + q);
    tr.vertex_op_pivot = x > 0 ? ins.front().edge : outs.front().edge;
    for (const auto& ee : ins)
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, ee.vertex, v, birth));
    for (const auto& ee : outs)
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, ee.vertex, birth));
    for (std::int64_t i = 0; i < q; ++i)
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, v, birth));
    for (const auto& pr : pairs) {
      tr.edge_op_pivots.push_back(pr.first.edge);
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, pr.first.vertex, pr.second.vertex, birth));
    }
    return tr;
  }

 private:
  SequenceSpec x_, y_, z_, q_;
};

}  // namespace

std::unique_ptr<GrowthModel> make_pref(const PrefParams& p, GrowingGraph g0) {
  return std::make_unique<PrefModel>(p, std::move(g0));
}
std::unique_ptr<GrowthModel> make_acl_d(const AclDParams& p, GrowingGraph g0) {
  return std::make_unique<AclDModel>(p, std::move(g0));
}
std::unique_ptr<GrowthModel> make_glp(const GlpParams& p, GrowingGraph g0, bool expanded) {
  if (expanded)
    return std::make_unique<DegreeDeltaExpanded>(std::move(g0), p.p, p.delta, p.x, false, 0, 0,
                                                 false);
  return std::make_unique<DegreeDeltaNative>(std::move(g0), p.p, p.delta, p.x, false, 0, 0, false,
                                             StepOp::Glp);
}
std::unique_ptr<GrowthModel> make_parid(const ParidParams& p, GrowingGraph g0, bool expanded) {
  if (expanded)
    return std::make_unique<DegreeDeltaExpanded>(std::move(g0), 1.0, p.delta, p.x, true, p.ell,
                                                 p.u, p.strict);
  return std::make_unique<DegreeDeltaNative>(std::move(g0), 1.0, p.delta, p.x, true, p.ell, p.u,
                                             p.strict, StepOp::Parid);
}
std::unique_ptr<GrowthModel> make_acl_c(const AclCParams& p, GrowingGraph g0) {
  return std::make_unique<AclCModel>(p, std::move(g0));
}

}  // namespace evograph::detail
