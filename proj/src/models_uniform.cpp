// Ambassador-based models: forest fire, copying, and the walk-realized
// hybrid. Each step joins one new vertex to targets chosen around a uniform
// ambassador, which is what couples them to plain or weighted recursive
// trees of vertices.

#include <deque>
#include <stdexcept>

#include "evograph/sampling.hpp"
#include "models_impl.hpp"

namespace evograph::detail {
namespace {

class ForestFireModel final : public GrowthModel {
 public:
  ForestFireModel(const ForestFireParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), p_(p.p), q_(p.q) {
    visited_.resize(g_.num_vertices(), 0);
    cand_mark_.resize(g_.num_vertices(), 0);
  }

  TreeKind tree_kind() const override { return TreeKind::VertexTree; }
  DominationPolicy domination_policy() const override {
    return DominationPolicy{1, false, true, false, 1};
  }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::ForestFire;

    const std::uint64_t n0 = g_.num_vertices();
    const VertexId v = g_.add_vertex(static_cast<std::uint32_t>(t_));
    visited_.push_back(0);
    cand_mark_.push_back(0);
    tr.new_vertices.push_back(v);

    const VertexId w0 = static_cast<VertexId>(rng.below(n0));
    tr.ambassador = w0;
    ++epoch_;
    // the fire spreads over the pre-step snapshot only: the new vertex's own
    // arcs must not conduct it back to v
    visited_[v] = epoch_;
    visited_[w0] = epoch_;
    push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, w0, static_cast<std::uint32_t>(t_)));

    std::deque<VertexId> queue{w0};
    std::vector<VertexId> cand;
    while (!queue.empty()) {
      const VertexId w = queue.front();
      queue.pop_front();
      // Geo(0) is read as 0: the p=q=0 process grows a plain recursive tree.
      const std::uint64_t x = p_ > 0.0 ? geo_sample(rng, p_) : 0;
      const std::uint64_t y = q_ > 0.0 ? geo_sample(rng, q_) : 0;
      burn(rng, tr, v, w, g_.out_arcs(w), x, cand, queue);
      burn(rng, tr, v, w, g_.in_arcs(w), y, cand, queue);
    }
    return tr;
  }

 private:
  void burn(RngStream& rng, StepTrace& tr, VertexId v, VertexId w, const std::vector<Arc>& arcs,
            std::uint64_t want, std::vector<VertexId>& cand, std::deque<VertexId>& queue) {
    (void)w;
    if (want == 0) return;
    cand.clear();
    for (const Arc& a : arcs) {
      if (visited_[a.to] == epoch_ || cand_mark_[a.to] == epoch_) continue;
      cand_mark_[a.to] = epoch_;
      cand.push_back(a.to);
    }
    // reset marks so the in-neighbour pass sees a clean slate
    for (VertexId u : cand) cand_mark_[u] = 0;
    const std::uint64_t take = want < cand.size() ? want : cand.size();
    for (std::uint64_t i = 0; i < take; ++i) {
      const std::uint64_t j = i + rng.below(cand.size() - i);
      std::swap(cand[i], cand[j]);
      const VertexId u = cand[i];
      visited_[u] = epoch_;
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, u, static_cast<std::uint32_t>(t_)));
      tr.burned.push_back(u);
      queue.push_back(u);
    }
  }

  double p_, q_;
  std::vector<std::uint32_t> visited_, cand_mark_;
  std::uint32_t epoch_ = 0;
};

class CopyingModel final : public GrowthModel {
 public:
  CopyingModel(const CopyingParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), p_(p.p), d_(p.d) {}

  TreeKind tree_kind() const override { return TreeKind::VertexTree; }
  DominationPolicy domination_policy() const override {
    return DominationPolicy{2, false, false, false, 1};
  }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Copying;

    const std::uint64_t n0 = g_.num_vertices();
    const VertexId w = static_cast<VertexId>(rng.below(n0));
    tr.ambassador = w;
    // heads decided before any mutation; the prototype's list is a snapshot
    std::vector<VertexId> heads(d_);
    tr.copy_flags.resize(d_);
    const std::vector<Arc>& proto = g_.out_arcs(w);
    for (std::uint32_t i = 0; i < d_; ++i) {
      const bool fresh = rng.bernoulli(p_);
      tr.copy_flags[i] = fresh ? 0 : 1;
      heads[i] = fresh ? static_cast<VertexId>(rng.below(n0)) : proto.at(i).to;
    }
    const VertexId v = g_.add_vertex(static_cast<std::uint32_t>(t_));
    tr.new_vertices.push_back(v);
    for (std::uint32_t i = 0; i < d_; ++i)
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, heads[i], static_cast<std::uint32_t>(t_)));
    return tr;
  }

  void check_structure() const override {
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (g_.out_degree(v) != d_)
        throw std::runtime_error("copying: out-degree " + std::to_string(g_.out_degree(v)) +
                                 " != " + std::to_string(d_) + " at vertex " + std::to_string(v));
  }

 private:
  double p_;
  std::uint32_t d_;
};

class HybridModel final : public GrowthModel {
 public:
  HybridModel(const HybridParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), pa_(p.pa), pb_(p.pb), q_(p.q), d_(p.d) {}

  TreeKind tree_kind() const override { return TreeKind::WeightedVertexTree; }
  DominationPolicy domination_policy() const override {
    return DominationPolicy{1, true, false, false, 1};
  }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Hybrid;

    const std::uint64_t n0 = g_.num_vertices();
    // all d links decided against the start-of-step graph, then applied
    std::vector<VertexId> heads(d_);
    for (std::uint32_t i = 0; i < d_; ++i) {
      const double r = rng.unit();
      std::uint64_t len = 0;
      if (r < pa_) {
        len = 0;
      } else if (r < pa_ + pb_) {
        len = 1;
      } else {
        len = geo_sample(rng, 1.0 - q_);
      }
      const VertexId start = static_cast<VertexId>(rng.below(n0));
      heads[i] = random_walk_end(rng, g_, start, len);
      if (i == 0) {
        tr.walk_start = start;
        tr.walk_length = len;
      }
    }
    const VertexId v = g_.add_vertex(static_cast<std::uint32_t>(t_));
    tr.new_vertices.push_back(v);
    for (std::uint32_t i = 0; i < d_; ++i)
      push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, heads[i], static_cast<std::uint32_t>(t_)));
    return tr;
  }

  void check_structure() const override {
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (g_.vertex_birth(v) > 0 && g_.out_degree(v) != d_)
        throw std::runtime_error("hybrid: out-degree != d at vertex " + std::to_string(v));
  }

 private:
  double pa_, pb_, q_;
  std::uint32_t d_;
};

}  // namespace

std::unique_ptr<GrowthModel> make_forest_fire(const ForestFireParams& p, GrowingGraph g0) {
  return std::make_unique<ForestFireModel>(p, std::move(g0));
}
std::unique_ptr<GrowthModel> make_copying(const CopyingParams& p, GrowingGraph g0) {
  return std::make_unique<CopyingModel>(p, std::move(g0));
}
std::unique_ptr<GrowthModel> make_hybrid(const HybridParams& p, GrowingGraph g0) {
  return std::make_unique<HybridModel>(p, std::move(g0));
}

}  // namespace evograph::detail
