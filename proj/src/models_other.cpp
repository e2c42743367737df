// The six-op mixed-attachment model, the edge-pegging process on 3-regular
// graphs, and the clique-selection models.

#include <stdexcept>

#include "evograph/sampling.hpp"
#include "models_impl.hpp"

namespace evograph::detail {
namespace {

class CooperFriezeModel final : public GrowthModel {
 public:
  CooperFriezeModel(const CooperFriezeParams& p, GrowingGraph g0)
      : GrowthModel(std::move(g0)), p_(p), x_(p.x), expected_edges_(g_.num_edges()) {}

  TreeKind tree_kind() const override { return TreeKind::MultiTypedTree; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const double r = rng.unit();
    const std::int64_t x = x_.draw(rng);
    const std::uint64_t m0 = g_.num_edges_ever();
    const std::uint64_t n0 = g_.num_vertices();
    expected_edges_ += static_cast<std::uint64_t>(x);

    double acc = p_.pa;
    if (r < acc) {
      // new vertex joined to X uniform old vertices
      tr.op = StepOp::CfA;
      std::vector<VertexId> ws(static_cast<std::size_t>(x));
      for (auto& w : ws) w = static_cast<VertexId>(rng.below(n0));
      tr.vertex_pivot = ws.front();
      const VertexId v = g_.add_vertex(birth);
      tr.new_vertices.push_back(v);
      for (VertexId w : ws) push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, w, birth));
      return tr;
    }
    acc += p_.pb;
    if (r < acc) {
      // new vertex joined to X degree-weighted old vertices
      tr.op = StepOp::CfB;
      std::vector<EdgeEndpoint> ws(static_cast<std::size_t>(x));
      for (auto& ee : ws) ee = rho0_sample(rng, g_, m0);
      tr.vertex_op_pivot = ws.front().edge;
      const VertexId v = g_.add_vertex(birth);
      tr.new_vertices.push_back(v);
      for (const auto& ee : ws)
        push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v, ee.vertex, birth));
      return tr;
    }
    acc += p_.pc;
    if (r < acc) {
      // uniform centre joined to X uniform vertices
      tr.op = StepOp::CfC;
      const VertexId w0 = static_cast<VertexId>(rng.below(n0));
      tr.vertex_pivot = w0;
      for (std::int64_t i = 0; i < x; ++i) {
        const VertexId w = static_cast<VertexId>(rng.below(n0));
        add_undirected(tr, w0, w, birth);
      }
      return tr;
    }
    acc += p_.pd;
    if (r < acc) {
      // uniform centre joined to X degree-weighted vertices
      tr.op = StepOp::CfD;
      const VertexId w0 = static_cast<VertexId>(rng.below(n0));
      tr.vertex_pivot = w0;
      std::vector<EdgeEndpoint> ws(static_cast<std::size_t>(x));
      for (auto& ee : ws) ee = rho0_sample(rng, g_, m0);
      for (const auto& ee : ws) add_undirected(tr, w0, ee.vertex, birth);
      return tr;
    }
    acc += p_.pe;
    if (r < acc) {
      // degree-weighted centre joined to X uniform vertices
      tr.op = StepOp::CfE;
      const EdgeEndpoint c0 = rho0_sample(rng, g_, m0);
      tr.vertex_op_pivot = c0.edge;
      for (std::int64_t i = 0; i < x; ++i) {
        const VertexId w = static_cast<VertexId>(rng.below(n0));
        add_undirected(tr, c0.vertex, w, birth);
      }
      return tr;
    }
    // degree-weighted centre joined to X degree-weighted vertices
    tr.op = StepOp::CfF;
    const EdgeEndpoint c0 = rho0_sample(rng, g_, m0);
    tr.vertex_op_pivot = c0.edge;
    std::vector<EdgeEndpoint> ws(static_cast<std::size_t>(x));
    for (auto& ee : ws) ee = rho0_sample(rng, g_, m0);
    for (const auto& ee : ws) add_undirected(tr, c0.vertex, ee.vertex, birth);
    return tr;
  }

  void check_structure() const override {
    if (g_.num_edges() != expected_edges_)
      throw std::runtime_error("edge count != seed edges + sum of X draws");
  }

 private:
  void add_undirected(StepTrace& tr, VertexId a, VertexId b, std::uint32_t birth) {
    const EdgeKind kind = a == b ? EdgeKind::Loop : EdgeKind::Proper;
    push_edge(tr, g_, g_.add_edge(kind, a, b, birth));
  }

  CooperFriezeParams p_;
  SequenceSpec x_;
  std::uint64_t expected_edges_;
};

class PeggingModel final : public GrowthModel {
 public:
  PeggingModel(GrowingGraph g0, bool coupled) : GrowthModel(std::move(g0)), coupled_(coupled) {
    ghost_adj_.resize(g_.num_vertices());
    for (EdgeId e : g_.live_edges()) {
      const EdgeRecord& rec = g_.edge(e);
      ghost_adj_[rec.tail].push_back(rec.head);
      ghost_adj_[rec.head].push_back(rec.tail);
    }
  }

  TreeKind tree_kind() const override { return TreeKind::PeggingTree; }
  DominationPolicy domination_policy() const override {
    // retiring edges can deepen live vertices, so the dominated depth is the
    // historical one, which never increases as the graph grows
    return DominationPolicy{2, false, false, false, 1, true};
  }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = StepOp::Pegging;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    const std::uint64_t live = g_.num_edges();
    const std::uint64_t i1 = rng.below(live);
    std::uint64_t i2 = rng.below(live - 1);
    if (i2 >= i1) ++i2;  // uniform ordered pair of distinct live edges
    const EdgeId e = g_.live_edges()[i1];
    const EdgeId f = g_.live_edges()[i2];

    // historical depths decide which endpoint the retiring edge keeps;
    // outside a coupled run the stored orientation stands in and the law is
    // unchanged
    VertexId ea = g_.edge(e).tail, eb = g_.edge(e).head;
    VertexId fd = g_.edge(f).tail, fc = g_.edge(f).head;
    if (coupled_) {
      bfs_depths_();
      if (depth_[eb] < depth_[ea]) std::swap(ea, eb);
      if (depth_[fc] < depth_[fd]) std::swap(fd, fc);
    }
    tr.retired_edges.push_back(e);
    tr.retired_edges.push_back(f);
    tr.oriented = {ea, eb, fc, fd};

    const VertexId v1 = g_.add_vertex(birth);
    const VertexId v2 = g_.add_vertex(birth);
    ghost_adj_.emplace_back();
    ghost_adj_.emplace_back();
    tr.new_vertices.push_back(v1);
    tr.new_vertices.push_back(v2);
    push_edge(tr, g_, g_.replace_edge(e, EdgeKind::Proper, ea, v1, birth));
    ghost_link_(ea, v1);
    push_edge(tr, g_, g_.replace_edge(f, EdgeKind::Proper, fd, v2, birth));
    ghost_link_(fd, v2);
    push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, eb, v1, birth));
    ghost_link_(eb, v1);
    push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, fc, v2, birth));
    ghost_link_(fc, v2);
    push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, v1, v2, birth));
    ghost_link_(v1, v2);
    return tr;
  }

  void check_structure() const override {
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (g_.degree(v) != 3)
        throw std::runtime_error("pegging: degree != 3 at vertex " + std::to_string(v));
  }

 private:
  void ghost_link_(VertexId a, VertexId b) {
    ghost_adj_[a].push_back(b);
    ghost_adj_[b].push_back(a);
  }

  // depths over live plus retired edges, monotone under growth
  void bfs_depths_() {
    const std::size_t n = g_.num_vertices();
    depth_.assign(n, 0xFFFFFFFFu);
    queue_.clear();
    queue_.push_back(g_.root());
    depth_[g_.root()] = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const VertexId u = queue_[qi];
      for (VertexId w : ghost_adj_[u]) {
        if (depth_[w] != 0xFFFFFFFFu) continue;
        depth_[w] = depth_[u] + 1;
        queue_.push_back(w);
      }
    }
  }

  bool coupled_;
  std::vector<std::vector<VertexId>> ghost_adj_;
  std::vector<std::uint32_t> depth_;
  std::vector<VertexId> queue_;
};

class CliqueModel final : public GrowthModel {
 public:
  CliqueModel(std::uint32_t k, bool remove_chosen, GrowingGraph g0)
      : GrowthModel(std::move(g0)), k_(k), remove_chosen_(remove_chosen) {
    std::vector<VertexId> seed(k_);
    for (std::uint32_t i = 0; i < k_; ++i) seed[i] = i;
    cliques_.push_back(seed);
    if (remove_chosen_) eligible_.push_back(0);
  }

  TreeKind tree_kind() const override { return TreeKind::CliqueTree; }
  DominationPolicy domination_policy() const override {
    return DominationPolicy{1, false, false, true, k_};
  }
  const std::vector<std::vector<VertexId>>* cliques() const override { return &cliques_; }

  StepTrace step(RngStream& rng) override {
    StepTrace tr;
    tr.step = ++t_;
    tr.op = remove_chosen_ ? StepOp::Apollonian : StepOp::KTree;
    const std::uint32_t birth = static_cast<std::uint32_t>(t_);

    std::uint32_t chosen;
    if (remove_chosen_) {
      const std::uint64_t i = rng.below(eligible_.size());
      chosen = eligible_[i];
      eligible_[i] = eligible_.back();
      eligible_.pop_back();
    } else {
      chosen = static_cast<std::uint32_t>(rng.below(cliques_.size()));
    }
    tr.clique = chosen;

    const std::vector<VertexId> base = cliques_[chosen];
    const VertexId v = g_.add_vertex(birth);
    tr.new_vertices.push_back(v);
    for (VertexId u : base) push_edge(tr, g_, g_.add_edge(EdgeKind::Proper, u, v, birth));
    for (std::uint32_t drop = 0; drop < k_; ++drop) {
      std::vector<VertexId> nc;
      nc.reserve(k_);
      for (std::uint32_t i = 0; i < k_; ++i)
        if (i != drop) nc.push_back(base[i]);
      nc.push_back(v);
      const std::uint32_t id = static_cast<std::uint32_t>(cliques_.size());
      cliques_.push_back(std::move(nc));
      if (remove_chosen_) eligible_.push_back(id);
      tr.new_cliques.push_back(id);
    }
    return tr;
  }

  void check_structure() const override {
    if (cliques_.size() != 1 + t_ * k_)
      throw std::runtime_error("clique count != 1 + t*k");
    if (remove_chosen_ && eligible_.size() != 1 + t_ * (k_ - 1))
      throw std::runtime_error("eligible clique count != 1 + t*(k-1)");
    if (g_.num_edges() != k_ * (k_ - 1) / 2 + t_ * k_)
      throw std::runtime_error("clique model edge count off");
  }

 private:
  std::uint32_t k_;
  bool remove_chosen_;
  std::vector<std::vector<VertexId>> cliques_;
  std::vector<std::uint32_t> eligible_;
};

}  // namespace

std::unique_ptr<GrowthModel> make_cooper_frieze(const CooperFriezeParams& p, GrowingGraph g0) {
  return std::make_unique<CooperFriezeModel>(p, std::move(g0));
}
std::unique_ptr<GrowthModel> make_pegging(GrowingGraph g0, bool coupled) {
  return std::make_unique<PeggingModel>(std::move(g0), coupled);
}
std::unique_ptr<GrowthModel> make_ktree(const KTreeParams& p, GrowingGraph g0) {
  return std::make_unique<CliqueModel>(p.k, false, std::move(g0));
}
std::unique_ptr<GrowthModel> make_apollonian(const ApollonianParams& p, GrowingGraph g0) {
  return std::make_unique<CliqueModel>(p.k, true, std::move(g0));
}

}  // namespace evograph::detail
