#include "evograph/coupling.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "evograph/metrics.hpp"

namespace evograph {
namespace {

void fail(const std::string& what) { throw std::logic_error("coupled tree: " + what); }

/// Incidence lists over live edges, id order; dummies appear at their one
/// present endpoint, directed self-edges and loops once.
std::vector<std::vector<EdgeId>> incidence(const GrowingGraph& g) {
  std::vector<std::vector<EdgeId>> inc(g.num_vertices());
  for (EdgeId e : g.live_edges()) {
    const EdgeRecord& rec = g.edge(e);
    if (rec.tail != kNoVertex) inc[rec.tail].push_back(e);
    if (rec.head != kNoVertex && rec.head != rec.tail) inc[rec.head].push_back(e);
  }
  return inc;
}

/// Vertex depths in the undirected projection (proper + loop edges).
std::vector<std::int64_t> seed_vertex_depths(const GrowingGraph& g) {
  std::vector<std::int64_t> depth(g.num_vertices(), -1);
  std::vector<VertexId> queue{g.root()};
  depth[g.root()] = 0;
  const auto inc = incidence(g);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const VertexId u = queue[qi];
    for (EdgeId e : inc[u]) {
      const EdgeRecord& rec = g.edge(e);
      if (rec.tail == kNoVertex || rec.head == kNoVertex) continue;
      const VertexId w = rec.tail == u ? rec.head : rec.tail;
      if (depth[w] >= 0) continue;
      depth[w] = depth[u] + 1;
      queue.push_back(w);
    }
  }
  return depth;
}

std::int64_t edge_graph_depth(const EdgeRecord& rec, const std::vector<std::int32_t>& vdepth) {
  auto d = [&](VertexId v) -> std::int64_t {
    return v == kNoVertex ? -1 : static_cast<std::int64_t>(vdepth[v]);
  };
  std::int64_t best = -1;
  for (VertexId v : {rec.tail, rec.head}) {
    if (v == kNoVertex || d(v) < 0) continue;
    if (best < 0 || d(v) < best) best = d(v);
  }
  return best < 0 ? -1 : best + 1;
}

}  // namespace

const char* tree_kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::VertexTree: return "vertex";
    case TreeKind::WeightedVertexTree: return "weighted_vertex";
    case TreeKind::EdgeTree: return "edge";
    case TreeKind::GeneralizedEdgeTree: return "generalized_edge";
    case TreeKind::MultiTypedTree: return "multi_typed";
    case TreeKind::CliqueTree: return "clique";
    case TreeKind::PeggingTree: return "pegging";
    case TreeKind::None: return "none";
  }
  return "?";
}

std::string NodeKey::to_string() const {
  switch (type) {
    case Type::Root: return "root";
    case Type::Vertex: return "v" + std::to_string(id);
    case Type::Edge: return "e" + std::to_string(id);
    case Type::Clique: return "c" + std::to_string(id);
  }
  return "?";
}

std::int32_t CoupledTree::index_of(NodeKey k) const {
  const std::vector<std::int32_t>* table = nullptr;
  switch (k.type) {
    case NodeKey::Type::Root:
      return root_ >= 0 && nodes_[root_].key.type == NodeKey::Type::Root ? root_ : -1;
    case NodeKey::Type::Vertex: table = &vidx_; break;
    case NodeKey::Type::Edge: table = &eidx_; break;
    case NodeKey::Type::Clique: table = &cidx_; break;
  }
  if (k.id >= table->size()) return -1;
  return (*table)[k.id];
}

std::int32_t CoupledTree::attach(NodeKey child, std::int32_t parent_idx, std::uint64_t weight) {
  if (index_of(child) >= 0) fail("node " + child.to_string() + " attached twice");
  std::vector<std::int32_t>* table = nullptr;
  switch (child.type) {
    case NodeKey::Type::Root:
      // only the sentinel placed by from_seed, never a proper child
      if (parent_idx >= 0) fail("cannot attach a root node below another");
      break;
    case NodeKey::Type::Vertex: table = &vidx_; break;
    case NodeKey::Type::Edge: table = &eidx_; break;
    case NodeKey::Type::Clique: table = &cidx_; break;
  }
  Node n;
  n.key = child;
  n.parent = parent_idx;
  n.weight = weight;
  if (parent_idx >= 0) {
    n.depth = nodes_[parent_idx].depth + 1;
    n.wdepth = nodes_[parent_idx].wdepth + weight;
    ++nodes_[parent_idx].nchildren;
  } else {
    n.depth = 0;
    n.wdepth = 0;
  }
  height_ = std::max<std::uint64_t>(height_, n.depth);
  wheight_ = std::max<std::uint64_t>(wheight_, n.wdepth);
  const std::int32_t idx = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(n);
  if (table != nullptr) {
    if (table->size() <= child.id) table->resize(child.id + 1, -1);
    (*table)[child.id] = idx;
  }
  return idx;
}

void CoupledTree::relabel_edge(EdgeId from, EdgeId to) {
  const std::int32_t idx = index_of(NodeKey::edge(from));
  if (idx < 0) fail("relabel of unknown edge node e" + std::to_string(from));
  if (index_of(NodeKey::edge(to)) >= 0) fail("relabel target e" + std::to_string(to) + " exists");
  eidx_[from] = -1;
  nodes_[idx].key = NodeKey::edge(to);
  if (eidx_.size() <= to) eidx_.resize(to + 1, -1);
  eidx_[to] = idx;
}

std::uint32_t CoupledTree::depth(NodeKey k) const {
  const std::int32_t i = index_of(k);
  if (i < 0) fail("depth of unknown node " + k.to_string());
  return nodes_[i].depth;
}

std::uint64_t CoupledTree::weighted_depth(NodeKey k) const {
  const std::int32_t i = index_of(k);
  if (i < 0) fail("weighted depth of unknown node " + k.to_string());
  return nodes_[i].wdepth;
}

NodeKey CoupledTree::parent(NodeKey k) const {
  const std::int32_t i = index_of(k);
  if (i < 0 || nodes_[i].parent < 0) fail("parent of " + k.to_string());
  return nodes_[nodes_[i].parent].key;
}

std::uint32_t CoupledTree::children(NodeKey k) const {
  const std::int32_t i = index_of(k);
  if (i < 0) fail("children of unknown node " + k.to_string());
  return nodes_[i].nchildren;
}

CoupledTree CoupledTree::from_seed(const GrowingGraph& g0, TreeKind kind) {
  CoupledTree t;
  t.kind_ = kind;
  if (kind == TreeKind::None) fail("cannot build a tree of kind none");

  if (kind == TreeKind::CliqueTree) {
    t.root_ = t.attach(NodeKey::clique(0), -1, 1);
    return t;
  }

  const auto inc = incidence(g0);
  const auto vdepth = seed_vertex_depths(g0);
  for (std::size_t v = 0; v < g0.num_vertices(); ++v)
    if (vdepth[v] < 0) fail("seed graph is not connected");

  if (kind == TreeKind::VertexTree || kind == TreeKind::WeightedVertexTree ||
      kind == TreeKind::MultiTypedTree) {
    // breadth-first vertex tree from the root, neighbours in edge-id order
    t.root_ = t.attach(NodeKey::vertex(g0.root()), -1, 1);
    std::vector<VertexId> queue{g0.root()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const VertexId u = queue[qi];
      for (EdgeId e : inc[u]) {
        const EdgeRecord& rec = g0.edge(e);
        if (rec.tail == kNoVertex || rec.head == kNoVertex) continue;
        const VertexId w = rec.tail == u ? rec.head : rec.tail;
        if (w == u || t.index_of(NodeKey::vertex(w)) >= 0) continue;
        t.attach(NodeKey::vertex(w), t.index_of(NodeKey::vertex(u)), 1);
        queue.push_back(w);
      }
    }
    if (kind == TreeKind::MultiTypedTree) {
      // every seed edge hangs under the deepest vertex (ties: smallest id)
      VertexId deepest = g0.root();
      for (VertexId v = 0; v < g0.num_vertices(); ++v)
        if (vdepth[v] > vdepth[deepest]) deepest = v;
      const std::int32_t p = t.index_of(NodeKey::vertex(deepest));
      for (EdgeId e : g0.live_edges()) t.attach(NodeKey::edge(e), p, 1);
    }
    return t;
  }

  // edge kinds: breadth-first traversal of the line graph under a sentinel
  // root, starting from the root vertex's incident edges
  t.root_ = t.attach(NodeKey::root(), -1, 1);
  std::vector<EdgeId> queue;
  for (EdgeId e : inc[g0.root()]) {
    t.attach(NodeKey::edge(e), t.root_, 1);
    queue.push_back(e);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const EdgeId a = queue[qi];
    const EdgeRecord& rec = g0.edge(a);
    for (VertexId x : {rec.tail, rec.head}) {
      if (x == kNoVertex) continue;
      for (EdgeId b : inc[x]) {
        if (t.index_of(NodeKey::edge(b)) >= 0) continue;
        t.attach(NodeKey::edge(b), t.index_of(NodeKey::edge(a)), 1);
        queue.push_back(b);
      }
    }
  }
  // init postcondition: tree depth of every seed edge equals its graph depth
  for (EdgeId e : g0.live_edges()) {
    const std::int32_t i = t.index_of(NodeKey::edge(e));
    if (i < 0) fail("seed edge e" + std::to_string(e) + " unreachable");
    std::int64_t want = -1;
    const EdgeRecord& rec = g0.edge(e);
    for (VertexId v : {rec.tail, rec.head}) {
      if (v == kNoVertex) continue;
      if (want < 0 || vdepth[v] + 1 < want) want = vdepth[v] + 1;
    }
    if (static_cast<std::int64_t>(t.nodes_[i].depth) != want)
      fail("seed edge depth mismatch at e" + std::to_string(e));
  }
  return t;
}

void CoupledTree::apply(const GrowingGraph& g, const StepTrace& tr) {
  auto expect_kind = [&](std::initializer_list<TreeKind> ok) {
    for (TreeKind k : ok)
      if (kind_ == k) return;
    fail(std::string("op ") + step_op_name(tr.op) + " cannot drive a " +
         tree_kind_name(kind_) + " tree");
  };

  switch (tr.op) {
    case StepOp::ForestFire:
    case StepOp::Copying: {
      expect_kind({TreeKind::VertexTree});
      VertexId parent = tr.ambassador;
      if (tr.op == StepOp::Copying) {
        bool copied = false;
        for (std::uint8_t f : tr.copy_flags) copied |= f != 0;
        if (!copied) parent = tr.new_edge_specs.at(0).head;
      }
      attach(NodeKey::vertex(tr.new_vertices.at(0)), index_of(NodeKey::vertex(parent)), 1);
      break;
    }
    case StepOp::Hybrid: {
      expect_kind({TreeKind::WeightedVertexTree});
      attach(NodeKey::vertex(tr.new_vertices.at(0)), index_of(NodeKey::vertex(tr.walk_start)),
             tr.walk_length + 1);
      break;
    }
    case StepOp::Pref:
    case StepOp::Directed: {
      expect_kind({TreeKind::EdgeTree, TreeKind::GeneralizedEdgeTree});
      if (tr.new_edges.size() != tr.vertex_op_edges + tr.edge_op_pivots.size())
        fail("trace edge ownership does not cover new_edges");
      if (tr.vertex_op_edges > 0) {
        const std::int32_t p = index_of(NodeKey::edge(tr.vertex_op_pivot));
        if (p < 0) fail("vertex-op pivot is not a tree node");
        for (std::uint32_t i = 0; i < tr.vertex_op_edges; ++i)
          attach(NodeKey::edge(tr.new_edges[i]), p, 1);
      }
      for (std::size_t j = 0; j < tr.edge_op_pivots.size(); ++j) {
        const std::int32_t p = index_of(NodeKey::edge(tr.edge_op_pivots[j]));
        if (p < 0) fail("edge-op pivot is not a tree node");
        attach(NodeKey::edge(tr.new_edges[tr.vertex_op_edges + j]), p, 1);
      }
      break;
    }
    case StepOp::CfA:
    case StepOp::CfB:
    case StepOp::CfC:
    case StepOp::CfD:
    case StepOp::CfE:
    case StepOp::CfF: {
      expect_kind({TreeKind::MultiTypedTree});
      const bool edge_parent =
          tr.op == StepOp::CfB || tr.op == StepOp::CfE || tr.op == StepOp::CfF;
      const std::int32_t p = edge_parent ? index_of(NodeKey::edge(tr.vertex_op_pivot))
                                         : index_of(NodeKey::vertex(tr.vertex_pivot));
      if (p < 0) fail("step pivot is not a tree node");
      for (VertexId v : tr.new_vertices) attach(NodeKey::vertex(v), p, 1);
      for (EdgeId e : tr.new_edges) attach(NodeKey::edge(e), p, 1);
      break;
    }
    case StepOp::Pegging: {
      expect_kind({TreeKind::PeggingTree});
      if (tr.retired_edges.size() != 2 || tr.new_edges.size() != 5)
        fail("pegging trace must retire 2 edges and add 5");
      relabel_edge(tr.retired_edges[0], tr.new_edges[0]);
      relabel_edge(tr.retired_edges[1], tr.new_edges[1]);
      const std::int32_t p = index_of(NodeKey::edge(tr.new_edges[0]));
      for (std::size_t i = 2; i < 5; ++i) attach(NodeKey::edge(tr.new_edges[i]), p, 1);
      break;
    }
    case StepOp::KTree:
    case StepOp::Apollonian: {
      expect_kind({TreeKind::CliqueTree});
      const std::int32_t p = index_of(NodeKey::clique(tr.clique));
      if (p < 0) fail("chosen clique is not a tree node");
      // removed-once law: an eligible clique has never given birth before
      if (tr.op == StepOp::Apollonian && nodes_[p].nchildren != 0)
        fail("clique c" + std::to_string(tr.clique) + " chosen twice");
      for (std::uint32_t c : tr.new_cliques) attach(NodeKey::clique(c), p, 1);
      break;
    }
    default:
      fail(std::string("native op ") + step_op_name(tr.op) + " has no coupling surface");
  }

  // every referenced graph id must exist by now
  for (EdgeId e : tr.new_edges)
    if (e >= g.num_edges_ever()) fail("trace references an edge beyond the graph");
}

void CoupledTree::write_tsv(std::ostream& out) const {
  out << "# tree kind=" << tree_kind_name(kind_) << " nodes=" << nodes_.size()
      << " height=" << height_ << " weighted_height=" << wheight_ << "\n";
  out << "node\tparent\tweight\n";
  for (const Node& n : nodes_) {
    out << n.key.to_string() << '\t'
        << (n.parent < 0 ? std::string("-") : nodes_[n.parent].key.to_string()) << '\t'
        << n.weight << "\n";
  }
}

DominationReport check_domination(const GrowingGraph& g, const CoupledTree& tree,
                                  const DominationPolicy& policy,
                                  const std::vector<std::vector<VertexId>>* cliques,
                                  CheckScope scope) {
  DominationReport rep;
  std::vector<VertexId> sources;
  if (policy.clique) {
    for (std::uint32_t v = 0; v < policy.seed_sources; ++v) sources.push_back(v);
  } else {
    sources.push_back(g.root());
  }
  std::vector<std::int32_t> vdepth;
  if (policy.ghost_depths) {
    std::vector<std::vector<VertexId>> adj(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges_ever(); ++e) {
      const EdgeRecord& rec = g.edge(e);
      if (rec.kind != EdgeKind::Proper || rec.tail == rec.head) continue;
      adj[rec.tail].push_back(rec.head);
      adj[rec.head].push_back(rec.tail);
    }
    vdepth.assign(g.num_vertices(), -1);
    std::vector<VertexId> queue;
    for (VertexId s : sources) {
      vdepth[s] = 0;
      queue.push_back(s);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const VertexId u = queue[qi];
      for (VertexId w : adj[u]) {
        if (vdepth[w] >= 0) continue;
        vdepth[w] = vdepth[u] + 1;
        queue.push_back(w);
      }
    }
  } else {
    DistanceView view(g);
    vdepth = bfs_depths_multi(view, sources);
  }

  const auto& nodes = tree.nodes();
  const std::size_t stride =
      scope == CheckScope::Sampled ? std::max<std::size_t>(1, nodes.size() / 1024) : 1;

  auto violate = [&](const std::string& what) {
    ++rep.violations;
    if (rep.details.size() < 8) rep.details.push_back(what);
  };

  for (std::size_t i = 0; i < nodes.size(); i += stride) {
    const auto& n = nodes[i];
    if (n.key.type == NodeKey::Type::Root) continue;
    ++rep.checked;
    switch (n.key.type) {
      case NodeKey::Type::Vertex: {
        const VertexId v = n.key.id;
        const std::int32_t gd = vdepth[v];
        if (gd < 0) {
          violate("vertex " + std::to_string(v) + " unreachable from the root");
          break;
        }
        if (policy.weighted) {
          if (static_cast<std::uint64_t>(gd) > n.wdepth)
            violate("depth(" + n.key.to_string() + ")=" + std::to_string(gd) +
                    " > weighted tree depth " + std::to_string(n.wdepth));
        } else if (policy.directed_chain) {
          // one hop suffices: checking all nodes makes the chain transitive
          if (g.vertex_birth(v) > 0) {
            const NodeKey pk = tree.parent(n.key);
            bool found = false;
            for (const Arc& a : g.out_arcs(v)) found |= a.to == pk.id;
            if (!found)
              violate("no directed edge " + std::to_string(v) + "->" + std::to_string(pk.id) +
                      " backing the tree hop");
          }
        } else {
          if (static_cast<std::uint64_t>(gd) >
              static_cast<std::uint64_t>(policy.factor) * n.depth)
            violate("depth(" + n.key.to_string() + ")=" + std::to_string(gd) + " > " +
                    std::to_string(policy.factor) + " x tree depth " + std::to_string(n.depth));
        }
        break;
      }
      case NodeKey::Type::Edge: {
        const EdgeRecord& rec = g.edge(n.key.id);
        if (rec.retired) {
          violate(n.key.to_string() + " is a retired edge");
          break;
        }
        const std::int64_t ed = edge_graph_depth(rec, vdepth);
        if (ed < 0) {
          violate(n.key.to_string() + " has no reachable endpoint");
          break;
        }
        if (static_cast<std::uint64_t>(ed) > static_cast<std::uint64_t>(policy.factor) * n.depth)
          violate("edge depth(" + n.key.to_string() + ")=" + std::to_string(ed) + " > " +
                  std::to_string(policy.factor) + " x tree depth " + std::to_string(n.depth));
        break;
      }
      case NodeKey::Type::Clique: {
        if (cliques == nullptr || n.key.id >= cliques->size()) {
          violate(n.key.to_string() + " has no vertex list");
          break;
        }
        std::int64_t cd = 0;
        bool reachable = true;
        for (VertexId v : (*cliques)[n.key.id]) {
          if (vdepth[v] < 0) reachable = false;
          cd = std::max<std::int64_t>(cd, vdepth[v]);
        }
        if (!reachable) {
          violate(n.key.to_string() + " contains an unreachable vertex");
          break;
        }
        if (static_cast<std::uint64_t>(cd) > n.depth)
          violate("clique depth(" + n.key.to_string() + ")=" + std::to_string(cd) +
                  " > tree depth " + std::to_string(n.depth));
        break;
      }
      case NodeKey::Type::Root:
        break;
    }
  }
  return rep;
}

}  // namespace evograph
