#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "evograph/graph.hpp"
#include "evograph/trace.hpp"

namespace evograph {

/**
 * Shape of the recursive tree a model grows alongside its graph. Every kind
 * is a uniform-attachment tree; they differ in what a node stands for and
 * how graph distances relate to tree depths.
 */
enum class TreeKind : std::uint8_t {
  VertexTree,          // nodes = vertices; step attaches the new vertex
  WeightedVertexTree,  // vertex nodes with integer edge weights
  EdgeTree,            // nodes = edges of an undirected graph
  GeneralizedEdgeTree, // nodes = edges incl. headless/tailless dummies
  MultiTypedTree,      // vertex and edge nodes mixed
  CliqueTree,          // nodes = cliques
  PeggingTree,         // edge nodes with retire-and-relabel steps
  None,                // native run, no coupled tree
};

const char* tree_kind_name(TreeKind k);

struct NodeKey {
  enum class Type : std::uint8_t { Root, Vertex, Edge, Clique };
  Type type = Type::Root;
  std::uint32_t id = 0;

  bool operator==(const NodeKey&) const = default;
  std::string to_string() const;

  static NodeKey root() { return {Type::Root, 0}; }
  static NodeKey vertex(VertexId v) { return {Type::Vertex, v}; }
  static NodeKey edge(EdgeId e) { return {Type::Edge, e}; }
  static NodeKey clique(std::uint32_t c) { return {Type::Clique, c}; }
};

/**
 * The tree grown step-by-step next to the graph. Nodes attach with an
 * integer weight (1 unless the kind is weighted); depths, weighted depths
 * and child counts are maintained incrementally. PeggingTree additionally
 * relabels nodes when their edge is retired, keeping depth.
 */
class CoupledTree {
 public:
  /// Builds T_0 from the seed graph: a vertex BFS tree, an edge tree via
  /// breadth-first line-graph traversal from the root's incident edges, a
  /// mixed tree with every seed edge under the deepest vertex, or the
  /// single-clique root. Edge-tree init asserts depth(e, T_0) equals the
  /// seed graph's edge depth for every edge.
  static CoupledTree from_seed(const GrowingGraph& g0, TreeKind kind);

  TreeKind kind() const { return kind_; }
  std::size_t num_nodes() const { return nodes_.size(); }
  std::uint64_t height() const { return height_; }
  std::uint64_t weighted_height() const { return wheight_; }

  bool has(NodeKey k) const { return index_of(k) >= 0; }
  std::uint32_t depth(NodeKey k) const;
  std::uint64_t weighted_depth(NodeKey k) const;
  NodeKey parent(NodeKey k) const;
  std::uint32_t children(NodeKey k) const;

  /// Advances the tree by one recorded step. The graph must already contain
  /// the step's result (ids are validated against it).
  void apply(const GrowingGraph& g, const StepTrace& tr);

  /// One node per line: key, parent key ("-" for the root), edge weight.
  void write_tsv(std::ostream& out) const;

  /// Every node in insertion order (root first); exposed for the checker.
  struct Node {
    NodeKey key;
    std::int32_t parent;  // index; -1 for the root
    std::uint32_t depth = 0;
    std::uint64_t weight = 0;
    std::uint64_t wdepth = 0;
    std::uint32_t nchildren = 0;
  };
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  CoupledTree() = default;
  std::int32_t index_of(NodeKey k) const;
  std::int32_t attach(NodeKey child, std::int32_t parent_idx, std::uint64_t weight);
  void relabel_edge(EdgeId from, EdgeId to);

  TreeKind kind_ = TreeKind::None;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> vidx_, eidx_, cidx_;  // id -> node index, -1 absent
  std::int32_t root_ = -1;
  std::uint64_t height_ = 0, wheight_ = 0;
};

/// What "the tree dominates the graph" means for one model family.
struct DominationPolicy {
  std::uint32_t factor = 2;    // graph depth <= factor * tree depth
  bool weighted = false;       // compare against weighted tree depth, factor 1
  bool directed_chain = false; // every tree hop must be a live directed edge
  bool clique = false;         // clique nodes, multi-source depth-0 seed
  std::uint32_t seed_sources = 1;  // clique: number of depth-0 seed vertices
  // Depths over the historical graph (retired edges included). Needed by the
  // edge-replacing model: deleting an edge can deepen live vertices, so only
  // the monotone historical depth is dominated step by step.
  bool ghost_depths = false;
};

enum class CheckScope : std::uint8_t { All, Sampled };

struct DominationReport {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> details;  // first few violations, for diagnostics

  bool ok() const { return violations == 0; }
};

/**
 * Verifies the per-node domination invariant of the coupling: each tree
 * node's graph depth is bounded by (factor x) its tree depth, with the
 * per-kind refinements from the policy. `cliques` supplies the vertex lists
 * for clique nodes and may be null otherwise. Sampled scope checks about a
 * thousand stride-spaced nodes instead of all of them.
 */
DominationReport check_domination(const GrowingGraph& g, const CoupledTree& tree,
                                  const DominationPolicy& policy,
                                  const std::vector<std::vector<VertexId>>* cliques,
                                  CheckScope scope);

}  // namespace evograph
