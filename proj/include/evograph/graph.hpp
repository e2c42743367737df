#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace evograph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr VertexId kNoVertex = 0xFFFFFFFFu;
inline constexpr EdgeId kNoEdge = 0xFFFFFFFFu;

enum class GraphMode : std::uint8_t { Undirected, Directed, GeneralizedDirected };

/// Loop is the undirected self-edge kind (degree +2). Directed self-edges are
/// Proper with tail == head. Headless/Tailless are the generalized dummy
/// kinds: exactly one endpoint present.
enum class EdgeKind : std::uint8_t { Proper, Headless, Tailless, Loop };

struct EdgeRecord {
  EdgeKind kind = EdgeKind::Proper;
  bool retired = false;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  std::uint32_t birth = 0;
};

struct Arc {
  VertexId to;
  EdgeId edge;
};

/**
 * Append-mostly multigraph for evolving-graph processes.
 *
 * Vertices and edges get dense sequential ids that are never reused. Edges
 * can be retired (only replace_edge does this); retired edges keep their
 * record but leave all live indices, adjacency and degree counts. Undirected
 * proper edges are stored with tail <= head.
 */
class GrowingGraph {
 public:
  explicit GrowingGraph(GraphMode mode);

  GraphMode mode() const { return mode_; }
  VertexId root() const { return root_; }
  void set_root(VertexId r);

  VertexId add_vertex(std::uint32_t birth);
  EdgeId add_edge(EdgeKind kind, VertexId tail, VertexId head, std::uint32_t birth);
  /// Retires `retired` and adds a replacement edge; returns the new id.
  EdgeId replace_edge(EdgeId retired, EdgeKind kind, VertexId tail, VertexId head,
                      std::uint32_t birth);

  std::size_t num_vertices() const { return vertex_birth_.size(); }
  std::size_t num_edges() const { return live_.size(); }
  std::size_t num_edges_ever() const { return edges_.size(); }
  std::size_t num_proper_edges() const { return live_proper_; }
  std::size_t num_loop_edges() const { return live_loop_; }
  std::size_t num_headless_edges() const { return live_headless_; }
  std::size_t num_tailless_edges() const { return live_tailless_; }
  /// Edges with a head endpoint: proper + tailless.
  std::size_t num_headed_edges() const { return live_proper_ + live_tailless_; }
  /// Edges with a tail endpoint: proper + headless.
  std::size_t num_tailed_edges() const { return live_proper_ + live_headless_; }

  const EdgeRecord& edge(EdgeId e) const { return edges_.at(e); }
  std::uint32_t vertex_birth(VertexId v) const { return vertex_birth_.at(v); }

  std::uint64_t degree(VertexId v) const;      // undirected degree; out+in otherwise
  std::uint64_t out_degree(VertexId v) const;  // tail incidences (incl. headless)
  std::uint64_t in_degree(VertexId v) const;   // head incidences (incl. tailless)
  std::uint64_t total_degree() const { return total_degree_; }

  const std::vector<EdgeId>& live_edges() const { return live_; }
  const std::vector<EdgeId>& headed_edges() const;
  const std::vector<EdgeId>& tailed_edges() const;

  /// Undirected mode only: arcs incident to v (loops appear once).
  const std::vector<Arc>& arcs(VertexId v) const;
  /// Directed modes: proper out-arcs of v, in insertion order.
  const std::vector<Arc>& out_arcs(VertexId v) const;
  const std::vector<Arc>& in_arcs(VertexId v) const;

  /// Weak connectivity over live proper/loop edges; true iff every vertex is
  /// reachable from the root ignoring direction. Dummy edges connect nothing.
  bool is_connected() const;

  void write_tsv(std::ostream& out) const;
  void write_dot(std::ostream& out) const;
  static GrowingGraph read_tsv(std::istream& in);

 private:
  void check_vertex(VertexId v) const;
  void bump_counts(const EdgeRecord& rec, int sign);

  GraphMode mode_;
  VertexId root_ = 0;
  std::vector<std::uint32_t> vertex_birth_;
  std::vector<EdgeRecord> edges_;

  std::vector<EdgeId> live_;
  std::vector<std::uint32_t> live_pos_;  // by edge id; kNoEdge when not live
  std::vector<EdgeId> headed_, tailed_;  // directed modes only
  std::vector<std::uint32_t> headed_pos_, tailed_pos_;

  std::vector<std::uint64_t> deg_, outdeg_, indeg_;
  std::uint64_t total_degree_ = 0;
  std::size_t live_proper_ = 0, live_loop_ = 0, live_headless_ = 0, live_tailless_ = 0;

  std::vector<std::vector<Arc>> adj_;      // undirected
  std::vector<std::vector<Arc>> out_adj_;  // directed modes
  std::vector<std::vector<Arc>> in_adj_;
};

/// Single letter used in the TSV `kind` column.
char edge_kind_letter(EdgeKind k);
EdgeKind edge_kind_from_letter(char c);

}  // namespace evograph
