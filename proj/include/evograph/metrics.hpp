#pragma once

#include <cstdint>
#include <vector>

#include "evograph/graph.hpp"

namespace evograph {

/**
 * Immutable simple-graph snapshot for distance computations: undirected view
 * of the live proper edges with multi-edges collapsed; loops and dummy edges
 * carry no distance information and are dropped.
 */
class DistanceView {
 public:
  explicit DistanceView(const GrowingGraph& g);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_undirected_edges() const { return targets_.size() / 2; }

  const VertexId* neighbors_begin(VertexId v) const { return targets_.data() + offsets_[v]; }
  const VertexId* neighbors_end(VertexId v) const { return targets_.data() + offsets_[v + 1]; }
  std::size_t simple_degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

/// Depths from source; -1 for unreachable vertices.
std::vector<std::int32_t> bfs_depths(const DistanceView& view, VertexId source);
std::vector<std::int32_t> bfs_depths_multi(const DistanceView& view,
                                           const std::vector<VertexId>& sources);

int eccentricity(const DistanceView& view, VertexId v);

/// Exact diameter: double-sweep lower bound, then iFUB fringe pruning.
/// Throws std::runtime_error if the view is disconnected.
int diameter_exact(const DistanceView& view);

/// All-pairs BFS maximum; reference oracle, guarded to n <= 2000.
int diameter_oracle(const DistanceView& view);

/// Max depth over all vertices from the root; throws if disconnected.
int height_from_root(const DistanceView& view, VertexId root);

}  // namespace evograph
