#include "evograph/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace evograph {

DistanceView::DistanceView(const GrowingGraph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(g.num_edges());
  for (EdgeId e : g.live_edges()) {
    const EdgeRecord& rec = g.edge(e);
    if (rec.kind != EdgeKind::Proper) continue;
    if (rec.tail == rec.head) continue;  // directed self-edge
    VertexId a = rec.tail, b = rec.head;
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& [a, b] : pairs) {
    ++counts[a + 1];
    ++counts[b + 1];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) offsets_[i] = offsets_[i - 1] + counts[i];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : pairs) {
    targets_[cursor[a]++] = b;
    targets_[cursor[b]++] = a;
  }
}

std::vector<std::int32_t> bfs_depths_multi(const DistanceView& view,
                                           const std::vector<VertexId>& sources) {
  std::size_t n = view.num_vertices();
  std::vector<std::int32_t> depth(n, -1);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s : sources) {
    if (s >= n) throw std::out_of_range("bfs source out of range");
    if (depth[s] == -1) {
      depth[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    std::int32_t d = depth[v] + 1;
    for (const VertexId* it = view.neighbors_begin(v); it != view.neighbors_end(v); ++it) {
      if (depth[*it] == -1) {
        depth[*it] = d;
        queue.push_back(*it);
      }
    }
  }
  return depth;
}

std::vector<std::int32_t> bfs_depths(const DistanceView& view, VertexId source) {
  return bfs_depths_multi(view, {source});
}

namespace {

// BFS returning depths; farthest vertex and its depth via out-params.
std::vector<std::int32_t> sweep(const DistanceView& view, VertexId source, VertexId& far,
                                std::int32_t& ecc) {
  auto depth = bfs_depths(view, source);
  far = source;
  ecc = 0;
  for (VertexId v = 0; v < depth.size(); ++v) {
    if (depth[v] < 0) throw std::runtime_error("diameter of a disconnected graph");
    if (depth[v] > ecc) {
      ecc = depth[v];
      far = v;
    }
  }
  return depth;
}

}  // namespace

int eccentricity(const DistanceView& view, VertexId v) {
  VertexId far;
  std::int32_t ecc;
  sweep(view, v, far, ecc);
  return ecc;
}

int diameter_exact(const DistanceView& view) {
  std::size_t n = view.num_vertices();
  if (n == 0) throw std::invalid_argument("diameter of empty graph");
  if (n == 1) return 0;

  // Double sweep from a max-degree vertex gives the initial lower bound.
  VertexId start = 0;
  for (VertexId v = 1; v < n; ++v)
    if (view.simple_degree(v) > view.simple_degree(start)) start = v;
  VertexId a, b;
  std::int32_t ecc_start, ecc_a;
  sweep(view, start, a, ecc_start);
  auto depth_a = sweep(view, a, b, ecc_a);
  int lb = ecc_a;

  // Midpoint of the a-b path approximates a center; walk b upward.
  std::vector<VertexId> parent(n, kNoVertex);
  {
    std::vector<std::int32_t> depth(n, -1);
    std::vector<VertexId> queue;
    depth[a] = 0;
    queue.push_back(a);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId v = queue[qi];
      for (const VertexId* it = view.neighbors_begin(v); it != view.neighbors_end(v); ++it) {
        if (depth[*it] == -1) {
          depth[*it] = depth[v] + 1;
          parent[*it] = v;
          queue.push_back(*it);
        }
      }
    }
  }
  VertexId r = b;
  for (std::int32_t i = 0; i < depth_a[b] / 2; ++i) r = parent[r];

  VertexId far_r;
  std::int32_t ecc_r;
  auto depth_r = sweep(view, r, far_r, ecc_r);
  lb = std::max(lb, static_cast<int>(ecc_r));

  std::vector<std::vector<VertexId>> fringe(ecc_r + 1);
  for (VertexId v = 0; v < n; ++v) fringe[depth_r[v]].push_back(v);

  int i = ecc_r;
  int ub = 2 * ecc_r;
  while (ub > lb && i > 0) {
    int level_max = 0;
    for (VertexId v : fringe[i]) level_max = std::max(level_max, eccentricity(view, v));
    if (std::max(lb, level_max) > 2 * (i - 1)) return std::max(lb, level_max);
    lb = std::max(lb, level_max);
    ub = 2 * (i - 1);
    --i;
  }
  return lb;
}

int diameter_oracle(const DistanceView& view) {
  std::size_t n = view.num_vertices();
  if (n == 0) throw std::invalid_argument("diameter of empty graph");
  if (n > 2000) throw std::invalid_argument("all-pairs oracle capped at n=2000");
  int best = 0;
  for (VertexId v = 0; v < n; ++v) best = std::max(best, eccentricity(view, v));
  return best;
}

int height_from_root(const DistanceView& view, VertexId root) {
  VertexId far;
  std::int32_t ecc;
  sweep(view, root, far, ecc);
  return ecc;
}

}  // namespace evograph
