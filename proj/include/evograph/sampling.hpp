#pragma once

#include <cstdint>
#include <vector>

#include "evograph/graph.hpp"
#include "evograph/rng.hpp"

namespace evograph {

/// Exact rational, den >= 1, reduced. Used wherever a preference weight or
/// distribution must be handled without floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

bool frac_eq(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd);

/**
 * Fenwick tree over non-negative integer weights supporting append, point
 * update and exact proportional sampling: P(i) = weight(i) / total().
 */
class WeightIndex {
 public:
  std::size_t size() const { return raw_.size(); }
  std::int64_t total() const { return total_; }
  std::int64_t weight(std::size_t i) const { return raw_.at(i); }

  void push(std::int64_t w);
  void add(std::size_t i, std::int64_t dw);
  /// Smallest i with weight(0)+...+weight(i) > x; requires 0 <= x < total().
  std::size_t find_prefix(std::int64_t x) const;
  std::size_t sample(RngStream& rng) const;

 private:
  void rebuild();

  std::vector<std::int64_t> raw_;
  std::vector<std::int64_t> tree_;  // 1-based, capacity cap_
  std::size_t cap_ = 0;
  std::int64_t total_ = 0;
};

/// Geometric over {0,1,2,...}: failures before the first success, success
/// probability p in (0,1]. P(X=k) = (1-p)^k p.
std::uint64_t geo_sample(RngStream& rng, double p);

struct EdgeEndpoint {
  EdgeId edge;
  VertexId vertex;
};

/// Uniform endpoint of a proper or loop edge (loops yield their vertex).
VertexId uniform_endpoint(RngStream& rng, const GrowingGraph& g, EdgeId e);

/// Degree-proportional vertex draw realized as uniform edge id in [0,m) then
/// uniform endpoint. Valid only while no edge has ever been retired, so edge
/// ids [0,m) are exactly the live edges of the sampled snapshot.
EdgeEndpoint rho0_sample(RngStream& rng, const GrowingGraph& g, std::uint64_t m_snapshot);

/// In-degree draw: uniform among the first k entries of headed_edges(), then
/// that edge's head. Append-only headed list makes the prefix a snapshot.
EdgeEndpoint rho_in_sample(RngStream& rng, const GrowingGraph& g, std::uint64_t headed_snapshot);
/// Out-degree draw via tailed_edges() prefix.
EdgeEndpoint rho_out_sample(RngStream& rng, const GrowingGraph& g, std::uint64_t tailed_snapshot);

/// Walks `len` uniform out-arc steps from `start`; throws if a visited vertex
/// has no out-arc.
VertexId random_walk_end(RngStream& rng, const GrowingGraph& g, VertexId start,
                         std::uint64_t len);

/// PageRank vector with damping q and uniform restart over the first n ids:
/// pi = (1-q) sum_k q^k u P^k. Iterates to L1 tolerance; throws on a dangling
/// vertex or non-convergence.
std::vector<double> pagerank_power(const GrowingGraph& g, double q, double tol,
                                   std::size_t max_iters = 100000);

double total_variation(const std::vector<double>& a, const std::vector<double>& b);

// Exact per-vertex distributions used as oracles for the samplers above.
// Entries are (num, den) with a common den; not reduced.
struct Frac {
  std::int64_t num;
  std::int64_t den;
};
std::vector<Frac> rho0_dist(const GrowingGraph& g);
std::vector<Frac> rho_delta_dist(const GrowingGraph& g, const Rational& delta);
std::vector<Frac> rho_in_dist(const GrowingGraph& g);
std::vector<Frac> rho_out_dist(const GrowingGraph& g);

}  // namespace evograph
