#include "evograph/sampling.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace evograph {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool frac_eq(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
  if (ad <= 0 || bd <= 0) throw std::invalid_argument("frac_eq needs positive denominators");
  return static_cast<__int128>(an) * bd == static_cast<__int128>(bn) * ad;
}

void WeightIndex::push(std::int64_t w) {
  if (w < 0) throw std::invalid_argument("negative preference weight");
  raw_.push_back(0);
  if (raw_.size() > cap_) {
    cap_ = cap_ == 0 ? 16 : cap_ * 2;
    raw_.back() = w;
    total_ += w;
    rebuild();
    return;
  }
  add(raw_.size() - 1, w);
}

void WeightIndex::rebuild() {
  // in-place build: every node, occupied or padding, propagates its finished
  // subtree sum to its parent exactly once
  tree_.assign(cap_ + 1, 0);
  for (std::size_t j = 1; j <= cap_; ++j) {
    if (j <= raw_.size()) tree_[j] += raw_[j - 1];
    const std::size_t parent = j + (j & (0 - j));
    if (parent <= cap_) tree_[parent] += tree_[j];
  }
}

void WeightIndex::add(std::size_t i, std::int64_t dw) {
  if (i >= raw_.size()) throw std::out_of_range("weight index out of range");
  if (raw_[i] + dw < 0) throw std::invalid_argument("weight would turn negative");
  raw_[i] += dw;
  total_ += dw;
  for (std::size_t j = i + 1; j <= cap_; j += j & (0 - j)) tree_[j] += dw;
}

std::size_t WeightIndex::find_prefix(std::int64_t x) const {
  if (x < 0 || x >= total_) throw std::out_of_range("prefix target outside [0,total)");
  std::size_t idx = 0;
  std::size_t step = 1;
  while (step * 2 <= cap_) step *= 2;
  std::int64_t rem = x;
  for (; step > 0; step /= 2) {
    std::size_t next = idx + step;
    if (next <= cap_ && tree_[next] <= rem) {
      idx = next;
      rem -= tree_[next];
    }
  }
  // idx = number of elements whose cumulative weight is <= x.
  return idx;
}

std::size_t WeightIndex::sample(RngStream& rng) const {
  if (total_ <= 0) throw std::runtime_error("sampling from empty weight index");
  return find_prefix(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total_))));
}

std::uint64_t geo_sample(RngStream& rng, double p) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("geometric parameter outside (0,1]");
  if (p >= 1.0) return 0;
  if (p > 0.5) {
    // Expected trials < 2; avoids inverse-CDF rounding where mass is coarse.
    std::uint64_t k = 0;
    while (!rng.bernoulli(p)) ++k;
    return k;
  }
  double u = rng.unit();
  return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
}

VertexId uniform_endpoint(RngStream& rng, const GrowingGraph& g, EdgeId e) {
  const EdgeRecord& rec = g.edge(e);
  if (rec.tail == kNoVertex || rec.head == kNoVertex)
    throw std::invalid_argument("endpoint pick needs both endpoints");
  if (rec.tail == rec.head) return rec.tail;
  return rng.coin() ? rec.head : rec.tail;
}

EdgeEndpoint rho0_sample(RngStream& rng, const GrowingGraph& g, std::uint64_t m_snapshot) {
  if (m_snapshot == 0) throw std::runtime_error("degree draw on an edgeless graph");
  if (g.num_edges() != g.num_edges_ever())
    throw std::logic_error("edge-id prefix sampling after retirement");
  auto e = static_cast<EdgeId>(rng.below(m_snapshot));
  return {e, uniform_endpoint(rng, g, e)};
}

EdgeEndpoint rho_in_sample(RngStream& rng, const GrowingGraph& g,
                           std::uint64_t headed_snapshot) {
  if (headed_snapshot == 0) throw std::runtime_error("in-degree draw with no headed edges");
  EdgeId e = g.headed_edges()[rng.below(headed_snapshot)];
  return {e, g.edge(e).head};
}

EdgeEndpoint rho_out_sample(RngStream& rng, const GrowingGraph& g,
                            std::uint64_t tailed_snapshot) {
  if (tailed_snapshot == 0) throw std::runtime_error("out-degree draw with no tailed edges");
  EdgeId e = g.tailed_edges()[rng.below(tailed_snapshot)];
  return {e, g.edge(e).tail};
}

VertexId random_walk_end(RngStream& rng, const GrowingGraph& g, VertexId start,
                         std::uint64_t len) {
  VertexId v = start;
  for (std::uint64_t i = 0; i < len; ++i) {
    const auto& outs = g.out_arcs(v);
    if (outs.empty()) throw std::runtime_error("random walk hit a vertex with no out-arcs");
    v = outs[rng.below(outs.size())].to;
  }
  return v;
}

std::vector<double> pagerank_power(const GrowingGraph& g, double q, double tol,
                                   std::size_t max_iters) {
  if (q < 0.0 || q >= 1.0) throw std::invalid_argument("damping must be in [0,1)");
  std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("pagerank on empty graph");
  std::vector<double> pi(n, 1.0 / static_cast<double>(n)), next(n, 0.0);
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::fill(next.begin(), next.end(), (1.0 - q) / static_cast<double>(n));
    for (VertexId v = 0; v < n; ++v) {
      const auto& outs = g.out_arcs(v);
      if (outs.empty()) throw std::runtime_error("pagerank needs out-degree >= 1 everywhere");
      double share = q * pi[v] / static_cast<double>(outs.size());
      for (const Arc& a : outs) next[a.to] += share;
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - pi[i]);
    pi.swap(next);
    if (delta < tol) return pi;
  }
  throw std::runtime_error("pagerank power iteration did not converge");
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distribution size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s / 2.0;
}

std::vector<Frac> rho0_dist(const GrowingGraph& g) {
  auto den = static_cast<std::int64_t>(g.total_degree());
  if (den == 0) throw std::runtime_error("degree distribution of edgeless graph");
  std::vector<Frac> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    out[v] = {static_cast<std::int64_t>(g.degree(v)), den};
  return out;
}

std::vector<Frac> rho_delta_dist(const GrowingGraph& g, const Rational& delta) {
  // weight(v) = s*deg(v) + r for delta = r/s; total = s*2m + r*n.
  std::int64_t s = delta.den, r = delta.num;
  std::int64_t den = 0;
  std::vector<Frac> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::int64_t w = s * static_cast<std::int64_t>(g.degree(v)) + r;
    if (w < 0) throw std::invalid_argument("negative preference weight; need delta > -1");
    out[v].num = w;
    den += w;
  }
  if (den <= 0) throw std::runtime_error("degenerate preference distribution");
  for (auto& f : out) f.den = den;
  return out;
}

std::vector<Frac> rho_in_dist(const GrowingGraph& g) {
  auto den = static_cast<std::int64_t>(g.num_headed_edges());
  if (den == 0) throw std::runtime_error("in-degree distribution with no headed edges");
  std::vector<Frac> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    out[v] = {static_cast<std::int64_t>(g.in_degree(v)), den};
  return out;
}

std::vector<Frac> rho_out_dist(const GrowingGraph& g) {
  auto den = static_cast<std::int64_t>(g.num_tailed_edges());
  if (den == 0) throw std::runtime_error("out-degree distribution with no tailed edges");
  std::vector<Frac> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    out[v] = {static_cast<std::int64_t>(g.out_degree(v)), den};
  return out;
}

}  // namespace evograph
