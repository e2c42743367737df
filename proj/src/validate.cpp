#include "evograph/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evograph/config.hpp"
#include "evograph/harness.hpp"
#include "evograph/metrics.hpp"
#include "evograph/models.hpp"
#include "evograph/rng.hpp"
#include "evograph/sampling.hpp"
#include "evograph/trace.hpp"

namespace evograph {
namespace {

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

/// Weight den*deg + num realized structurally: 2*den copies of every edge
/// plus num loops at every vertex, so the uniform-edge draw over the
/// expansion is exactly the delta-shifted degree draw over the original.
GrowingGraph expand_undirected(const GrowingGraph& g, const Rational& delta) {
  const std::int64_t s = delta.den, r = delta.num;
  const auto nv = static_cast<VertexId>(g.num_vertices());
  GrowingGraph hat(GraphMode::Undirected);
  for (VertexId v = 0; v < nv; ++v) hat.add_vertex(0);
  for (EdgeId e : g.live_edges()) {
    const auto& rec = g.edge(e);
    for (std::int64_t c = 0; c < 2 * s; ++c) hat.add_edge(rec.kind, rec.tail, rec.head, 0);
  }
  for (VertexId v = 0; v < nv; ++v)
    for (std::int64_t c = 0; c < r; ++c) hat.add_edge(EdgeKind::Loop, v, v, 0);
  return hat;
}

/// In-weight den_a*indeg + num_a and out-weight den_b*outdeg + num_b over a
/// common scale s = lcm of the denominators: s proper copies per edge plus
/// r tailless stubs and q headless stubs per vertex.
GrowingGraph expand_directed(const GrowingGraph& g, const Rational& alpha, const Rational& beta,
                             std::int64_t& s_out, std::int64_t& r_out, std::int64_t& q_out) {
  const std::int64_t s = std::lcm(alpha.den, beta.den);
  const std::int64_t r = alpha.num * (s / alpha.den);
  const std::int64_t q = beta.num * (s / beta.den);
  s_out = s;
  r_out = r;
  q_out = q;
  const auto nv = static_cast<VertexId>(g.num_vertices());
  GrowingGraph hat(GraphMode::GeneralizedDirected);
  for (VertexId v = 0; v < nv; ++v) hat.add_vertex(0);
  for (EdgeId e : g.live_edges()) {
    const auto& rec = g.edge(e);
    for (std::int64_t c = 0; c < s; ++c) hat.add_edge(EdgeKind::Proper, rec.tail, rec.head, 0);
  }
  for (VertexId v = 0; v < nv; ++v) {
    for (std::int64_t c = 0; c < r; ++c) hat.add_edge(EdgeKind::Tailless, kNoVertex, v, 0);
    for (std::int64_t c = 0; c < q; ++c) hat.add_edge(EdgeKind::Headless, v, kNoVertex, 0);
  }
  return hat;
}

GrowingGraph path_graph(std::uint32_t n) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t v = 0; v < n; ++v) g.add_vertex(0);
  for (std::uint32_t v = 0; v + 1 < n; ++v) g.add_edge(EdgeKind::Proper, v, v + 1, 0);
  return g;
}

GrowingGraph cycle_graph(std::uint32_t n) {
  GrowingGraph g = path_graph(n);
  g.add_edge(EdgeKind::Proper, 0, n - 1, 0);
  return g;
}

GrowingGraph star_graph(std::uint32_t n) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t v = 0; v < n; ++v) g.add_vertex(0);
  for (std::uint32_t v = 1; v < n; ++v) g.add_edge(EdgeKind::Proper, 0, v, 0);
  return g;
}

GrowingGraph clique_graph(std::uint32_t n) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t v = 0; v < n; ++v) g.add_vertex(0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(EdgeKind::Proper, i, j, 0);
  return g;
}

std::vector<double> to_probs(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  std::vector<double> p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return p;
}

std::vector<double> frac_values(const std::vector<Frac>& fs) {
  std::vector<double> p(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    p[i] = static_cast<double>(fs[i].num) / static_cast<double>(fs[i].den);
  return p;
}

std::string graph_tsv(const GrowingGraph& g) {
  std::ostringstream os;
  g.write_tsv(os);
  return os.str();
}

}  // namespace

void for_each_connected_multigraph(std::uint32_t vertices, std::uint32_t max_edges,
                                   const std::function<void(const GrowingGraph&)>& fn) {
  if (vertices == 0) return;
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId i = 0; i < vertices; ++i)
    for (VertexId j = i; j < vertices; ++j) slots.emplace_back(i, j);
  std::vector<std::size_t> pick;
  // Multisets of slots, non-decreasing, so each multigraph appears once.
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (!pick.empty()) {
      GrowingGraph g(GraphMode::Undirected);
      for (VertexId v = 0; v < vertices; ++v) g.add_vertex(0);
      for (std::size_t s : pick) {
        auto [a, b] = slots[s];
        g.add_edge(a == b ? EdgeKind::Loop : EdgeKind::Proper, a, b, 0);
      }
      if (g.is_connected()) fn(g);
    }
    if (pick.size() == max_edges) return;
    for (std::size_t s = lo; s < slots.size(); ++s) {
      pick.push_back(s);
      rec(s);
      pick.pop_back();
    }
  };
  rec(0);
}

void for_each_connected_digraph(std::uint32_t vertices, std::uint32_t max_edges,
                                const std::function<void(const GrowingGraph&)>& fn) {
  if (vertices == 0) return;
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId i = 0; i < vertices; ++i)
    for (VertexId j = 0; j < vertices; ++j) slots.emplace_back(i, j);
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (!pick.empty()) {
      GrowingGraph g(GraphMode::Directed);
      for (VertexId v = 0; v < vertices; ++v) g.add_vertex(0);
      for (std::size_t s : pick) g.add_edge(EdgeKind::Proper, slots[s].first, slots[s].second, 0);
      if (g.is_connected()) fn(g);
    }
    if (pick.size() == max_edges) return;
    for (std::size_t s = lo; s < slots.size(); ++s) {
      pick.push_back(s);
      rec(s);
      pick.pop_back();
    }
  };
  rec(0);
}

GrowingGraph fixed_out_regular_digraph(std::uint32_t n, std::uint32_t d) {
  if (d == 0 || d >= n) throw std::invalid_argument("fixed digraph needs 0 < d < n");
  std::vector<std::uint32_t> offs;
  for (std::uint32_t k = 0; offs.size() < d; ++k) {
    std::uint32_t o = (k * (k + 1) / 2 + 1) % n;
    if (o != 0 && std::find(offs.begin(), offs.end(), o) == offs.end()) offs.push_back(o);
  }
  GrowingGraph g(GraphMode::Directed);
  for (std::uint32_t v = 0; v < n; ++v) g.add_vertex(0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t o : offs) g.add_edge(EdgeKind::Proper, v, (v + o) % n, 0);
  return g;
}

std::vector<CheckResult> validate_samplers(bool quick) {
  std::vector<CheckResult> out;

  const std::uint64_t n_geo = quick ? 20000 : 200000;
  const double ps[] = {0.9, 0.5, 0.2};
  for (std::size_t pi = 0; pi < 3; ++pi) {
    const double p = ps[pi];
    RngStream rng(0xA11CE5ED, pi);
    double sum = 0.0;
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < n_geo; ++i) {
      std::uint64_t x = geo_sample(rng, p);
      sum += static_cast<double>(x);
      zeros += x == 0;
    }
    const double mean = sum / static_cast<double>(n_geo);
    const double target = (1.0 - p) / p;
    const double sd_mean = std::sqrt(1.0 - p) / p / std::sqrt(static_cast<double>(n_geo));
    const double z0 = static_cast<double>(zeros) / static_cast<double>(n_geo);
    const double sd_z0 = std::sqrt(p * (1.0 - p) / static_cast<double>(n_geo));
    const bool pass = std::abs(mean - target) < 5.0 * sd_mean && std::abs(z0 - p) < 5.0 * sd_z0;
    out.push_back({fmt("geo_mean_p%.1f", p), pass,
                   fmt("mean=%.4f target=%.4f P(0)=%.4f", mean, target, z0)});
  }
  {
    RngStream rng(0xA11CE5ED, 9);
    bool all_zero = true;
    for (int i = 0; i < 1000; ++i) all_zero = all_zero && geo_sample(rng, 1.0) == 0;
    out.push_back({"geo_degenerate_p1", all_zero, "X identically 0 at p=1"});
  }

  {
    const std::int64_t w0[] = {3, 0, 5, 1, 7, 0, 2};
    WeightIndex wi;
    for (std::int64_t w : w0) wi.push(w);
    auto scan = [&](std::int64_t x) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < wi.size(); ++i) {
        acc += wi.weight(i);
        if (acc > x) return i;
      }
      return wi.size();
    };
    bool ok = wi.total() == 18;
    for (std::int64_t x = 0; ok && x < wi.total(); ++x) ok = wi.find_prefix(x) == scan(x);
    wi.add(2, -5);
    wi.add(0, 4);
    wi.push(6);
    ok = ok && wi.total() == 23;
    for (std::int64_t x = 0; ok && x < wi.total(); ++x) ok = wi.find_prefix(x) == scan(x);
    out.push_back({"weight_index_prefix", ok, fmt("exhaustive find_prefix, total=%lld",
                                                  static_cast<long long>(wi.total()))});
  }

  {
    // Multigraph with a parallel pair and a loop; exact law vs frequencies.
    GrowingGraph g(GraphMode::Undirected);
    for (int v = 0; v < 4; ++v) g.add_vertex(0);
    g.add_edge(EdgeKind::Proper, 0, 1, 0);
    g.add_edge(EdgeKind::Proper, 1, 2, 0);
    g.add_edge(EdgeKind::Proper, 1, 2, 0);
    g.add_edge(EdgeKind::Proper, 2, 3, 0);
    g.add_edge(EdgeKind::Loop, 3, 3, 0);
    const std::uint64_t n_s = quick ? 50000 : 400000;
    RngStream rng(0xB0B0, 1);
    std::vector<std::uint64_t> counts(4, 0);
    for (std::uint64_t i = 0; i < n_s; ++i)
      ++counts[rho0_sample(rng, g, g.num_edges()).vertex];
    const double tv = total_variation(to_probs(counts, n_s), frac_values(rho0_dist(g)));
    out.push_back({"rho0_tv", tv < 0.01, fmt("tv=%.5f over %llu draws", tv,
                                             static_cast<unsigned long long>(n_s))});
  }

  {
    GrowingGraph g(GraphMode::Directed);
    for (int v = 0; v < 3; ++v) g.add_vertex(0);
    g.add_edge(EdgeKind::Proper, 0, 1, 0);
    g.add_edge(EdgeKind::Proper, 1, 2, 0);
    g.add_edge(EdgeKind::Proper, 2, 0, 0);
    g.add_edge(EdgeKind::Proper, 0, 1, 0);
    g.add_edge(EdgeKind::Proper, 2, 2, 0);
    const std::uint64_t n_s = quick ? 50000 : 300000;
    RngStream rng(0xB0B1, 2);
    std::vector<std::uint64_t> cin(3, 0), cout_(3, 0);
    for (std::uint64_t i = 0; i < n_s; ++i) {
      ++cin[rho_in_sample(rng, g, g.num_headed_edges()).vertex];
      ++cout_[rho_out_sample(rng, g, g.num_tailed_edges()).vertex];
    }
    const double tvi = total_variation(to_probs(cin, n_s), frac_values(rho_in_dist(g)));
    const double tvo = total_variation(to_probs(cout_, n_s), frac_values(rho_out_dist(g)));
    out.push_back({"rho_in_tv", tvi < 0.015, fmt("tv=%.5f", tvi)});
    out.push_back({"rho_out_tv", tvo < 0.015, fmt("tv=%.5f", tvo)});
  }

  {
    GrowingGraph g(GraphMode::Directed);
    for (int v = 0; v < 4; ++v) g.add_vertex(0);
    for (int v = 0; v < 3; ++v) g.add_edge(EdgeKind::Proper, v, v + 1, 0);
    RngStream rng(0xB0B2, 3);
    const bool ok = random_walk_end(rng, g, 0, 3) == 3 && random_walk_end(rng, g, 1, 2) == 3 &&
                    random_walk_end(rng, g, 2, 0) == 2;
    out.push_back({"walk_end_path", ok, "deterministic walks on a directed path"});
  }

  return out;
}

std::vector<CheckResult> validate_reductions(bool quick) {
  std::vector<CheckResult> out;

  const std::uint32_t max_v = quick ? 4 : 5;
  const std::uint32_t max_e = quick ? 4 : 6;
  const Rational deltas[] = {{0, 1}, {1, 2}, {1, 1}, {2, 1}};
  std::uint64_t graphs = 0, comparisons = 0, mismatches = 0;
  std::string first_bad;
  for (std::uint32_t nv = 1; nv <= max_v; ++nv) {
    for_each_connected_multigraph(nv, max_e, [&](const GrowingGraph& g) {
      ++graphs;
      for (const Rational& d : deltas) {
        const auto native = rho_delta_dist(g, d);
        const auto hat = rho0_dist(expand_undirected(g, d));
        for (std::size_t v = 0; v < native.size(); ++v) {
          ++comparisons;
          if (!frac_eq(native[v].num, native[v].den, hat[v].num, hat[v].den)) {
            ++mismatches;
            if (first_bad.empty())
              first_bad = fmt(" first: nv=%u delta=%lld/%lld v=%zu", nv,
                              static_cast<long long>(d.num), static_cast<long long>(d.den), v);
          }
        }
      }
    });
  }
  out.push_back({"reduction_undirected_exact", mismatches == 0,
                 fmt("%llu graphs, %llu exact comparisons, %llu mismatches%s",
                     static_cast<unsigned long long>(graphs),
                     static_cast<unsigned long long>(comparisons),
                     static_cast<unsigned long long>(mismatches), first_bad.c_str())});

  const std::uint32_t dmax_v = 3;
  const std::uint32_t dmax_e = quick ? 3 : 4;
  const std::pair<Rational, Rational> dpairs[] = {
      {{0, 1}, {1, 2}}, {{1, 2}, {1, 2}}, {{1, 1}, {1, 3}}, {{2, 1}, {1, 1}}};
  std::uint64_t dgraphs = 0, dmism = 0;
  for (std::uint32_t nv = 1; nv <= dmax_v; ++nv) {
    for_each_connected_digraph(nv, dmax_e, [&](const GrowingGraph& g) {
      ++dgraphs;
      const auto m = static_cast<std::int64_t>(g.num_headed_edges());
      const auto n = static_cast<std::int64_t>(g.num_vertices());
      for (const auto& [alpha, beta] : dpairs) {
        std::int64_t s, r, q;
        const GrowingGraph hat = expand_directed(g, alpha, beta, s, r, q);
        const auto hin = rho_in_dist(hat);
        const auto hout = rho_out_dist(hat);
        for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
          const std::int64_t in_num = s * static_cast<std::int64_t>(g.in_degree(v)) + r;
          const std::int64_t out_num = s * static_cast<std::int64_t>(g.out_degree(v)) + q;
          if (!frac_eq(in_num, s * m + r * n, hin[v].num, hin[v].den) ||
              !frac_eq(out_num, s * m + q * n, hout[v].num, hout[v].den))
            ++dmism;
        }
      }
    });
  }
  out.push_back({"reduction_directed_exact", dmism == 0,
                 fmt("%llu digraphs, 4 weight pairs, %llu mismatches",
                     static_cast<unsigned long long>(dgraphs),
                     static_cast<unsigned long long>(dmism))});

  return out;
}

std::vector<CheckResult> validate_walk_dominance(bool quick) {
  std::vector<CheckResult> out;

  {
    const GrowingGraph g = fixed_out_regular_digraph(20, 3);
    const double q = 0.8;
    const auto pr = pagerank_power(g, q, 1e-12);
    const std::uint64_t n_s = quick ? 100000 : 1000000;
    RngStream rng(0xC0FFEE, 0);
    std::vector<std::uint64_t> counts(20, 0);
    for (std::uint64_t i = 0; i < n_s; ++i) {
      const VertexId start = static_cast<VertexId>(rng.below(20));
      const std::uint64_t len = geo_sample(rng, 1.0 - q);
      ++counts[random_walk_end(rng, g, start, len)];
    }
    const double tv = total_variation(to_probs(counts, n_s), pr);
    out.push_back({"pagerank_walk_tv", tv < 0.01,
                   fmt("tv=%.5f over %llu walks", tv, static_cast<unsigned long long>(n_s))});
  }

  {
    // Walk length L: 0 w.p. pa, 1 w.p. pb, else Geo(1-q). Tail must sit
    // under q^k for every k, which is what keeps walk depth logarithmic.
    const double vals[] = {0.2, 0.5, 0.8};
    const double qs[] = {0.2, 0.5, 0.8};
    std::uint64_t cells = 0, bad = 0;
    double worst = -1.0;
    for (double va : vals)
      for (double vb : vals)
        for (double vc : vals) {
          const double norm = va + vb + vc;
          const double pb = vb / norm, pc = vc / norm;
          for (double q : qs) {
            for (int k = 0; k <= 64; ++k) {
              ++cells;
              const double tail = k == 0 ? pb + pc * q : pc * std::pow(q, k + 1);
              const double bound = std::pow(q, k);
              worst = std::max(worst, tail - bound);
              if (tail > bound + 1e-12) ++bad;
            }
          }
        }
    out.push_back({"walk_tail_dominance", bad == 0,
                   fmt("%llu (grid,q,k) cells, max tail-bound=%.3g",
                       static_cast<unsigned long long>(cells), worst)});
  }

  {
    const double pa = 0.3, pb = 0.3, q = 0.8;
    const std::uint64_t n_s = quick ? 20000 : 100000;
    RngStream rng(0xC0FFEE, 1);
    const int ks[] = {0, 1, 2, 4, 8, 16};
    std::uint64_t over[6] = {0, 0, 0, 0, 0, 0};
    for (std::uint64_t i = 0; i < n_s; ++i) {
      const double r = rng.unit();
      const std::uint64_t len = r < pa ? 0 : (r < pa + pb ? 1 : geo_sample(rng, 1.0 - q));
      for (int j = 0; j < 6; ++j) over[j] += len > static_cast<std::uint64_t>(ks[j]);
    }
    bool ok = true;
    for (int j = 0; j < 6; ++j) {
      const double bound = std::pow(q, ks[j]);
      const double emp = static_cast<double>(over[j]) / static_cast<double>(n_s);
      const double slack = 5.0 * std::sqrt(bound * (1.0 - bound) / static_cast<double>(n_s));
      ok = ok && emp <= bound + slack + 1e-9;
    }
    out.push_back({"walk_tail_empirical", ok, fmt("sampled tails under q^k, %llu draws",
                                                  static_cast<unsigned long long>(n_s))});
  }

  return out;
}

std::vector<CheckResult> validate_diameter(bool quick) {
  std::vector<CheckResult> out;

  {
    struct Fixture {
      GrowingGraph g;
      int expect;
      const char* what;
    };
    std::vector<Fixture> fx;
    fx.push_back({path_graph(2), 1, "path2"});
    fx.push_back({path_graph(10), 9, "path10"});
    fx.push_back({path_graph(101), 100, "path101"});
    fx.push_back({cycle_graph(4), 2, "cycle4"});
    fx.push_back({cycle_graph(9), 4, "cycle9"});
    fx.push_back({cycle_graph(100), 50, "cycle100"});
    fx.push_back({star_graph(12), 2, "star12"});
    fx.push_back({clique_graph(6), 1, "clique6"});
    fx.push_back({clique_graph(2), 1, "clique2"});
    bool ok = true;
    std::string bad;
    for (const auto& f : fx) {
      const DistanceView view(f.g);
      const int d = diameter_exact(view);
      const int o = diameter_oracle(view);
      if (d != f.expect || o != f.expect) {
        ok = false;
        bad = fmt(" %s: exact=%d oracle=%d want=%d", f.what, d, o, f.expect);
      }
    }
    out.push_back({"diameter_fixtures", ok, ok ? "paths, cycles, stars, cliques" : bad});
  }

  {
    const int count = quick ? 40 : 200;
    const ModelTag tags[] = {ModelTag::ForestFire, ModelTag::Copying,      ModelTag::Hybrid,
                             ModelTag::Pref,       ModelTag::AclD,         ModelTag::Glp,
                             ModelTag::Parid,      ModelTag::AclC,         ModelTag::Directed,
                             ModelTag::Dsf,        ModelTag::CooperFrieze, ModelTag::Pegging,
                             ModelTag::KTree,      ModelTag::Apollonian};
    int mismatches = 0, errors = 0, done = 0;
    std::string first_bad;
    for (int i = 0; i < count; ++i) {
      ModelConfig cfg = ModelConfig::defaults(tags[i % 14]);
      cfg.seed = 500 + static_cast<std::uint64_t>(i);
      const std::uint64_t n = 30 + (static_cast<std::uint64_t>(i) * 53) % 200;
      RunOptions opts;
      opts.audit = AuditLevel::Off;
      RunOutput run = run_model(cfg, n, cfg.seed, opts);
      if (!run.result.ok() || !run.model) {
        ++errors;
        if (first_bad.empty())
          first_bad = fmt(" %s n=%llu: %s", model_tag_name(tags[i % 14]),
                          static_cast<unsigned long long>(n), run.result.status.c_str());
        continue;
      }
      const DistanceView view(run.model->graph());
      const int oracle = diameter_oracle(view);
      ++done;
      if (run.result.diameter != oracle) {
        ++mismatches;
        if (first_bad.empty())
          first_bad = fmt(" %s n=%llu: exact=%lld oracle=%d", model_tag_name(tags[i % 14]),
                          static_cast<unsigned long long>(n),
                          static_cast<long long>(run.result.diameter), oracle);
      }
    }
    out.push_back({"diameter_random_instances", mismatches == 0 && errors == 0,
                   fmt("%d instances, %d mismatches, %d errors%s", done, mismatches, errors,
                       first_bad.c_str())});
  }

  return out;
}

std::vector<CheckResult> validate_determinism() {
  std::vector<CheckResult> out;

  {
    ModelConfig cfg = ModelConfig::defaults(ModelTag::Pref);
    cfg.seed = 42;
    RunOptions opts;
    opts.keep_traces = true;
    RunOutput a = run_model(cfg, 2000, cfg.seed, opts);
    RunOutput b = run_model(cfg, 2000, cfg.seed, opts);
    const bool same = a.result.ok() && b.result.ok() &&
                      graph_tsv(a.model->graph()) == graph_tsv(b.model->graph()) &&
                      a.result.diameter == b.result.diameter &&
                      a.result.height == b.result.height;
    out.push_back({"determinism_rerun", same, "identical graph bytes across reruns"});

    GrowingGraph replay = build_g0(cfg);
    for (const StepTrace& tr : a.traces) apply_trace(replay, tr);
    out.push_back({"determinism_replay", graph_tsv(replay) == graph_tsv(a.model->graph()),
                   "trace replay reproduces the grown graph"});
  }

  {
    ModelConfig cfg = ModelConfig::defaults(ModelTag::KTree);
    cfg.seed = 7;
    const std::vector<std::uint64_t> ns = {200, 400, 600};
    const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6};
    const auto serial = sweep(cfg, ns, seeds, AuditLevel::Off, 1);
    const auto parallel = sweep(cfg, ns, seeds, AuditLevel::Off, 4);
    std::ostringstream sa, sb;
    write_results_csv(sa, serial);
    write_results_csv(sb, parallel);
    out.push_back({"determinism_sweep_threads", sa.str() == sb.str(),
                   fmt("%zu rows, 1 vs 4 threads", serial.size())});
  }

  {
    RngStream a(7, 3), b(7, 3), c(7, 4), d(7, 3);
    bool same = true, differs = false;
    for (int i = 0; i < 8; ++i) {
      same = same && a.next_u64() == b.next_u64();
      differs = differs || c.next_u64() != d.next_u64();
    }
    out.push_back({"rng_stream_stability", same && differs, "streams repeat and separate"});
  }

  return out;
}

std::vector<CheckResult> validate_all(bool quick) {
  std::vector<CheckResult> out;
  for (auto&& batch : {validate_samplers(quick), validate_reductions(quick),
                       validate_walk_dominance(quick), validate_diameter(quick),
                       validate_determinism()})
    for (auto&& c : batch) out.push_back(std::move(c));
  return out;
}

}  // namespace evograph
