#include "evograph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "evograph/metrics.hpp"

namespace evograph {
namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

const char* audit_level_name(AuditLevel a) {
  switch (a) {
    case AuditLevel::Off: return "off";
    case AuditLevel::Checkpoints: return "checkpoints";
    case AuditLevel::EveryStep: return "every-step";
  }
  return "?";
}

AuditLevel audit_level_from_name(const std::string& name) {
  if (name == "off") return AuditLevel::Off;
  if (name == "checkpoints") return AuditLevel::Checkpoints;
  if (name == "every-step" || name == "every_step") return AuditLevel::EveryStep;
  throw std::invalid_argument("unknown audit level: " + name);
}

RunOutput run_model(const ModelConfig& cfg, std::uint64_t n, std::uint64_t seed,
                    const RunOptions& opts) {
  RunOutput out;
  RunResult& res = out.result;
  res.model = model_tag_name(cfg.tag);
  res.config = cfg.digest();
  res.seed = seed;
  res.n = n;
  const auto t_start = std::chrono::steady_clock::now();

  try {
    const bool audit = opts.audit != AuditLevel::Off;
    out.model = make_model(cfg, audit);
    GrowthModel& model = *out.model;
    const std::size_t n0_vertices = model.graph().num_vertices();
    if (audit)
      out.tree = std::make_unique<CoupledTree>(
          CoupledTree::from_seed(model.graph(), model.tree_kind()));

    RngStream rng(seed, n);
    const std::uint64_t every =
        (opts.audit == AuditLevel::EveryStep || n <= 1000) ? 1 : (n + 99) / 100;

    for (std::uint64_t t = 1; t <= n; ++t) {
      StepTrace tr = model.step(rng);
      if (out.tree) out.tree->apply(model.graph(), tr);
      if (opts.keep_traces) out.traces.push_back(std::move(tr));

      if (audit && (t % every == 0 || t == n)) {
        model.check_structure();
        const DominationReport rep =
            check_domination(model.graph(), *out.tree, model.domination_policy(),
                             model.cliques(), CheckScope::All);
        res.checks += rep.checked;
        res.violations += rep.violations;
        if (!rep.ok() && res.status == "ok")
          res.status = "violation: " + rep.details.front();
      }
      if (opts.connectivity_checks && ((t & (t - 1)) == 0 || t == n)) {
        if (!model.graph().is_connected()) {
          ++res.violations;
          if (res.status == "ok")
            res.status = "violation: disconnected at step " + std::to_string(t);
        }
      }
    }

    const GrowingGraph& g = model.graph();
    res.vertices = g.num_vertices();
    res.edges = g.num_edges();
    if (opts.measure) {
      DistanceView view(g);
      res.diameter = diameter_exact(view);
      res.height = height_from_root(view, g.root());
      if (const auto b = bound_for(cfg, n0_vertices))
        res.bound = b->evaluate(std::max<std::uint64_t>(n, 2));
    }
    if (out.tree) {
      res.tree_height = static_cast<std::int64_t>(out.tree->height());
      res.tree_weighted_height = static_cast<std::int64_t>(out.tree->weighted_height());
    }
    res.clamped = model.clamp_events();
  } catch (const StepAbort& e) {
    res.status = std::string("aborted: ") + e.what();
  } catch (const std::exception& e) {
    res.status = std::string("error: ") + e.what();
  }

  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return out;
}

RunResult run(const ModelConfig& cfg, std::uint64_t n, std::uint64_t seed, AuditLevel audit) {
  RunOptions opts;
  opts.audit = audit;
  return run_model(cfg, n, seed, opts).result;
}

std::vector<RunResult> sweep(const ModelConfig& cfg, const std::vector<std::uint64_t>& n_list,
                             const std::vector<std::uint64_t>& seeds, AuditLevel audit,
                             unsigned threads) {
  std::vector<std::uint64_t> ns = n_list, ss = seeds;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());

  struct Cell {
    std::uint64_t n, seed;
  };
  std::vector<Cell> cells;
  for (std::uint64_t n : ns)
    for (std::uint64_t s : ss) cells.push_back({n, s});

  std::vector<RunResult> rows(cells.size());
  if (threads == 0) threads = thread_count_from_env();
  threads = std::max(1u, std::min<unsigned>(threads, cells.size()));

  if (threads == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      rows[i] = run(cfg, cells[i].n, cells[i].seed, audit);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        rows[i] = run(cfg, cells[i].n, cells[i].seed, audit);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

void write_results_csv(std::ostream& out, const std::vector<RunResult>& rows) {
  out << "model,config,seed,n,vertices,edges,diameter,height,tree_height,"
         "tree_weighted_height,bound,checks,violations,clamped,status\n";
  for (const RunResult& r : rows) {
    out << r.model << ',' << r.config << ',' << r.seed << ',' << r.n << ',' << r.vertices << ','
        << r.edges << ',' << r.diameter << ',' << r.height << ',' << r.tree_height << ','
        << r.tree_weighted_height << ',' << (r.bound < 0 ? "-" : format_double(r.bound)) << ','
        << r.checks << ',' << r.violations << ',' << r.clamped << ',' << csv_escape(r.status)
        << '\n';
  }
}

void write_results_jsonl(std::ostream& out, const std::vector<RunResult>& rows) {
  for (const RunResult& r : rows) {
    nlohmann::json j;
    j["model"] = r.model;
    j["config"] = r.config;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["diameter"] = r.diameter;
    j["height"] = r.height;
    j["tree_height"] = r.tree_height;
    j["tree_weighted_height"] = r.tree_weighted_height;
    if (r.bound >= 0) j["bound"] = format_double(r.bound);
    j["checks"] = r.checks;
    j["violations"] = r.violations;
    j["clamped"] = r.clamped;
    j["status"] = r.status;
    out << j.dump() << '\n';
  }
}

GrowthFit fit_growth(const std::vector<RunResult>& rows) {
  // group mean diameters by n
  std::vector<std::pair<std::uint64_t, std::pair<double, std::uint64_t>>> groups;
  for (const RunResult& r : rows) {
    if (!r.ok() || r.diameter < 0) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == r.n; });
    if (it == groups.end()) {
      groups.push_back({r.n, {static_cast<double>(r.diameter), 1}});
    } else {
      it->second.first += static_cast<double>(r.diameter);
      it->second.second += 1;
    }
  }
  if (groups.size() < 3)
    throw std::invalid_argument("growth fit needs at least 3 distinct n values");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(groups.size());
  std::vector<std::pair<double, double>> pts;
  for (const auto& g : groups) {
    const double x = std::log(static_cast<double>(g.first));
    const double y = g.second.first / static_cast<double>(g.second.second);
    pts.push_back({x, y});
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = k * sxx - sx * sx;
  if (std::fabs(denom) < 1e-12)
    throw std::invalid_argument("growth fit needs spread-out n values");
  GrowthFit fit;
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  for (const auto& [x, y] : pts)
    fit.residual = std::max(fit.residual, std::fabs(y - (fit.slope * x + fit.intercept)));
  return fit;
}

unsigned thread_count_from_env() {
  const char* env = std::getenv("EVOGRAPH_THREADS");
  if (env == nullptr) return 1;
  const long v = std::strtol(env, nullptr, 10);
  if (v < 1 || v > 1024) return 1;
  return static_cast<unsigned>(v);
}

}  // namespace evograph
