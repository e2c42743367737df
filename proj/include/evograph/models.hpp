#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "evograph/config.hpp"
#include "evograph/coupling.hpp"
#include "evograph/graph.hpp"
#include "evograph/rng.hpp"
#include "evograph/trace.hpp"

namespace evograph {

/// Raised when a strict-mode hypothesis fails mid-run (records the step).
struct StepAbort : std::runtime_error {
  std::uint64_t step;
  StepAbort(std::uint64_t t, const std::string& what)
      : std::runtime_error(what + " at step " + std::to_string(t)), step(t) {}
};

/**
 * One evolving-graph process bound to its seed graph. step() performs one
 * growth round, mutating the graph and returning the full sampling record.
 * All within-step draws use snapshots of the start-of-step graph, so the
 * online representation matches the step-indexed definition exactly.
 */
class GrowthModel {
 public:
  explicit GrowthModel(GrowingGraph g0) : g_(std::move(g0)) {}
  virtual ~GrowthModel() = default;

  virtual StepTrace step(RngStream& rng) = 0;

  /// Tree the coupled construction grows for this process (None = native
  /// run with no coupling surface).
  virtual TreeKind tree_kind() const = 0;
  virtual DominationPolicy domination_policy() const { return {}; }

  /// Full-graph structural laws (degree regularity, count identities).
  /// Cheap enough to run at audit checkpoints; throws on violation.
  virtual void check_structure() const {}

  /// Clique membership lists for clique-growing models, else null.
  virtual const std::vector<std::vector<VertexId>>* cliques() const { return nullptr; }

  /// Out-of-range draws clamped so far (lenient bounded-degree mode).
  virtual std::uint64_t clamp_events() const { return 0; }

  const GrowingGraph& graph() const { return g_; }
  std::uint64_t steps_done() const { return t_; }

 protected:
  GrowingGraph g_;
  std::uint64_t t_ = 0;
};

/// Instantiates the configured model over its seed graph. With `coupled`
/// set, models whose native representation has no coupling surface (the
/// degree-plus-delta and directed scale-free families) are built in their
/// expanded multigraph form instead, which does.
std::unique_ptr<GrowthModel> make_model(const ModelConfig& cfg, bool coupled);

}  // namespace evograph
