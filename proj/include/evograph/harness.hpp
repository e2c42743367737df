#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "evograph/bounds.hpp"
#include "evograph/config.hpp"
#include "evograph/coupling.hpp"
#include "evograph/models.hpp"
#include "evograph/trace.hpp"

namespace evograph {

enum class AuditLevel : std::uint8_t { Off, Checkpoints, EveryStep };

const char* audit_level_name(AuditLevel a);
AuditLevel audit_level_from_name(const std::string& name);

/// One experiment row. wall_seconds stays in memory: serialized rows must be
/// reproducible from (config digest, seed, n) alone, byte for byte.
struct RunResult {
  std::string model;
  std::string config;  // digest
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::int64_t diameter = -1;
  std::int64_t height = -1;
  std::int64_t tree_height = -1;
  std::int64_t tree_weighted_height = -1;
  double bound = -1.0;  // -1 when the config has no bound
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::uint64_t clamped = 0;
  std::string status = "ok";
  double wall_seconds = 0.0;

  bool ok() const { return status == "ok"; }
};

struct RunOptions {
  AuditLevel audit = AuditLevel::Off;
  bool keep_traces = false;
  bool connectivity_checks = true;
  bool measure = true;  // diameter/height/bound after growth
};

struct RunOutput {
  RunResult result;
  std::vector<StepTrace> traces;
  std::unique_ptr<GrowthModel> model;  // final state, null after an early error
  std::unique_ptr<CoupledTree> tree;   // populated when auditing
};

/**
 * Grows the configured model for n steps with the stream RngStream(seed, n),
 * audits the coupled tree at the configured cadence (every step for
 * n <= 1000 or level every-step, else every ceil(n/100) steps plus the final
 * one), spot-checks connectivity at powers of two, then measures diameter,
 * height and tree heights and evaluates the bound. Errors are captured in
 * result.status; the row survives.
 */
RunOutput run_model(const ModelConfig& cfg, std::uint64_t n, std::uint64_t seed,
                    const RunOptions& opts);

RunResult run(const ModelConfig& cfg, std::uint64_t n, std::uint64_t seed, AuditLevel audit);

/// Cross product of n_list x seeds, one isolated RngStream per cell, rows
/// sorted by (n, seed). threads = 0 reads EVOGRAPH_THREADS (default 1).
/// Output bytes are independent of the thread count.
std::vector<RunResult> sweep(const ModelConfig& cfg, const std::vector<std::uint64_t>& n_list,
                             const std::vector<std::uint64_t>& seeds, AuditLevel audit,
                             unsigned threads = 0);

/// Frozen column order:
/// model,config,seed,n,vertices,edges,diameter,height,tree_height,
/// tree_weighted_height,bound,checks,violations,clamped,status
void write_results_csv(std::ostream& out, const std::vector<RunResult>& rows);
void write_results_jsonl(std::ostream& out, const std::vector<RunResult>& rows);

struct GrowthFit {
  double slope = 0.0;      // coefficient on ln n
  double intercept = 0.0;
  double residual = 0.0;   // max |mean diameter - fit| over the n groups
};

/// Least-squares fit of mean diameter against ln n over rows with status ok.
/// Requires at least 3 distinct n values.
GrowthFit fit_growth(const std::vector<RunResult>& rows);

/// EVOGRAPH_THREADS, defaulting to 1; invalid values read as 1.
unsigned thread_count_from_env();

}  // namespace evograph
