#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "evograph/config.hpp"
#include "evograph/harness.hpp"
#include "evograph/metrics.hpp"
#include "evograph/models.hpp"
#include "evograph/validate.hpp"

namespace {

using namespace evograph;

ModelConfig load_config(const std::string& model, const std::string& config_path) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + config_path);
    nlohmann::json j;
    in >> j;
    return ModelConfig::from_json(j);
  }
  if (!model.empty()) return ModelConfig::defaults(model_tag_from_name(model));
  throw std::runtime_error("need --model or --config");
}

/// Streams to --out when given, else stdout. Files are opened fresh so
/// repeated invocations produce byte-identical content.
void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << bytes;
}

struct CommonOpts {
  std::string model;
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_model_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--model", o.model, "model family name");
  cmd->add_option("--config", o.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
  auto* seed_opt = cmd->add_option("--seed", o.seed, "run seed (overrides config)");
  cmd->parse_complete_callback([&o, seed_opt] { o.seed_set = seed_opt->count() > 0; });
}

int cmd_generate(const CommonOpts& o, std::uint64_t n, const std::string& audit,
                 const std::string& format) {
  ModelConfig cfg = load_config(o.model, o.config_path);
  const std::uint64_t seed = o.seed_set ? o.seed : cfg.seed;
  RunOptions opts;
  opts.audit = audit_level_from_name(audit);
  opts.measure = false;
  RunOutput run = run_model(cfg, n, seed, opts);
  if (!run.result.ok() || !run.model) {
    std::cerr << "generate failed: " << run.result.status << "\n";
    return 1;
  }
  std::ostringstream os;
  if (format == "tsv")
    run.model->graph().write_tsv(os);
  else
    run.model->graph().write_dot(os);
  write_output(o.out_path, os.str());
  return 0;
}

int cmd_couple(const CommonOpts& o, std::uint64_t n, const std::string& audit) {
  ModelConfig cfg = load_config(o.model, o.config_path);
  const std::uint64_t seed = o.seed_set ? o.seed : cfg.seed;
  RunOptions opts;
  opts.audit = audit_level_from_name(audit);
  if (opts.audit == AuditLevel::Off)
    throw std::runtime_error("couple needs --audit checkpoints or every-step");
  RunOutput run = run_model(cfg, n, seed, opts);
  const RunResult& r = run.result;
  std::cout << "model=" << r.model << " seed=" << r.seed << " n=" << r.n
            << " vertices=" << r.vertices << " edges=" << r.edges << "\n"
            << "checks=" << r.checks << " violations=" << r.violations
            << " diameter=" << r.diameter << " height=" << r.height
            << " tree_height=" << r.tree_height
            << " tree_weighted_height=" << r.tree_weighted_height << "\n"
            << "status=" << r.status << "\n";
  if (!o.out_path.empty() && run.tree) {
    std::ostringstream os;
    run.tree->write_tsv(os);
    write_output(o.out_path, os.str());
  }
  return r.ok() && r.violations == 0 ? 0 : 1;
}

int cmd_diameter(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open graph file: " + in_path);
  const GrowingGraph g = GrowingGraph::read_tsv(in);
  const DistanceView view(g);
  std::ostringstream os;
  os << "vertices=" << g.num_vertices() << " edges=" << g.num_edges()
     << " diameter=" << diameter_exact(view)
     << " height=" << height_from_root(view, g.root()) << "\n";
  write_output(out_path, os.str());
  return 0;
}

int cmd_sweep(const CommonOpts& o, const std::vector<std::uint64_t>& ns,
              const std::vector<std::uint64_t>& seeds, const std::string& audit,
              const std::string& format) {
  ModelConfig cfg = load_config(o.model, o.config_path);
  const auto rows = sweep(cfg, ns, seeds, audit_level_from_name(audit));
  std::ostringstream os;
  if (format == "csv")
    write_results_csv(os, rows);
  else
    write_results_jsonl(os, rows);
  write_output(o.out_path, os.str());
  for (const RunResult& r : rows)
    if (!r.ok() || r.violations > 0) return 1;
  return 0;
}

int cmd_validate(bool quick, const std::string& out_path) {
  const auto checks = validate_all(quick);
  std::ostringstream os;
  int failures = 0;
  for (const CheckResult& c : checks) {
    failures += c.pass ? 0 : 1;
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  }
  os << (failures == 0 ? "all checks passed" : "FAILURES: " + std::to_string(failures)) << " ("
     << checks.size() << " checks)\n";
  write_output(out_path, os.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolving random graph models with coupled-tree audits"};
  app.require_subcommand(1);

  CommonOpts gen_o;
  std::uint64_t gen_n = 1000;
  std::string gen_audit = "off", gen_format = "tsv";
  auto* gen = app.add_subcommand("generate", "grow a model and write the graph");
  add_model_flags(gen, gen_o);
  gen->add_option("--n", gen_n, "growth steps");
  gen->add_option("--audit", gen_audit, "audit cadence")
      ->check(CLI::IsMember({"off", "checkpoints", "every-step"}));
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"tsv", "dot"}));

  CommonOpts cpl_o;
  std::uint64_t cpl_n = 1000;
  std::string cpl_audit = "checkpoints";
  auto* cpl = app.add_subcommand("couple", "grow with the coupled tree and audit invariants");
  add_model_flags(cpl, cpl_o);
  cpl->add_option("--n", cpl_n, "growth steps");
  cpl->add_option("--audit", cpl_audit, "audit cadence")
      ->check(CLI::IsMember({"off", "checkpoints", "every-step"}));

  std::string dia_in, dia_out;
  auto* dia = app.add_subcommand("diameter", "measure a stored edge list");
  dia->add_option("graph", dia_in, "graph TSV file")->required()->check(CLI::ExistingFile);
  dia->add_option("--out", dia_out, "output file (default stdout)");

  CommonOpts swp_o;
  std::vector<std::uint64_t> swp_ns, swp_seeds;
  std::string swp_audit = "off", swp_format = "csv";
  auto* swp = app.add_subcommand("sweep", "run an experiment matrix");
  add_model_flags(swp, swp_o);
  swp->add_option("--n", swp_ns, "growth step counts")->required();
  swp->add_option("--seeds", swp_seeds, "seed values")->required();
  swp->add_option("--audit", swp_audit, "audit cadence")
      ->check(CLI::IsMember({"off", "checkpoints", "every-step"}));
  swp->add_option("--format", swp_format, "output format")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  bool val_quick = false;
  std::string val_out;
  auto* val = app.add_subcommand("validate", "run the sampler and oracle batteries");
  val->add_flag("--quick", val_quick, "reduced sample sizes");
  val->add_option("--out", val_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gen_o, gen_n, gen_audit, gen_format);
    if (cpl->parsed()) return cmd_couple(cpl_o, cpl_n, cpl_audit);
    if (dia->parsed()) return cmd_diameter(dia_in, dia_out);
    if (swp->parsed()) return cmd_sweep(swp_o, swp_ns, swp_seeds, swp_audit, swp_format);
    if (val->parsed()) return cmd_validate(val_quick, val_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
