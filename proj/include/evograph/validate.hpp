#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evograph/graph.hpp"

namespace evograph {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Enumerates every connected undirected multigraph (loops allowed) on
/// exactly `vertices` labeled vertices with 1..max_edges edges.
void for_each_connected_multigraph(std::uint32_t vertices, std::uint32_t max_edges,
                                   const std::function<void(const GrowingGraph&)>& fn);

/// Directed variant over ordered pairs, self-arcs allowed; connectivity is
/// weak. Mode of the produced graphs is Directed.
void for_each_connected_digraph(std::uint32_t vertices, std::uint32_t max_edges,
                                const std::function<void(const GrowingGraph&)>& fn);

/// Deterministic strongly connected digraph on n vertices, out-degree d:
/// v points at v+1, v+1+d(d+1)/2-like fixed offsets mod n.
GrowingGraph fixed_out_regular_digraph(std::uint32_t n, std::uint32_t d);

// Test batteries. quick trims sample sizes for unit-test latency; the full
// versions are the acceptance-grade parameterizations.
std::vector<CheckResult> validate_samplers(bool quick);
std::vector<CheckResult> validate_reductions(bool quick);
std::vector<CheckResult> validate_walk_dominance(bool quick);
std::vector<CheckResult> validate_diameter(bool quick);
std::vector<CheckResult> validate_determinism();
std::vector<CheckResult> validate_all(bool quick);

}  // namespace evograph
