#pragma once

#include <cstdint>
#include <optional>

#include "evograph/config.hpp"

namespace evograph {

/**
 * Logarithmic diameter envelope for one model instance:
 * evaluate(n) = c1 * ln(n) + c2 + slack. c1 and c2 come verbatim from the
 * model's theorem; slack is the declared residual policy (seed vertex count
 * plus 10, or plus 10u for the theorems with an O(u) residual).
 */
struct BoundSpec {
  double c1 = 0.0;
  double c2 = 0.0;
  double slack = 0.0;
  double ell = 0.0, u = 0.0;  // bindings used, for reporting

  double evaluate(std::uint64_t n) const;  // requires n >= 2
};

/// Envelope for the configured model, or nullopt when the theorem's
/// hypotheses fail (zero lower bound on the step sizes, negative delta).
std::optional<BoundSpec> bound_for(const ModelConfig& cfg, std::size_t g0_vertices);

/// Height envelope of the uniform-attachment tree lemma:
/// (u/ell) e ln n + 2ue + n0.
double uniform_tree_height_bound(double ell, double u, std::uint64_t n, std::size_t n0);
/// Height envelope of the removal variant: u e ln n / (ell-1) + 2ue + n0;
/// requires ell > 1.
double removal_tree_height_bound(double ell, double u, std::uint64_t n, std::size_t n0);

}  // namespace evograph
