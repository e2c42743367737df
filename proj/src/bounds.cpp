#include "evograph/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace evograph {
namespace {

constexpr double kE = 2.718281828459045;

struct Range {
  double lo, hi;
};

Range seq_range(const SequenceSpec& s) {
  return {static_cast<double>(s.min()), static_cast<double>(s.max())};
}

}  // namespace

double BoundSpec::evaluate(std::uint64_t n) const {
  if (n < 2) throw std::invalid_argument("bound is evaluated at n >= 2");
  return c1 * std::log(static_cast<double>(n)) + c2 + slack;
}

double uniform_tree_height_bound(double ell, double u, std::uint64_t n, std::size_t n0) {
  if (ell < 1) throw std::invalid_argument("uniform tree bound needs ell >= 1");
  return (u / ell) * kE * std::log(static_cast<double>(n)) + 2 * u * kE +
         static_cast<double>(n0);
}

double removal_tree_height_bound(double ell, double u, std::uint64_t n, std::size_t n0) {
  if (ell <= 1) throw std::invalid_argument("removal tree bound needs ell > 1");
  return u * kE * std::log(static_cast<double>(n)) / (ell - 1) + 2 * u * kE +
         static_cast<double>(n0);
}

std::optional<BoundSpec> bound_for(const ModelConfig& cfg, std::size_t g0_vertices) {
  BoundSpec b;
  const double n0 = static_cast<double>(g0_vertices);
  b.slack = n0 + 10.0;

  switch (cfg.tag) {
    case ModelTag::ForestFire:
      b.c1 = 2 * kE;
      b.ell = b.u = 1;
      return b;
    case ModelTag::Copying:
      b.c1 = 4 * kE;
      b.ell = b.u = cfg.as<CopyingParams>().d;
      return b;
    case ModelTag::Hybrid: {
      const auto& p = cfg.as<HybridParams>();
      b.c1 = 18.0 / (1.0 - p.q);
      b.ell = b.u = p.d;
      return b;
    }
    case ModelTag::Pref: {
      const auto& p = cfg.as<PrefParams>();
      const auto a = seq_range(p.a), bb = seq_range(p.b);
      b.ell = a.lo + bb.lo;
      b.u = a.hi + bb.hi;
      if (b.ell < 1) return std::nullopt;
      b.c1 = 4 * kE * b.u / b.ell;
      b.c2 = 8 * kE * b.u;
      return b;
    }
    case ModelTag::AclD: {
      const auto& p = cfg.as<AclDParams>();
      b.ell = seq_range(p.x).lo + seq_range(p.y).lo + seq_range(p.z).lo;
      b.u = seq_range(p.x).hi + seq_range(p.y).hi + seq_range(p.z).hi;
      b.c1 = 4 * kE * b.u / b.ell;
      b.c2 = 8 * kE * b.u;
      return b;
    }
    case ModelTag::Glp: {
      const auto& p = cfg.as<GlpParams>();
      if (p.delta.num < 0) return std::nullopt;
      b.ell = seq_range(p.x).lo;
      b.u = seq_range(p.x).hi;
      b.c1 = 4 * kE * (b.u / b.ell + p.delta.value() / (2 * b.ell));
      b.slack = n0 + 10.0 * b.u;
      return b;
    }
    case ModelTag::Parid: {
      const auto& p = cfg.as<ParidParams>();
      b.ell = static_cast<double>(p.ell);
      b.u = static_cast<double>(p.u);
      b.c1 = 4 * kE * (b.u / b.ell + p.delta.value() / (2 * b.ell));
      b.slack = n0 + 10.0 * b.u;
      return b;
    }
    case ModelTag::AclC: {
      const auto& p = cfg.as<AclCParams>();
      b.ell = seq_range(p.x).lo + seq_range(p.y).lo + seq_range(p.z).lo + seq_range(p.q).lo;
      b.u = seq_range(p.x).hi + seq_range(p.y).hi + seq_range(p.z).hi + seq_range(p.q).hi;
      b.c1 = 4 * kE * b.u / b.ell;
      b.c2 = 8 * kE * b.u;
      return b;
    }
    case ModelTag::Directed: {
      const auto& p = cfg.as<DirectedParams>();
      b.ell = seq_range(p.a).lo + seq_range(p.b).lo + seq_range(p.e).lo;
      b.u = seq_range(p.a).hi + seq_range(p.b).hi + seq_range(p.c).hi + seq_range(p.d).hi +
            seq_range(p.e).hi;
      if (b.ell < 1) return std::nullopt;
      b.c1 = 4 * kE * b.u / b.ell;
      b.c2 = 8 * kE * b.u;
      return b;
    }
    case ModelTag::Dsf: {
      const auto& p = cfg.as<DsfParams>();
      b.ell = seq_range(p.x).lo;
      b.u = seq_range(p.x).hi;
      b.c1 = 4 * kE * (b.u + p.alpha.value() + p.beta.value()) / b.ell;
      b.slack = n0 + 10.0 * b.u;
      return b;
    }
    case ModelTag::CooperFrieze: {
      const auto& p = cfg.as<CooperFriezeParams>();
      const double q = p.pa + p.pb;
      if (q <= 0) return std::nullopt;
      b.ell = seq_range(p.x).lo;
      b.u = seq_range(p.x).hi;
      b.c1 = 4 * kE * (b.u / b.ell + 11.0 / q);
      b.c2 = 8 * kE * b.u / b.ell;
      return b;
    }
    case ModelTag::Pegging:
      b.c1 = 4 * kE;
      b.ell = b.u = 1;
      return b;
    case ModelTag::KTree:
      b.c1 = 2 * kE;
      b.ell = b.u = 1;
      return b;
    case ModelTag::Apollonian: {
      const double k = cfg.as<ApollonianParams>().k;
      if (k < 2) return std::nullopt;
      b.c1 = 2 * kE * k / (k - 1);
      b.ell = b.u = 1;
      return b;
    }
  }
  return std::nullopt;
}

}  // namespace evograph
