#pragma once

// Internal glue between the per-family model sources and the factory.

#include <memory>

#include "evograph/models.hpp"

namespace evograph::detail {

std::unique_ptr<GrowthModel> make_forest_fire(const ForestFireParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_copying(const CopyingParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_hybrid(const HybridParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_pref(const PrefParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_acl_d(const AclDParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_glp(const GlpParams& p, GrowingGraph g0, bool expanded);
std::unique_ptr<GrowthModel> make_parid(const ParidParams& p, GrowingGraph g0, bool expanded);
std::unique_ptr<GrowthModel> make_acl_c(const AclCParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_directed(const DirectedParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_dsf(const DsfParams& p, GrowingGraph g0, bool expanded);
std::unique_ptr<GrowthModel> make_cooper_frieze(const CooperFriezeParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_pegging(GrowingGraph g0, bool coupled);
std::unique_ptr<GrowthModel> make_ktree(const KTreeParams& p, GrowingGraph g0);
std::unique_ptr<GrowthModel> make_apollonian(const ApollonianParams& p, GrowingGraph g0);

/// Records a just-added edge in the trace (id plus replayable spec).
inline void push_edge(StepTrace& tr, const GrowingGraph& g, EdgeId e) {
  const EdgeRecord& rec = g.edge(e);
  tr.new_edges.push_back(e);
  tr.new_edge_specs.push_back(EdgeSpec{rec.kind, rec.tail, rec.head});
}

}  // namespace evograph::detail
