#include "evograph/models.hpp"

#include "models_impl.hpp"

namespace evograph {

std::unique_ptr<GrowthModel> make_model(const ModelConfig& cfg, bool coupled) {
  cfg.validate();
  GrowingGraph g0 = build_g0(cfg);
  using namespace detail;
  switch (cfg.tag) {
    case ModelTag::ForestFire:
      return make_forest_fire(cfg.as<ForestFireParams>(), std::move(g0));
    case ModelTag::Copying:
      return make_copying(cfg.as<CopyingParams>(), std::move(g0));
    case ModelTag::Hybrid:
      return make_hybrid(cfg.as<HybridParams>(), std::move(g0));
    case ModelTag::Pref:
      return make_pref(cfg.as<PrefParams>(), std::move(g0));
    case ModelTag::AclD:
      return make_acl_d(cfg.as<AclDParams>(), std::move(g0));
    case ModelTag::Glp:
      return make_glp(cfg.as<GlpParams>(), std::move(g0), coupled);
    case ModelTag::Parid:
      return make_parid(cfg.as<ParidParams>(), std::move(g0), coupled);
    case ModelTag::AclC:
      return make_acl_c(cfg.as<AclCParams>(), std::move(g0));
    case ModelTag::Directed:
      return make_directed(cfg.as<DirectedParams>(), std::move(g0));
    case ModelTag::Dsf:
      return make_dsf(cfg.as<DsfParams>(), std::move(g0), coupled);
    case ModelTag::CooperFrieze:
      return make_cooper_frieze(cfg.as<CooperFriezeParams>(), std::move(g0));
    case ModelTag::Pegging:
      return make_pegging(std::move(g0), coupled);
    case ModelTag::KTree:
      return make_ktree(cfg.as<KTreeParams>(), std::move(g0));
    case ModelTag::Apollonian:
      return make_apollonian(cfg.as<ApollonianParams>(), std::move(g0));
  }
  throw std::logic_error("unreachable model tag");
}

}  // namespace evograph
