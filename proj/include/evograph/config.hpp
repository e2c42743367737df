#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "evograph/graph.hpp"
#include "evograph/sampling.hpp"
#include "evograph/sequence.hpp"

namespace evograph {

enum class ModelTag : std::uint8_t {
  ForestFire,
  Copying,
  Hybrid,
  Pref,
  AclD,
  Glp,
  Parid,
  AclC,
  Directed,
  Dsf,
  CooperFrieze,
  Pegging,
  KTree,
  Apollonian,
};

const char* model_tag_name(ModelTag tag);
ModelTag model_tag_from_name(const std::string& name);

/**
 * Policy for the model definitions' "arbitrary" choice points. Endpoint
 * slots accept UniformEndpoint / FirstEndpoint / Scripted; free-vertex slots
 * accept UniformVertex / NewVertex / Scripted. Scripts are programmatic
 * hooks (adversary slots for tests), not serializable beyond their kind.
 */
struct Strategy {
  enum class Kind : std::uint8_t {
    UniformEndpoint,
    FirstEndpoint,
    UniformVertex,
    NewVertex,
    Scripted,
  };
  Kind kind = Kind::UniformEndpoint;

  // Scripted slots. endpoint_script must return an endpoint of the pivot
  // edge; vertex_script gets the choice index within the step and the
  // snapshot vertex count it may choose from.
  std::function<VertexId(const GrowingGraph&, EdgeId pivot)> endpoint_script;
  std::function<VertexId(const GrowingGraph&, std::uint64_t n_snapshot, VertexId new_vertex,
                         std::uint32_t choice_index)>
      vertex_script;

  VertexId pick_endpoint(RngStream& rng, const GrowingGraph& g, EdgeId pivot) const;
  VertexId pick_vertex(RngStream& rng, const GrowingGraph& g, std::uint64_t n_snapshot,
                       VertexId new_vertex, std::uint32_t choice_index) const;

  static Strategy uniform_endpoint() { return {Kind::UniformEndpoint, nullptr, nullptr}; }
  static Strategy uniform_vertex() { return {Kind::UniformVertex, nullptr, nullptr}; }
};

const char* strategy_kind_name(Strategy::Kind k);
Strategy::Kind strategy_kind_from_name(const std::string& name);

/// Seed graph description. Preset "default" resolves to the model's
/// documented minimal seed; "custom" takes explicit mode/vertices/edges.
struct G0Spec {
  std::string preset = "default";
  GraphMode mode = GraphMode::Undirected;  // custom only
  std::uint32_t vertices = 0;              // custom only
  VertexId root = 0;
  struct CustomEdge {
    EdgeKind kind;
    VertexId tail;
    VertexId head;
  };
  std::vector<CustomEdge> edges;  // custom only

  nlohmann::json to_json() const;
  static G0Spec from_json(const nlohmann::json& j);
};

struct ForestFireParams {
  // Geo(p) counts failures before a success (mean (1-p)/p), so the burn
  // branching factor is (1-p)/p + (1-q)/q; defaults stay below 1.
  double p = 0.75, q = 0.75;
};
struct CopyingParams {
  double p = 0.5;
  std::uint32_t d = 2;
};
struct HybridParams {
  double pa = 0.3, pb = 0.3, pc = 0.4, q = 0.5;
  std::uint32_t d = 2;
};
struct PrefParams {
  SequenceSpec a = SequenceSpec::constant(1);
  SequenceSpec b = SequenceSpec::constant(0);
  Strategy endpoint = Strategy::uniform_endpoint();
  Strategy vertex = Strategy::uniform_vertex();
};
struct AclDParams {
  SequenceSpec x = SequenceSpec::constant(2);
  SequenceSpec y = SequenceSpec::constant(1);
  SequenceSpec z = SequenceSpec::constant(1);
};
struct GlpParams {
  double p = 0.75;
  Rational delta{1, 2};
  SequenceSpec x = SequenceSpec::constant(2);
};
struct ParidParams {
  Rational delta{1, 1};
  SequenceSpec x = SequenceSpec::uniform_int(1, 4);
  std::int64_t ell = 1, u = 4;
  bool strict = true;
};
struct AclCParams {
  SequenceSpec x = SequenceSpec::constant(1);
  SequenceSpec y = SequenceSpec::constant(1);
  SequenceSpec z = SequenceSpec::constant(1);
  SequenceSpec q = SequenceSpec::constant(0);
};
struct DirectedParams {
  SequenceSpec a = SequenceSpec::constant(1);
  SequenceSpec b = SequenceSpec::constant(1);
  SequenceSpec c = SequenceSpec::constant(1);
  SequenceSpec d = SequenceSpec::constant(1);
  SequenceSpec e = SequenceSpec::constant(1);
  Strategy vertex = Strategy::uniform_vertex();
};
struct DsfParams {
  double pa = 0.4, pb = 0.4, pc = 0.2;
  Rational alpha{1, 2};
  Rational beta{1, 2};
  SequenceSpec x = SequenceSpec::constant(1);
};
struct CooperFriezeParams {
  double pa = 1.0 / 6, pb = 1.0 / 6, pc = 1.0 / 6, pd = 1.0 / 6, pe = 1.0 / 6,
         pf = 1.0 / 6;
  SequenceSpec x = SequenceSpec::constant(1);
};
struct PeggingParams {};
struct KTreeParams {
  std::uint32_t k = 3;
};
struct ApollonianParams {
  std::uint32_t k = 3;
};

using ModelParams =
    std::variant<ForestFireParams, CopyingParams, HybridParams, PrefParams, AclDParams,
                 GlpParams, ParidParams, AclCParams, DirectedParams, DsfParams,
                 CooperFriezeParams, PeggingParams, KTreeParams, ApollonianParams>;

struct ModelConfig {
  ModelTag tag = ModelTag::Pref;
  ModelParams params = PrefParams{};
  G0Spec g0;
  std::uint64_t seed = 0;

  static ModelConfig defaults(ModelTag tag);
  void validate() const;  // throws std::invalid_argument with a reason

  nlohmann::json to_json() const;
  static ModelConfig from_json(const nlohmann::json& j);
  /// FNV-1a hash of the canonical JSON dump, 16 hex digits.
  std::string digest() const;

  template <class T>
  const T& as() const {
    return std::get<T>(params);
  }
};

/// Builds the configured seed graph (preset or custom), sets the root, and
/// verifies weak connectivity and per-model constraints.
GrowingGraph build_g0(const ModelConfig& cfg);

}  // namespace evograph
