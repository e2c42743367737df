#include "evograph/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace evograph {
namespace {

using nlohmann::json;

constexpr std::array<const char*, 14> kModelNames = {
    "forest_fire", "copying", "hybrid",   "pref",          "acl_d",
    "glp",         "parid",   "acl_c",    "directed",      "dsf",
    "cooper_frieze", "pegging", "ktree",  "apollonian"};

std::string normalized(const std::string& name) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("config: " + what);
}

void require_prob(double p, const std::string& what) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, what + " must lie in [0,1]");
}

void require_prob_sum(std::initializer_list<double> ps, const std::string& what) {
  double s = 0;
  for (double p : ps) s += p;
  require(std::fabs(s - 1.0) <= 1e-12, what + " must sum to 1");
}

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>(), 1);
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  throw std::invalid_argument("config: " + what + " must be an integer or [num,den]");
}

json rational_to_json(const Rational& r) {
  if (r.den == 1) return json(r.num);
  return json::array({r.num, r.den});
}

SequenceSpec seq_field(const json& j, const char* key, const SequenceSpec& fallback) {
  if (!j.contains(key)) return fallback;
  return SequenceSpec::from_json(j.at(key));
}

Strategy strategy_field(const json& j, const char* key, Strategy fallback) {
  if (!j.contains(key)) return fallback;
  Strategy s;
  s.kind = strategy_kind_from_name(j.at(key).get<std::string>());
  return s;
}

void check_endpoint_strategy(const Strategy& s, const std::string& slot) {
  using K = Strategy::Kind;
  require(s.kind == K::UniformEndpoint || s.kind == K::FirstEndpoint || s.kind == K::Scripted,
          slot + " must be an endpoint strategy");
}

void check_vertex_strategy(const Strategy& s, const std::string& slot) {
  using K = Strategy::Kind;
  require(s.kind == K::UniformVertex || s.kind == K::NewVertex || s.kind == K::Scripted,
          slot + " must be a free-vertex strategy");
}

void seq_bounds(const SequenceSpec& s, std::int64_t lo, const std::string& what) {
  require(s.min() >= lo, what + " must never go below " + std::to_string(lo));
}

GrowingGraph make_clique(std::uint32_t k) {
  GrowingGraph g(GraphMode::Undirected);
  for (std::uint32_t i = 0; i < k; ++i) g.add_vertex(0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) g.add_edge(EdgeKind::Proper, i, j, 0);
  return g;
}

GrowingGraph make_complete_digraph(std::uint32_t n, GraphMode mode) {
  GrowingGraph g(mode);
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j) g.add_edge(EdgeKind::Proper, i, j, 0);
  return g;
}

GrowingGraph make_dicycle2(GraphMode mode) {
  GrowingGraph g(mode);
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  g.add_edge(EdgeKind::Proper, 1, 0, 0);
  return g;
}

GrowingGraph make_diedge(GraphMode mode) {
  GrowingGraph g(mode);
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(EdgeKind::Proper, 0, 1, 0);
  return g;
}

GraphMode native_mode(ModelTag tag) {
  switch (tag) {
    case ModelTag::ForestFire:
    case ModelTag::Copying:
    case ModelTag::Hybrid:
    case ModelTag::AclC:
    case ModelTag::Dsf:
      return GraphMode::Directed;
    case ModelTag::Directed:
      return GraphMode::GeneralizedDirected;
    default:
      return GraphMode::Undirected;
  }
}

GrowingGraph build_custom(const G0Spec& s) {
  require(s.vertices >= 1, "custom seed needs at least one vertex");
  GrowingGraph g(s.mode);
  for (std::uint32_t i = 0; i < s.vertices; ++i) g.add_vertex(0);
  for (const auto& e : s.edges) g.add_edge(e.kind, e.tail, e.head, 0);
  require(s.root < s.vertices, "custom seed root out of range");
  g.set_root(s.root);
  return g;
}

}  // namespace

const char* model_tag_name(ModelTag tag) { return kModelNames[static_cast<std::size_t>(tag)]; }

ModelTag model_tag_from_name(const std::string& name) {
  const std::string s = normalized(name);
  for (std::size_t i = 0; i < kModelNames.size(); ++i)
    if (s == kModelNames[i]) return static_cast<ModelTag>(i);
  throw std::invalid_argument("unknown model: " + name);
}

const char* strategy_kind_name(Strategy::Kind k) {
  switch (k) {
    case Strategy::Kind::UniformEndpoint: return "uniform_endpoint";
    case Strategy::Kind::FirstEndpoint: return "first_endpoint";
    case Strategy::Kind::UniformVertex: return "uniform_vertex";
    case Strategy::Kind::NewVertex: return "new_vertex";
    case Strategy::Kind::Scripted: return "scripted";
  }
  return "?";
}

Strategy::Kind strategy_kind_from_name(const std::string& name) {
  const std::string s = normalized(name);
  for (auto k : {Strategy::Kind::UniformEndpoint, Strategy::Kind::FirstEndpoint,
                 Strategy::Kind::UniformVertex, Strategy::Kind::NewVertex,
                 Strategy::Kind::Scripted})
    if (s == strategy_kind_name(k)) return k;
  throw std::invalid_argument("unknown strategy: " + name);
}

VertexId Strategy::pick_endpoint(RngStream& rng, const GrowingGraph& g, EdgeId pivot) const {
  switch (kind) {
    case Kind::UniformEndpoint:
      return evograph::uniform_endpoint(rng, g, pivot);
    case Kind::FirstEndpoint:
      return g.edge(pivot).tail;
    case Kind::Scripted: {
      if (!endpoint_script) throw std::logic_error("scripted endpoint strategy has no script");
      VertexId v = endpoint_script(g, pivot);
      const auto& rec = g.edge(pivot);
      if (v != rec.tail && v != rec.head)
        throw std::logic_error("endpoint script returned a non-endpoint");
      return v;
    }
    default:
      throw std::logic_error("not an endpoint strategy");
  }
}

VertexId Strategy::pick_vertex(RngStream& rng, const GrowingGraph& g, std::uint64_t n_snapshot,
                               VertexId new_vertex, std::uint32_t choice_index) const {
  switch (kind) {
    case Kind::UniformVertex:
      return static_cast<VertexId>(rng.below(n_snapshot));
    case Kind::NewVertex:
      if (new_vertex == kNoVertex)
        throw std::logic_error("new_vertex strategy used where only old vertices are allowed");
      return new_vertex;
    case Kind::Scripted: {
      if (!vertex_script) throw std::logic_error("scripted vertex strategy has no script");
      VertexId v = vertex_script(g, n_snapshot, new_vertex, choice_index);
      if (v >= n_snapshot && v != new_vertex)
        throw std::logic_error("vertex script escaped the snapshot");
      return v;
    }
    default:
      throw std::logic_error("not a free-vertex strategy");
  }
}

json G0Spec::to_json() const {
  json j;
  j["preset"] = preset;
  if (preset == "clique" || preset == "complete_digraph") j["vertices"] = vertices;
  if (preset == "custom") {
    j["mode"] = mode == GraphMode::Undirected    ? "undirected"
                : mode == GraphMode::Directed    ? "directed"
                                                 : "generalized";
    j["vertices"] = vertices;
    j["root"] = root;
    json es = json::array();
    for (const auto& e : edges) {
      json row = json::array();
      row.push_back(std::string(1, edge_kind_letter(e.kind)));
      row.push_back(e.tail == kNoVertex ? json(nullptr) : json(e.tail));
      row.push_back(e.head == kNoVertex ? json(nullptr) : json(e.head));
      es.push_back(row);
    }
    j["edges"] = es;
  }
  return j;
}

G0Spec G0Spec::from_json(const json& j) {
  G0Spec s;
  s.preset = j.value("preset", std::string("default"));
  if (j.contains("vertices")) s.vertices = j.at("vertices").get<std::uint32_t>();
  if (j.contains("root")) s.root = j.at("root").get<VertexId>();
  if (s.preset == "custom") {
    const std::string m = j.value("mode", std::string("undirected"));
    s.mode = m == "undirected"  ? GraphMode::Undirected
             : m == "directed"  ? GraphMode::Directed
             : m == "generalized" ? GraphMode::GeneralizedDirected
                                  : throw std::invalid_argument("config: bad g0 mode " + m);
    for (const auto& row : j.value("edges", json::array())) {
      G0Spec::CustomEdge e;
      e.kind = edge_kind_from_letter(row.at(0).get<std::string>().at(0));
      e.tail = row.at(1).is_null() ? kNoVertex : row.at(1).get<VertexId>();
      e.head = row.at(2).is_null() ? kNoVertex : row.at(2).get<VertexId>();
      s.edges.push_back(e);
    }
  }
  return s;
}

ModelConfig ModelConfig::defaults(ModelTag tag) {
  ModelConfig cfg;
  cfg.tag = tag;
  switch (tag) {
    case ModelTag::ForestFire: cfg.params = ForestFireParams{}; break;
    case ModelTag::Copying: cfg.params = CopyingParams{}; break;
    case ModelTag::Hybrid: cfg.params = HybridParams{}; break;
    case ModelTag::Pref: cfg.params = PrefParams{}; break;
    case ModelTag::AclD: cfg.params = AclDParams{}; break;
    case ModelTag::Glp: cfg.params = GlpParams{}; break;
    case ModelTag::Parid: cfg.params = ParidParams{}; break;
    case ModelTag::AclC: cfg.params = AclCParams{}; break;
    case ModelTag::Directed: cfg.params = DirectedParams{}; break;
    case ModelTag::Dsf: cfg.params = DsfParams{}; break;
    case ModelTag::CooperFrieze: cfg.params = CooperFriezeParams{}; break;
    case ModelTag::Pegging: cfg.params = PeggingParams{}; break;
    case ModelTag::KTree: cfg.params = KTreeParams{}; break;
    case ModelTag::Apollonian: cfg.params = ApollonianParams{}; break;
  }
  return cfg;
}

void ModelConfig::validate() const {
  require(static_cast<std::size_t>(tag) == params.index(), "params do not match model tag");
  switch (tag) {
    case ModelTag::ForestFire: {
      const auto& p = as<ForestFireParams>();
      require_prob(p.p, "forest_fire p");
      require_prob(p.q, "forest_fire q");
      break;
    }
    case ModelTag::Copying: {
      const auto& p = as<CopyingParams>();
      require_prob(p.p, "copying p");
      require(p.d >= 1, "copying d must be >= 1");
      break;
    }
    case ModelTag::Hybrid: {
      const auto& p = as<HybridParams>();
      require_prob(p.pa, "hybrid pa");
      require_prob(p.pb, "hybrid pb");
      require_prob(p.pc, "hybrid pc");
      require_prob_sum({p.pa, p.pb, p.pc}, "hybrid pa+pb+pc");
      require(p.q >= 0.0 && p.q < 1.0, "hybrid q must lie in [0,1)");
      require(p.d >= 1, "hybrid d must be >= 1");
      break;
    }
    case ModelTag::Pref: {
      const auto& p = as<PrefParams>();
      seq_bounds(p.a, 0, "pref a");
      seq_bounds(p.b, 0, "pref b");
      check_endpoint_strategy(p.endpoint, "pref endpoint strategy");
      check_vertex_strategy(p.vertex, "pref vertex strategy");
      break;
    }
    case ModelTag::AclD: {
      const auto& p = as<AclDParams>();
      seq_bounds(p.x, 1, "acl_d x");
      seq_bounds(p.y, 0, "acl_d y");
      seq_bounds(p.z, 0, "acl_d z");
      break;
    }
    case ModelTag::Glp: {
      const auto& p = as<GlpParams>();
      require_prob(p.p, "glp p");
      require(p.delta.num > -p.delta.den, "glp delta must exceed -1");
      seq_bounds(p.x, 1, "glp x");
      break;
    }
    case ModelTag::Parid: {
      const auto& p = as<ParidParams>();
      require(p.delta.num > 0, "parid delta must be positive");
      seq_bounds(p.x, 1, "parid x");
      require(p.ell >= 1 && p.ell <= p.u, "parid needs 1 <= ell <= u");
      if (p.strict)
        require(p.x.min() >= p.ell && p.x.max() <= p.u,
                "parid strict mode needs x support within [ell,u]");
      break;
    }
    case ModelTag::AclC: {
      const auto& p = as<AclCParams>();
      seq_bounds(p.x, 0, "acl_c x");
      seq_bounds(p.y, 0, "acl_c y");
      seq_bounds(p.z, 0, "acl_c z");
      seq_bounds(p.q, 0, "acl_c q");
      require(p.x.min() + p.y.min() >= 1, "acl_c needs x+y >= 1");
      break;
    }
    case ModelTag::Directed: {
      const auto& p = as<DirectedParams>();
      seq_bounds(p.a, 0, "directed a");
      seq_bounds(p.b, 0, "directed b");
      seq_bounds(p.c, 0, "directed c");
      seq_bounds(p.d, 0, "directed d");
      seq_bounds(p.e, 0, "directed e");
      check_vertex_strategy(p.vertex, "directed vertex strategy");
      break;
    }
    case ModelTag::Dsf: {
      const auto& p = as<DsfParams>();
      require_prob(p.pa, "dsf pa");
      require_prob(p.pb, "dsf pb");
      require_prob(p.pc, "dsf pc");
      require_prob_sum({p.pa, p.pb, p.pc}, "dsf pa+pb+pc");
      require(p.alpha.num >= 0 && p.beta.num >= 0, "dsf alpha,beta must be >= 0");
      seq_bounds(p.x, 1, "dsf x");
      break;
    }
    case ModelTag::CooperFrieze: {
      const auto& p = as<CooperFriezeParams>();
      for (double q : {p.pa, p.pb, p.pc, p.pd, p.pe, p.pf}) require_prob(q, "cooper_frieze op probability");
      require_prob_sum({p.pa, p.pb, p.pc, p.pd, p.pe, p.pf}, "cooper_frieze pa..pf");
      require(p.pa + p.pb > 0.0, "cooper_frieze needs pa+pb > 0");
      seq_bounds(p.x, 1, "cooper_frieze x");
      break;
    }
    case ModelTag::Pegging:
      break;
    case ModelTag::KTree: {
      require(as<KTreeParams>().k >= 2, "ktree k must be >= 2");
      break;
    }
    case ModelTag::Apollonian: {
      require(as<ApollonianParams>().k >= 2, "apollonian k must be >= 2");
      break;
    }
  }
  if (tag == ModelTag::KTree || tag == ModelTag::Apollonian) {
    require(g0.preset == "default" || g0.preset == "clique",
            "clique models grow from their initial clique only");
  }
}

json ModelConfig::to_json() const {
  json j;
  j["model"] = model_tag_name(tag);
  j["seed"] = seed;
  j["g0"] = g0.to_json();
  json p;
  switch (tag) {
    case ModelTag::ForestFire: {
      const auto& m = as<ForestFireParams>();
      p = {{"p", m.p}, {"q", m.q}};
      break;
    }
    case ModelTag::Copying: {
      const auto& m = as<CopyingParams>();
      p = {{"p", m.p}, {"d", m.d}};
      break;
    }
    case ModelTag::Hybrid: {
      const auto& m = as<HybridParams>();
      p = {{"pa", m.pa}, {"pb", m.pb}, {"pc", m.pc}, {"q", m.q}, {"d", m.d}};
      break;
    }
    case ModelTag::Pref: {
      const auto& m = as<PrefParams>();
      p = {{"a", m.a.to_json()},
           {"b", m.b.to_json()},
           {"endpoint_strategy", strategy_kind_name(m.endpoint.kind)},
           {"vertex_strategy", strategy_kind_name(m.vertex.kind)}};
      break;
    }
    case ModelTag::AclD: {
      const auto& m = as<AclDParams>();
      p = {{"x", m.x.to_json()}, {"y", m.y.to_json()}, {"z", m.z.to_json()}};
      break;
    }
    case ModelTag::Glp: {
      const auto& m = as<GlpParams>();
      p = {{"p", m.p}, {"delta", rational_to_json(m.delta)}, {"x", m.x.to_json()}};
      break;
    }
    case ModelTag::Parid: {
      const auto& m = as<ParidParams>();
      p = {{"delta", rational_to_json(m.delta)},
           {"x", m.x.to_json()},
           {"ell", m.ell},
           {"u", m.u},
           {"strict", m.strict}};
      break;
    }
    case ModelTag::AclC: {
      const auto& m = as<AclCParams>();
      p = {{"x", m.x.to_json()}, {"y", m.y.to_json()}, {"z", m.z.to_json()}, {"q", m.q.to_json()}};
      break;
    }
    case ModelTag::Directed: {
      const auto& m = as<DirectedParams>();
      p = {{"a", m.a.to_json()}, {"b", m.b.to_json()}, {"c", m.c.to_json()},
           {"d", m.d.to_json()}, {"e", m.e.to_json()},
           {"vertex_strategy", strategy_kind_name(m.vertex.kind)}};
      break;
    }
    case ModelTag::Dsf: {
      const auto& m = as<DsfParams>();
      p = {{"pa", m.pa}, {"pb", m.pb}, {"pc", m.pc},
           {"alpha", rational_to_json(m.alpha)}, {"beta", rational_to_json(m.beta)},
           {"x", m.x.to_json()}};
      break;
    }
    case ModelTag::CooperFrieze: {
      const auto& m = as<CooperFriezeParams>();
      p = {{"pa", m.pa}, {"pb", m.pb}, {"pc", m.pc}, {"pd", m.pd}, {"pe", m.pe}, {"pf", m.pf},
           {"x", m.x.to_json()}};
      break;
    }
    case ModelTag::Pegging:
      p = json::object();
      break;
    case ModelTag::KTree:
      p = {{"k", as<KTreeParams>().k}};
      break;
    case ModelTag::Apollonian:
      p = {{"k", as<ApollonianParams>().k}};
      break;
  }
  j["params"] = p;
  return j;
}

ModelConfig ModelConfig::from_json(const json& j) {
  ModelConfig cfg = defaults(model_tag_from_name(j.at("model").get<std::string>()));
  cfg.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("g0")) cfg.g0 = G0Spec::from_json(j.at("g0"));
  const json p = j.value("params", json::object());
  switch (cfg.tag) {
    case ModelTag::ForestFire: {
      ForestFireParams m;
      m.p = p.value("p", m.p);
      m.q = p.value("q", m.q);
      cfg.params = m;
      break;
    }
    case ModelTag::Copying: {
      CopyingParams m;
      m.p = p.value("p", m.p);
      m.d = p.value("d", m.d);
      cfg.params = m;
      break;
    }
    case ModelTag::Hybrid: {
      HybridParams m;
      m.pa = p.value("pa", m.pa);
      m.pb = p.value("pb", m.pb);
      m.pc = p.value("pc", m.pc);
      m.q = p.value("q", m.q);
      m.d = p.value("d", m.d);
      cfg.params = m;
      break;
    }
    case ModelTag::Pref: {
      PrefParams m;
      m.a = seq_field(p, "a", m.a);
      m.b = seq_field(p, "b", m.b);
      m.endpoint = strategy_field(p, "endpoint_strategy", m.endpoint);
      m.vertex = strategy_field(p, "vertex_strategy", m.vertex);
      cfg.params = m;
      break;
    }
    case ModelTag::AclD: {
      AclDParams m;
      m.x = seq_field(p, "x", m.x);
      m.y = seq_field(p, "y", m.y);
      m.z = seq_field(p, "z", m.z);
      cfg.params = m;
      break;
    }
    case ModelTag::Glp: {
      GlpParams m;
      m.p = p.value("p", m.p);
      if (p.contains("delta")) m.delta = rational_from_json(p.at("delta"), "glp delta");
      m.x = seq_field(p, "x", m.x);
      cfg.params = m;
      break;
    }
    case ModelTag::Parid: {
      ParidParams m;
      if (p.contains("delta")) m.delta = rational_from_json(p.at("delta"), "parid delta");
      m.x = seq_field(p, "x", m.x);
      m.ell = p.value("ell", m.ell);
      m.u = p.value("u", m.u);
      m.strict = p.value("strict", m.strict);
      cfg.params = m;
      break;
    }
    case ModelTag::AclC: {
      AclCParams m;
      m.x = seq_field(p, "x", m.x);
      m.y = seq_field(p, "y", m.y);
      m.z = seq_field(p, "z", m.z);
      m.q = seq_field(p, "q", m.q);
      cfg.params = m;
      break;
    }
    case ModelTag::Directed: {
      DirectedParams m;
      m.a = seq_field(p, "a", m.a);
      m.b = seq_field(p, "b", m.b);
      m.c = seq_field(p, "c", m.c);
      m.d = seq_field(p, "d", m.d);
      m.e = seq_field(p, "e", m.e);
      m.vertex = strategy_field(p, "vertex_strategy", m.vertex);
      cfg.params = m;
      break;
    }
    case ModelTag::Dsf: {
      DsfParams m;
      m.pa = p.value("pa", m.pa);
      m.pb = p.value("pb", m.pb);
      m.pc = p.value("pc", m.pc);
      if (p.contains("alpha")) m.alpha = rational_from_json(p.at("alpha"), "dsf alpha");
      if (p.contains("beta")) m.beta = rational_from_json(p.at("beta"), "dsf beta");
      m.x = seq_field(p, "x", m.x);
      cfg.params = m;
      break;
    }
    case ModelTag::CooperFrieze: {
      CooperFriezeParams m;
      m.pa = p.value("pa", m.pa);
      m.pb = p.value("pb", m.pb);
      m.pc = p.value("pc", m.pc);
      m.pd = p.value("pd", m.pd);
      m.pe = p.value("pe", m.pe);
      m.pf = p.value("pf", m.pf);
      m.x = seq_field(p, "x", m.x);
      cfg.params = m;
      break;
    }
    case ModelTag::Pegging:
      cfg.params = PeggingParams{};
      break;
    case ModelTag::KTree: {
      KTreeParams m;
      m.k = p.value("k", m.k);
      cfg.params = m;
      break;
    }
    case ModelTag::Apollonian: {
      ApollonianParams m;
      m.k = p.value("k", m.k);
      cfg.params = m;
      break;
    }
  }
  cfg.validate();
  return cfg;
}

std::string ModelConfig::digest() const {
  const std::string dump = to_json().dump();  // nlohmann orders keys, so this is canonical
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

GrowingGraph build_g0(const ModelConfig& cfg) {
  const GraphMode mode = native_mode(cfg.tag);
  GrowingGraph g(mode);
  const std::string& preset = cfg.g0.preset;
  if (preset == "custom") {
    g = build_custom(cfg.g0);
    require(g.mode() == mode, "custom seed mode does not match the model");
  } else if (preset == "default") {
    switch (cfg.tag) {
      case ModelTag::ForestFire:
        g = make_diedge(mode);
        break;
      case ModelTag::Copying:
        g = make_complete_digraph(cfg.as<CopyingParams>().d + 1, mode);
        break;
      case ModelTag::Hybrid:
        g = make_complete_digraph(cfg.as<HybridParams>().d + 1, mode);
        break;
      case ModelTag::AclC:
      case ModelTag::Dsf:
      case ModelTag::Directed:
        g = make_dicycle2(mode);
        break;
      case ModelTag::Pegging:
        g = make_clique(4);
        break;
      case ModelTag::KTree:
        g = make_clique(cfg.as<KTreeParams>().k);
        break;
      case ModelTag::Apollonian:
        g = make_clique(cfg.as<ApollonianParams>().k);
        break;
      default:
        g = make_clique(2);  // K2
        break;
    }
  } else if (preset == "k2") {
    require(mode == GraphMode::Undirected, "k2 is an undirected seed");
    g = make_clique(2);
  } else if (preset == "k4") {
    require(mode == GraphMode::Undirected, "k4 is an undirected seed");
    g = make_clique(4);
  } else if (preset == "clique") {
    require(mode == GraphMode::Undirected, "clique is an undirected seed");
    require(cfg.g0.vertices >= 2, "clique seed needs vertices >= 2");
    g = make_clique(cfg.g0.vertices);
  } else if (preset == "dicycle") {
    require(mode != GraphMode::Undirected, "dicycle is a directed seed");
    g = make_dicycle2(mode);
  } else if (preset == "diedge") {
    require(mode != GraphMode::Undirected, "diedge is a directed seed");
    g = make_diedge(mode);
  } else if (preset == "complete_digraph") {
    require(mode != GraphMode::Undirected, "complete_digraph is a directed seed");
    require(cfg.g0.vertices >= 2, "complete_digraph seed needs vertices >= 2");
    g = make_complete_digraph(cfg.g0.vertices, mode);
  } else {
    throw std::invalid_argument("config: unknown g0 preset " + preset);
  }
  require(g.num_vertices() >= 1, "seed graph is empty");
  require(g.is_connected(), "seed graph must be connected");

  switch (cfg.tag) {
    case ModelTag::Copying: {
      const auto d = cfg.as<CopyingParams>().d;
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        require(g.out_degree(v) == d, "copying seed must be out-degree d everywhere");
      break;
    }
    case ModelTag::Hybrid: {
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        require(g.out_degree(v) >= 1, "hybrid seed must have no out-degree-0 vertex");
      break;
    }
    case ModelTag::Pref:
    case ModelTag::AclD:
    case ModelTag::Glp:
    case ModelTag::Parid:
    case ModelTag::CooperFrieze:
    case ModelTag::AclC:
    case ModelTag::Dsf:
      require(g.num_edges() >= 1, "seed graph needs at least one edge");
      break;
    case ModelTag::Directed:
      require(g.num_headed_edges() >= 1 && g.num_tailed_edges() >= 1,
              "seed graph needs a headed and a tailed edge");
      break;
    case ModelTag::Pegging: {
      require(g.num_loop_edges() == 0, "pegging seed must be loop-free");
      require(g.num_edges() >= 2, "pegging seed needs at least two edges");
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        require(g.degree(v) == 3, "pegging seed must be 3-regular");
      break;
    }
    default:
      break;
  }
  return g;
}

}  // namespace evograph
