#include "evograph/trace.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace evograph {

namespace {

constexpr std::array<const char*, 17> kOpNames = {
    "forest_fire", "copying", "hybrid", "pref", "directed", "cf_a", "cf_b", "cf_c",
    "cf_d",        "cf_e",    "cf_f",   "glp",  "parid",    "dsf",  "pegging",
    "ktree",       "apollonian"};

nlohmann::json vertex_to_json(VertexId v) {
  if (v == kNoVertex) return nullptr;
  return v;
}

VertexId vertex_from_json(const nlohmann::json& j) {
  if (j.is_null()) return kNoVertex;
  return j.get<VertexId>();
}

}  // namespace

const char* step_op_name(StepOp op) { return kOpNames.at(static_cast<std::size_t>(op)); }

StepOp step_op_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i)
    if (name == kOpNames[i]) return static_cast<StepOp>(i);
  throw std::invalid_argument("unknown step op: " + name);
}

nlohmann::json StepTrace::to_json() const {
  nlohmann::json j;
  j["t"] = step;
  j["op"] = step_op_name(op);
  if (case_tag != 0) j["case"] = case_tag;
  if (!new_vertices.empty()) j["nv"] = new_vertices;
  if (!new_edges.empty()) {
    j["ne"] = new_edges;
    nlohmann::json specs = nlohmann::json::array();
    for (const EdgeSpec& s : new_edge_specs) {
      specs.push_back({std::string(1, edge_kind_letter(s.kind)), vertex_to_json(s.tail),
                       vertex_to_json(s.head)});
    }
    j["es"] = std::move(specs);
  }
  if (!retired_edges.empty()) j["re"] = retired_edges;
  if (ambassador != kNoVertex) j["amb"] = ambassador;
  if (!burned.empty()) j["burn"] = burned;
  if (!copy_flags.empty()) j["cp"] = copy_flags;
  if (walk_start != kNoVertex) {
    j["ws"] = walk_start;
    j["wl"] = walk_length;
  }
  if (vertex_op_edges != 0) j["va"] = vertex_op_edges;
  if (vertex_op_pivot != kNoEdge) j["vp"] = vertex_op_pivot;
  if (vertex_pivot != kNoVertex) j["vv"] = vertex_pivot;
  if (!edge_op_pivots.empty()) j["ep"] = edge_op_pivots;
  if (!oriented.empty()) j["or"] = oriented;
  if (op == StepOp::KTree || op == StepOp::Apollonian) {
    j["cl"] = clique;
    j["ncl"] = new_cliques;
  }
  return j;
}

StepTrace StepTrace::from_json(const nlohmann::json& j) {
  StepTrace tr;
  tr.step = j.at("t").get<std::uint64_t>();
  tr.op = step_op_from_name(j.at("op").get<std::string>());
  tr.case_tag = j.value("case", 0);
  if (j.contains("nv")) tr.new_vertices = j.at("nv").get<std::vector<VertexId>>();
  if (j.contains("ne")) {
    tr.new_edges = j.at("ne").get<std::vector<EdgeId>>();
    for (const auto& s : j.at("es")) {
      EdgeSpec spec;
      spec.kind = edge_kind_from_letter(s.at(0).get<std::string>().at(0));
      spec.tail = vertex_from_json(s.at(1));
      spec.head = vertex_from_json(s.at(2));
      tr.new_edge_specs.push_back(spec);
    }
  }
  if (j.contains("re")) tr.retired_edges = j.at("re").get<std::vector<EdgeId>>();
  if (j.contains("amb")) tr.ambassador = j.at("amb").get<VertexId>();
  if (j.contains("burn")) tr.burned = j.at("burn").get<std::vector<VertexId>>();
  if (j.contains("cp")) tr.copy_flags = j.at("cp").get<std::vector<std::uint8_t>>();
  if (j.contains("ws")) {
    tr.walk_start = j.at("ws").get<VertexId>();
    tr.walk_length = j.at("wl").get<std::uint64_t>();
  }
  tr.vertex_op_edges = j.value("va", 0u);
  tr.vertex_op_pivot = j.value("vp", kNoEdge);
  tr.vertex_pivot = j.value("vv", kNoVertex);
  if (j.contains("ep")) tr.edge_op_pivots = j.at("ep").get<std::vector<EdgeId>>();
  if (j.contains("or")) tr.oriented = j.at("or").get<std::vector<VertexId>>();
  tr.clique = j.value("cl", 0u);
  if (j.contains("ncl")) tr.new_cliques = j.at("ncl").get<std::vector<std::uint32_t>>();
  return tr;
}

void apply_trace(GrowingGraph& g, const StepTrace& tr) {
  if (tr.new_edges.size() != tr.new_edge_specs.size())
    throw std::runtime_error("trace edge ids and specs disagree");
  if (tr.retired_edges.size() > tr.new_edges.size())
    throw std::runtime_error("trace retires more edges than it adds");
  auto birth = static_cast<std::uint32_t>(tr.step);
  for (VertexId v : tr.new_vertices) {
    VertexId got = g.add_vertex(birth);
    if (got != v) throw std::runtime_error("trace vertex id mismatch on replay");
  }
  for (std::size_t i = 0; i < tr.new_edges.size(); ++i) {
    const EdgeSpec& s = tr.new_edge_specs[i];
    EdgeId got = i < tr.retired_edges.size()
                     ? g.replace_edge(tr.retired_edges[i], s.kind, s.tail, s.head, birth)
                     : g.add_edge(s.kind, s.tail, s.head, birth);
    if (got != tr.new_edges[i]) throw std::runtime_error("trace edge id mismatch on replay");
  }
}

void write_traces_jsonl(std::ostream& out, const std::vector<StepTrace>& traces) {
  for (const StepTrace& tr : traces) out << tr.to_json().dump() << "\n";
}

std::vector<StepTrace> read_traces_jsonl(std::istream& in) {
  std::vector<StepTrace> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(StepTrace::from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace evograph
