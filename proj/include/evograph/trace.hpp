#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "evograph/graph.hpp"

namespace evograph {

enum class StepOp : std::uint8_t {
  ForestFire,
  Copying,
  Hybrid,
  Pref,      // vertex-op + edge-op format (also the reduced forms of the
             // degree-weighted models, which carry genuine edge pivots)
  Directed,  // generalized directed vertex-op/edge-op format
  CfA,
  CfB,
  CfC,
  CfD,
  CfE,
  CfF,
  Glp,    // native degree+delta process, no pivots
  Parid,  // native, no pivots
  Dsf,    // native directed scale-free, no pivots
  Pegging,
  KTree,
  Apollonian,
};

const char* step_op_name(StepOp op);
StepOp step_op_from_name(const std::string& name);

/// Endpoint description of one new edge; enough to replay it blindly.
struct EdgeSpec {
  EdgeKind kind = EdgeKind::Proper;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
};

/**
 * Full record of one growth step. The new_edge_specs field alone (plus
 * new_vertices and retired_edges) reconstructs the graph mutation; the rest
 * carries the sampling history the coupled trees and audits consume.
 *
 * Layout conventions: new_edges lists ids in creation order. For Pref and
 * Directed ops the first vertex_op_edges entries belong to the vertex
 * operation (children of vertex_op_pivot) and the remaining entries pair up
 * with edge_op_pivots. For Pegging, new_edges[0] and [1] replace
 * retired_edges[0] and [1].
 */
struct StepTrace {
  std::uint64_t step = 0;
  StepOp op = StepOp::Pref;
  std::uint8_t case_tag = 0;  // Directed: 1/2 = headed/tailed pivot, 0 = none; Glp/Dsf: op index

  std::vector<VertexId> new_vertices;
  std::vector<EdgeId> new_edges;
  std::vector<EdgeSpec> new_edge_specs;
  std::vector<EdgeId> retired_edges;

  VertexId ambassador = kNoVertex;          // ForestFire, Copying
  std::vector<VertexId> burned;             // ForestFire: visit order after ambassador
  std::vector<std::uint8_t> copy_flags;     // Copying: 1 = inherited from prototype's list
  VertexId walk_start = kNoVertex;          // Hybrid: start of first walk
  std::uint64_t walk_length = 0;            // Hybrid: length of first walk
  std::uint32_t vertex_op_edges = 0;        // Pref/Directed: edges owned by the vertex op
  EdgeId vertex_op_pivot = kNoEdge;         // Pref/Directed/CfB/CfE/CfF
  VertexId vertex_pivot = kNoVertex;        // CfA/CfC/CfD
  std::vector<EdgeId> edge_op_pivots;       // Pref/Directed: pivot per edge-op edge
  std::vector<VertexId> oriented;           // Pegging: a,b,c,d with a,d the shallow ends
  std::uint32_t clique = 0;                 // KTree/Apollonian: chosen clique id
  std::vector<std::uint32_t> new_cliques;   // KTree/Apollonian

  nlohmann::json to_json() const;
  static StepTrace from_json(const nlohmann::json& j);
};

/// Applies the graph mutation recorded in the trace. Ids must come out
/// exactly as recorded; throws std::runtime_error on any mismatch.
void apply_trace(GrowingGraph& g, const StepTrace& tr);

void write_traces_jsonl(std::ostream& out, const std::vector<StepTrace>& traces);
std::vector<StepTrace> read_traces_jsonl(std::istream& in);

}  // namespace evograph
