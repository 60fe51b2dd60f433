#pragma once

#include <string>
#include <vector>

#include "richflow/circuits.hpp"
#include "richflow/multigraph.hpp"

namespace richflow {

enum class StepKind { add_chord, add_vertex, add_block_chain };

const char* to_string(StepKind kind);

/// One growth step H_i -> H_{i+1}.
struct TowerStep {
  StepKind kind = StepKind::add_chord;
  EdgeId e1 = -1;       // the chord, or the first attaching edge
  EdgeId e2 = -1;       // second attaching edge (vertex / block steps)
  VertexId vertex = -1;  // add_vertex only
  CircuitChain chain;   // add_block_chain only
  std::vector<EdgeId> added_edges;
  std::vector<VertexId> added_vertices;
};

/// Increasing sequence H_1 ⊆ ... ⊆ H_n = G of 2-edge-connected subgraphs.
///
/// H_1 is a circuit through e* (when b = 1) or a circuit chain joining the
/// ends of e* in G - e* (when b = 0). steps[i - 1] turns H_i into H_{i+1}.
/// Membership is recorded as levels: an edge or vertex with level j first
/// appears in H_j.
struct Tower {
  EdgeId e_star = -1;
  int b = 0;
  CircuitChain base;
  std::vector<TowerStep> steps;
  std::vector<int> edge_level;
  std::vector<int> vertex_level;

  [[nodiscard]] int height() const { return static_cast<int>(steps.size()) + 1; }
  [[nodiscard]] EdgeMask edges_of(int i) const;
  [[nodiscard]] VertexMask vertices_of(int i) const;
};

/// Grows the tower with rule priority chord > vertex > block chain, lowest
/// ids first within a rule. G must be 3-edge-connected.
Tower build_tower(const Multigraph& g, EdgeId e_star, int b);

/// Re-derives every tower invariant from scratch. On failure returns false
/// and, when `why` is given, a description.
bool validate_tower(const Multigraph& g, const Tower& tower, std::string* why = nullptr);

/// Connected on the masked vertices and bridgeless on the masked edges.
bool subgraph_two_edge_connected(const Multigraph& g, const EdgeMask& edges, const VertexMask& vertices);

}  // namespace richflow
