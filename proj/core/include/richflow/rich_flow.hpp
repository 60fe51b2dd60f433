#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "richflow/building_phi.hpp"
#include "richflow/flow.hpp"
#include "richflow/seymour.hpp"

namespace richflow {

/// A 2-edge-cut split G -> (G'1, G'2). G'1 = G1 + u1u2 and G'2 = G2 + v1v2,
/// where G2 is the smallest side; each added edge is the last edge of its
/// graph.
struct TwoCutSplit {
  EdgeId cut_e1 = -1;
  EdgeId cut_e2 = -1;
  VertexId u1 = -1, u2 = -1;  // ends of e1, e2 in G1
  VertexId v1 = -1, v2 = -1;  // ends of e1, e2 in G2
  Multigraph g1;
  Multigraph g2;
  std::vector<VertexId> g1_vertex_to_parent;
  std::vector<VertexId> g2_vertex_to_parent;
  std::vector<EdgeId> g1_edge_to_parent;  // -1 for the added edge
  std::vector<EdgeId> g2_edge_to_parent;
  EdgeId g1_added = -1;  // u1 -> u2
  EdgeId g2_added = -1;  // v1 -> v2
};

/// nullopt when G is 3-edge-connected. Throws NotAdmissibleError unless G
/// is rich flow admissible; asserts G'1 admissible and G'2 3-edge-connected.
std::optional<TwoCutSplit> split_on_two_cut(const Multigraph& g);

/// One building-phi invocation made during synthesis.
struct PhiCall {
  int depth = 0;
  int vertex_count = 0;
  int edge_count = 0;
  EdgeId e_star = -1;
  bool against_reference = false;
  Element target;
  Tower tower;
  std::vector<StepDiagnostics> diagnostics;
};

struct SynthesisTrace {
  std::vector<PhiCall> calls;
  int max_split_depth = 0;
};

/// Nowhere-zero Zk x Z2 flow (k = 8 * Delta - 13) passing the mod-flow
/// bullets. Splits on 2-edge-cuts until the pieces are 3-edge-connected.
Flow rich_mod_flow(const Multigraph& g, SynthesisTrace* trace = nullptr);

/// 264 * delta - 445.
std::int64_t rich_flow_bound(int delta);

struct RichFlowCertificate {
  Flow flow;
  int delta = 0;
  std::int64_t bound = 0;
  std::int64_t max_abs = 0;
  RichnessReport checks;

  // Intermediate flows, kept for inspection.
  Flow mod_flow;              // Zk x Z2
  PairSet confluent_pairs;    // confluent pairs of mod_flow
  Flow z6_flow;               // no pair of confluent_pairs confluent
  Flow phi1, phi2, phi3;      // integer lifts of the three modular flows
};

/// Rich integer flow with bound 264 * Delta - 445, verified before return.
RichFlowCertificate synthesize_rich_flow(const Multigraph& g, SynthesisTrace* trace = nullptr);

}  // namespace richflow
