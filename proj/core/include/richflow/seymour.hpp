#pragma once

#include <vector>

#include "richflow/flow.hpp"

namespace richflow {

/// Pairs of adjacent edges; each pair is anchored at its `shared` vertex
/// (the lower common vertex for parallel edges).
using PairSet = std::vector<AdjacentPair>;

/// Throws PreconditionError unless every entry is a genuine adjacent pair,
/// pairs are distinct, no two are strongly intersecting, and no edge lies in
/// three or more pairs.
void validate_pair_set(const Multigraph& g, const PairSet& pairs);

/// Auxiliary graph for confluence elimination. Vertices 0..n-1 are those of
/// G, vertex n + i is b(p_i). Edges 0..m-1 correspond to the edges of G with
/// every anchored endpoint a(p) moved to b(p); edge m + i is a(p_i) b(p_i).
struct SplitMap {
  Multigraph h;
  int original_vertex_count = 0;
  int original_edge_count = 0;
  std::vector<VertexId> anchor;    // a(p_i)
  std::vector<VertexId> b_vertex;  // b(p_i)
  std::vector<EdgeId> connector;   // H edge a(p_i) b(p_i)

  /// Image of an H vertex after contracting every connector.
  [[nodiscard]] VertexId contract(VertexId v) const;
};

/// Builds H. Requires G rich flow admissible and a valid pair set; checks
/// that H is bridgeless and every b(p) has degree 3.
SplitMap build_pair_splitting(const Multigraph& g, const PairSet& pairs);

/// True when contracting the connectors of H gives back G edge for edge.
bool contraction_matches(const Multigraph& g, const SplitMap& split);

/// A nowhere-zero Z6-flow by exact search over the cycle space: values on
/// the co-tree edges of a BFS spanning tree fix every tree edge, and the
/// search backtracks as soon as a fully determined tree edge is zero.
/// Requires G connected and bridgeless.
Flow nowhere_zero_z6(const Multigraph& g);

/// Nowhere-zero Z6-flow on G in which no pair of `pairs` is confluent,
/// obtained from a flow on the split graph by contracting the connectors.
Flow flow_avoiding_confluence(const Multigraph& g, const PairSet& pairs);

}  // namespace richflow
