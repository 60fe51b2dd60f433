#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "richflow/multigraph.hpp"

namespace richflow {

/// Component label per vertex (labels dense, in order of lowest vertex).
std::vector<int> component_labels(const Multigraph& g, int* count = nullptr);
bool is_connected(const Multigraph& g);

/// Edges whose removal increases the number of connected components,
/// in increasing id order.
std::vector<EdgeId> bridges(const Multigraph& g);

/// All unordered pairs {e, f}, e < f, whose removal disconnects G while
/// neither edge is a bridge. Sorted lexicographically. G must be connected.
std::vector<std::pair<EdgeId, EdgeId>> enumerate_two_edge_cuts(const Multigraph& g);

/// True iff G is connected and has no edge cut with fewer than t edges.
/// Supports t in {1, 2, 3}.
bool edge_connectivity_at_least(const Multigraph& g, int t);

/// Label per vertex of its 2-edge-connected component (bridges removed).
std::vector<int> edge_block_labels(const Multigraph& g, int* count = nullptr);

/// A maximal 2-vertex-connected piece. Two vertices joined by one edge form
/// a block too; parallel edges stay together in one block.
struct Block {
  std::vector<VertexId> vertices;  // increasing
  std::vector<EdgeId> edges;       // increasing
};

/// Biconnected blocks of the non-isolated part of G, ordered by lowest edge id.
std::vector<Block> biconnected_blocks(const Multigraph& g);

struct DisconnectedWitness {
  friend bool operator==(const DisconnectedWitness&, const DisconnectedWitness&) = default;
};
struct BridgeWitness {
  EdgeId edge = -1;
  friend bool operator==(const BridgeWitness&, const BridgeWitness&) = default;
};
/// A verified 2-edge-cut whose two edges meet at `shared`.
struct SharedCutWitness {
  EdgeId e = -1;
  EdgeId f = -1;
  VertexId shared = -1;
  friend bool operator==(const SharedCutWitness&, const SharedCutWitness&) = default;
};

using AdmissibilityWitness = std::variant<DisconnectedWitness, BridgeWitness, SharedCutWitness>;

struct AdmissibilityVerdict {
  bool admissible = false;
  std::optional<AdmissibilityWitness> witness;

  [[nodiscard]] std::string describe() const;
};

/// Connected, bridgeless, and no 2-edge-cut with both edges at one vertex.
AdmissibilityVerdict is_rich_flow_admissible(const Multigraph& g);

/// Thrown by entry points that need an admissible graph.
class NotAdmissibleError : public std::runtime_error {
 public:
  explicit NotAdmissibleError(AdmissibilityVerdict verdict);
  [[nodiscard]] const AdmissibilityVerdict& verdict() const { return verdict_; }

 private:
  AdmissibilityVerdict verdict_;
};

}  // namespace richflow
