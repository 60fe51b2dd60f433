#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "richflow/multigraph.hpp"

namespace richflow {

/// A walk between two vertices; edges[i] joins vertices[i] and vertices[i+1].
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

/// A circuit with a traversal direction. edges[i] joins vertices[i] and
/// vertices[(i + 1) % size()]; the vertex order is the direction.
struct Circuit {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] std::size_t size() const { return edges.size(); }
  [[nodiscard]] bool contains_edge(EdgeId e) const;
  [[nodiscard]] bool contains_vertex(VertexId v) const;
  /// +1 when edges[i] is traversed along its reference orientation.
  [[nodiscard]] int traversal_sign(const Multigraph& g, std::size_t i) const;
  /// +1/-1 for an edge on the circuit, 0 otherwise.
  [[nodiscard]] int edge_sign(const Multigraph& g, EdgeId e) const;
  [[nodiscard]] Circuit reversed() const;
  /// Reverses the direction if needed so that `e` is traversed tail -> head
  /// (or head -> tail when `against_reference` is set).
  [[nodiscard]] Circuit oriented_along(const Multigraph& g, EdgeId e, bool against_reference = false) const;
};

bool is_valid_circuit(const Multigraph& g, const Circuit& c);

/// Circuits C1..Cn, consecutive ones meeting in exactly one vertex and
/// non-consecutive ones vertex-disjoint.
struct CircuitChain {
  std::vector<Circuit> circuits;

  /// shared_vertices()[i] is the vertex common to circuits i and i+1.
  [[nodiscard]] std::vector<VertexId> shared_vertices() const;
  /// Vertices of circuit i lying on no other circuit of the chain.
  [[nodiscard]] std::vector<VertexId> internal_vertices(std::size_t i) const;
  [[nodiscard]] bool is_internal(std::size_t i, VertexId v) const;
  [[nodiscard]] std::vector<EdgeId> edges() const;
};

/// Checks every chain invariant; with endpoints (u, v), also that u and v are
/// internal vertices of the first and last circuit (in either order).
bool validate_circuit_chain(const Multigraph& g, const CircuitChain& chain,
                            std::optional<std::pair<VertexId, VertexId>> endpoints = std::nullopt);

/// BFS shortest path using only `allowed` edges (all edges when null).
/// Incident edges are scanned in id order.
std::optional<Path> shortest_path(const Multigraph& g, VertexId from, VertexId to,
                                  const EdgeMask* allowed = nullptr);

/// Shortest circuit through `e` within the allowed edges, traversing `e`
/// tail -> head. Throws PreconditionError when `e` is a bridge there.
Circuit find_circuit_through(const Multigraph& g, EdgeId e, const EdgeMask* allowed = nullptr);

/// A circuit chain connecting u and v inside the allowed edges.
///
/// Walks the block-cut tree from u to v and, in every block on the way,
/// takes a minimum-length circuit through the entry and exit vertex (two
/// internally disjoint paths by min-cost flow). The component containing u
/// must be 2-edge-connected and contain v. The result is validated.
CircuitChain find_circuit_chain(const Multigraph& g, VertexId u, VertexId v,
                                const EdgeMask* allowed = nullptr);

/// Minimum-length circuit through two distinct vertices of one block.
Circuit circuit_through_vertices(const Multigraph& g, VertexId x, VertexId y,
                                 const EdgeMask* allowed = nullptr);

/// A leaf (or isolated) edge-block of G - inside together with two edges
/// joining it to the inside at distinct block vertices.
struct AttachableBlock {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // edges of G with both ends in the block
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  VertexId inner1 = -1;  // block endpoint of e1
  VertexId inner2 = -1;
  VertexId outer1 = -1;  // inside endpoint of e1
  VertexId outer2 = -1;
};

/// Throws PreconditionError when `inside` already spans G, when some outside
/// vertex has two edges into `inside`, or when no block qualifies.
AttachableBlock find_attachable_block(const Multigraph& g, const VertexMask& inside);

/// An edge set split into vertex-disjoint circuit chains.
struct ChainStructure {
  std::vector<CircuitChain> chains;
  std::vector<int> chain_of_edge;    // -1 off the chains
  std::vector<int> circuit_of_edge;  // index within its chain, -1 off the chains

  /// Adjacent edges on the same circuit of the same chain.
  [[nodiscard]] bool consecutive(const Multigraph& g, EdgeId e, EdgeId f) const;
  [[nodiscard]] bool on_chain(EdgeId e) const { return chain_of_edge[static_cast<std::size_t>(e)] >= 0; }
};

/// Decomposes the masked edges into vertex-disjoint circuit chains, or
/// returns nullopt when they do not have that shape.
std::optional<ChainStructure> decompose_circuit_chains(const Multigraph& g, const EdgeMask& edges);

}  // namespace richflow
