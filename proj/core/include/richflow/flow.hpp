#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "richflow/circuits.hpp"
#include "richflow/group.hpp"
#include "richflow/multigraph.hpp"

namespace richflow {

/// Group-valued edge assignment. Each value is read relative to the edge's
/// reference orientation tail -> head; reorienting an edge means negating
/// its stored value, so orientation is carried entirely by sign.
class Flow {
 public:
  Flow(Group group, int edge_count);

  [[nodiscard]] const Group& group() const { return group_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] Element value(EdgeId e) const { return values_.at(static_cast<std::size_t>(e)); }
  [[nodiscard]] std::span<const Element> values() const { return values_; }

  void set(EdgeId e, Element x) { values_.at(static_cast<std::size_t>(e)) = group_.normalize(x); }
  void add_to(EdgeId e, Element x) { set(e, group_.add(value(e), x)); }

  friend bool operator==(const Flow&, const Flow&) = default;

 private:
  Group group_;
  std::vector<Element> values_;
};

/// Value of `e` oriented into `v` (v must be an endpoint of e).
Element oriented_into(const Multigraph& g, const Group& group, EdgeId e, VertexId v, Element value);
/// Value of `e` oriented out of `v`.
Element oriented_out_of(const Multigraph& g, const Group& group, EdgeId e, VertexId v, Element value);

/// Sends `a` along the circuit in its traversal direction; zero elsewhere.
Flow send_through_circuit(const Multigraph& g, const Circuit& d, const Group& group, Element a);
/// In-place variant: adds the sent flow to `phi`.
void add_along_circuit(Flow& phi, const Multigraph& g, const Circuit& d, Element a);

struct FlowTerm {
  long long coefficient;
  const Flow& flow;
};

/// Edgewise sum of coefficient * flow. Modular groups must match; integer
/// flows may carry different bounds and the result bound is
/// 1 + sum |c| * (bound - 1), the smallest bound valid for any inputs.
Flow linear_combine(const std::vector<FlowTerm>& terms);

/// (a, b) per edge for a Zk-flow and a Z2-flow on the same graph.
Flow product_flows(const Flow& zk_flow, const Flow& z2_flow);
Flow first_coordinate(const Flow& product);
Flow second_coordinate(const Flow& product);

/// Two distinct edges sharing `shared`. Canonical form has e < f and, for
/// parallel edges, `shared` the lower of the two common vertices.
struct AdjacentPair {
  EdgeId e = -1;
  EdgeId f = -1;
  VertexId shared = -1;

  friend bool operator==(const AdjacentPair&, const AdjacentPair&) = default;
  friend auto operator<=>(const AdjacentPair&, const AdjacentPair&) = default;
};

/// Canonical pair for two adjacent edges; throws if they are not adjacent.
AdjacentPair make_adjacent_pair(const Multigraph& g, EdgeId e, EdgeId f);
/// Every unordered adjacent pair exactly once, canonical, sorted.
std::vector<AdjacentPair> adjacent_pairs(const Multigraph& g);

struct PairRelation {
  bool confluent = false;
  bool contrafluent = false;
};

/// Orients e into the shared vertex and f out of it, then compares values.
PairRelation pair_relation(const Multigraph& g, const Flow& phi, const AdjacentPair& p);

/// Distinct pairs sharing exactly one edge whose three edges have a common
/// vertex.
bool strongly_intersecting(const Multigraph& g, const AdjacentPair& p1, const AdjacentPair& p2);

struct FlowReport {
  bool conserved = true;
  bool nowhere_zero = true;
  bool within_bound = true;  // integer flows only; always true otherwise
  std::vector<VertexId> unbalanced_vertices;
  std::vector<EdgeId> zero_edges;
  std::vector<EdgeId> out_of_bound_edges;
};

FlowReport verify_flow(const Multigraph& g, const Flow& phi);

/// Edges whose Z2 coordinate is 1. Requires a Zk x Z2 flow.
std::vector<EdgeId> chain_edges(const Flow& phi);
EdgeMask chain_edge_mask(const Flow& phi);

struct RichnessReport {
  bool integer_group = false;
  bool conserved = false;
  bool nowhere_zero = false;
  bool bound_ok = false;
  bool adjacent_abs_distinct = false;
  std::int64_t max_abs = 0;
  std::optional<AdjacentPair> clash;  // first adjacent pair with equal |value|

  [[nodiscard]] bool rich() const {
    return integer_group && conserved && nowhere_zero && bound_ok && adjacent_abs_distinct;
  }
};

RichnessReport richness_report(const Multigraph& g, const Flow& phi);
bool is_rich(const Multigraph& g, const Flow& phi);

/// The same flow seen with edge `e` reoriented.
std::pair<Multigraph, Flow> reorient_edge(const Multigraph& g, const Flow& phi, EdgeId e);

std::string format_element(const Group& group, Element x);

}  // namespace richflow
