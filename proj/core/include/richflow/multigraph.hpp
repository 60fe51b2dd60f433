#pragma once

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace richflow {

using VertexId = int;
using EdgeId = int;

/// An edge with its fixed reference orientation tail -> head.
struct Edge {
  EdgeId id = -1;
  VertexId tail = -1;
  VertexId head = -1;

  [[nodiscard]] VertexId other(VertexId v) const { return v == tail ? head : tail; }
  [[nodiscard]] bool incident(VertexId v) const { return v == tail || v == head; }
  /// True when both edges join the same two vertices.
  [[nodiscard]] bool parallel_to(const Edge& e) const {
    return (tail == e.tail && head == e.head) || (tail == e.head && head == e.tail);
  }
};

/// Loop-free multigraph with dense vertex and edge ids.
///
/// Edge ids are assigned in insertion order. Incidence lists are kept in
/// increasing edge-id order, which every search in the library relies on
/// for its lowest-id tie-breaking.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  VertexId add_vertex();
  /// Throws PreconditionError on a loop or an out-of-range endpoint.
  EdgeId add_edge(VertexId tail, VertexId head);

  [[nodiscard]] int vertex_count() const { return static_cast<int>(incidence_.size()); }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] std::span<const EdgeId> incident(VertexId v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  [[nodiscard]] int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] int min_degree() const;

  /// Copy with edge `e` reoriented (tail and head swapped).
  [[nodiscard]] Multigraph with_edge_reversed(EdgeId e) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Per-edge membership flags, indexed by edge id.
using EdgeMask = std::vector<char>;
/// Per-vertex membership flags, indexed by vertex id.
using VertexMask = std::vector<char>;

/// Subgraph on the same vertex ids keeping only the masked edges, with a map
/// from local edge ids back to the parent graph.
struct EdgeSubgraph {
  Multigraph graph;
  std::vector<EdgeId> to_parent;
};

EdgeSubgraph edge_subgraph(const Multigraph& g, const EdgeMask& keep);

/// Induced subgraph on `keep`, relabelled densely in increasing vertex order.
struct InducedSubgraph {
  Multigraph graph;
  std::vector<VertexId> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
};

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexMask& keep);

/// Parses the text graph format: optional '#' comment lines, a header
/// "n m", then m lines "u v". Throws ParseError.
Multigraph parse_multigraph(std::istream& in);
Multigraph parse_multigraph_string(std::string_view text);
Multigraph read_multigraph_file(const std::string& path);

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// Several graphs in one text, separated by blank lines. A block's first
/// "# name" comment names it; unnamed blocks are called "#<index>". Blocks
/// made only of comments are skipped.
std::vector<NamedGraph> parse_multigraph_collection(std::string_view text);
std::vector<NamedGraph> read_multigraph_collection(const std::string& path);

/// Writes the same text format parse_multigraph reads.
std::string format_multigraph(const Multigraph& g);

}  // namespace richflow
