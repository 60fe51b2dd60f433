#pragma once

#include <vector>

namespace richflow::detail {

/// Small residual network for unit-scale min-cost and max-flow problems.
/// Shortest paths use Bellman-Ford over arcs in insertion order, so results
/// are deterministic and favour earlier arcs on ties.
class Network {
 public:
  explicit Network(int node_count);

  /// Returns the arc index; its reverse is index ^ 1.
  int add_arc(int from, int to, long long capacity, long long cost = 0);

  /// Pushes up to `limit` units from s to t along successive shortest paths.
  /// Returns the amount pushed.
  long long min_cost_flow(int s, int t, long long limit);

  [[nodiscard]] long long flow_on(int arc) const { return arcs_[static_cast<std::size_t>(arc)].flow; }
  [[nodiscard]] int node_count() const { return static_cast<int>(out_.size()); }
  [[nodiscard]] int arc_head(int arc) const { return arcs_[static_cast<std::size_t>(arc)].to; }
  [[nodiscard]] const std::vector<int>& out_arcs(int node) const { return out_[static_cast<std::size_t>(node)]; }

 private:
  struct Arc {
    int to;
    long long capacity;
    long long cost;
    long long flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace richflow::detail
