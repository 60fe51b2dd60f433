#include "network.hpp"

#include <algorithm>
#include <limits>

namespace richflow::detail {

Network::Network(int node_count) : out_(static_cast<std::size_t>(node_count)) {}

int Network::add_arc(int from, int to, long long capacity, long long cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, cost, 0});
  arcs_.push_back({from, 0, -cost, 0});
  out_[static_cast<std::size_t>(from)].push_back(id);
  out_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

long long Network::min_cost_flow(int s, int t, long long limit) {
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  const auto n = out_.size();
  long long pushed = 0;
  while (pushed < limit) {
    std::vector<long long> dist(n, kInf);
    std::vector<int> via(n, -1);
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (std::size_t u = 0; u < n; ++u) {
        if (dist[u] == kInf) continue;
        for (int a : out_[u]) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.capacity - arc.flow <= 0) continue;
          const auto v = static_cast<std::size_t>(arc.to);
          if (dist[u] + arc.cost < dist[v]) {
            dist[v] = dist[u] + arc.cost;
            via[v] = a;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[static_cast<std::size_t>(t)] == kInf) break;
    long long bottleneck = limit - pushed;
    for (int v = t; v != s;) {
      const int a = via[static_cast<std::size_t>(v)];
      const Arc& arc = arcs_[static_cast<std::size_t>(a)];
      bottleneck = std::min(bottleneck, arc.capacity - arc.flow);
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    for (int v = t; v != s;) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs_[static_cast<std::size_t>(a)].flow += bottleneck;
      arcs_[static_cast<std::size_t>(a ^ 1)].flow -= bottleneck;
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    pushed += bottleneck;
  }
  return pushed;
}

}  // namespace richflow::detail
