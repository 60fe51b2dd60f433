#include "richflow/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "richflow/errors.hpp"

namespace richflow {

namespace {

std::vector<int> labels_with_mask(const Multigraph& g, const EdgeMask* skip, int* count) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        if (skip && (*skip)[static_cast<std::size_t>(e)]) continue;
        const VertexId w = g.edge(e).other(v);
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

}  // namespace

std::vector<int> component_labels(const Multigraph& g, int* count) {
  return labels_with_mask(g, nullptr, count);
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return false;
  int count = 0;
  component_labels(g, &count);
  return count == 1;
}

std::vector<Block> biconnected_blocks(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<Block> blocks;
  int timer = 0;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;

  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0 || g.degree(root) == 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.parent_edge) continue;
        const VertexId w = g.edge(e).other(f.v);
        const auto wi = static_cast<std::size_t>(w);
        const auto vi = static_cast<std::size_t>(f.v);
        if (disc[wi] < 0) {
          edge_stack.push_back(e);
          disc[wi] = low[wi] = timer++;
          frames.push_back({w, e, 0});
        } else if (disc[wi] < disc[vi]) {
          edge_stack.push_back(e);
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const auto pi = static_cast<std::size_t>(frames.back().v);
      const auto di = static_cast<std::size_t>(done.v);
      low[pi] = std::min(low[pi], low[di]);
      if (low[di] >= disc[pi]) {
        Block b;
        while (true) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          b.edges.push_back(e);
          b.vertices.push_back(g.edge(e).tail);
          b.vertices.push_back(g.edge(e).head);
          if (e == done.parent_edge) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        blocks.push_back(std::move(b));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return blocks;
}

std::vector<EdgeId> bridges(const Multigraph& g) {
  std::vector<EdgeId> out;
  for (const Block& b : biconnected_blocks(g)) {
    if (b.edges.size() == 1) out.push_back(b.edges.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> enumerate_two_edge_cuts(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("enumerate_two_edge_cuts: graph is disconnected");
  const auto m = static_cast<std::size_t>(g.edge_count());
  EdgeMask is_bridge(m, 0);
  for (EdgeId e : bridges(g)) is_bridge[static_cast<std::size_t>(e)] = 1;

  std::vector<std::pair<EdgeId, EdgeId>> cuts;
  EdgeMask keep(m, 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[static_cast<std::size_t>(e)]) continue;
    keep[static_cast<std::size_t>(e)] = 0;
    const EdgeSubgraph sub = edge_subgraph(g, keep);
    for (EdgeId local : bridges(sub.graph)) {
      const EdgeId f = sub.to_parent[static_cast<std::size_t>(local)];
      if (f > e && !is_bridge[static_cast<std::size_t>(f)]) cuts.emplace_back(e, f);
    }
    keep[static_cast<std::size_t>(e)] = 1;
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

bool edge_connectivity_at_least(const Multigraph& g, int t) {
  if (t < 1 || t > 3) throw PreconditionError("edge_connectivity_at_least supports t in {1,2,3}");
  if (!is_connected(g)) return false;
  if (t == 1) return true;
  if (!bridges(g).empty()) return false;
  if (t == 2) return true;
  return enumerate_two_edge_cuts(g).empty();
}

std::vector<int> edge_block_labels(const Multigraph& g, int* count) {
  EdgeMask skip(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : bridges(g)) skip[static_cast<std::size_t>(e)] = 1;
  return labels_with_mask(g, &skip, count);
}

std::string AdmissibilityVerdict::describe() const {
  if (admissible) return "admissible";
  std::ostringstream out;
  out << "not admissible: ";
  if (!witness) {
    out << "unknown";
  } else if (std::holds_alternative<DisconnectedWitness>(*witness)) {
    out << "graph is disconnected";
  } else if (const auto* b = std::get_if<BridgeWitness>(&*witness)) {
    out << "bridge " << b->edge;
  } else {
    const auto& c = std::get<SharedCutWitness>(*witness);
    out << "2-edge-cut {" << c.e << "," << c.f << "} shares vertex " << c.shared;
  }
  return out.str();
}

AdmissibilityVerdict is_rich_flow_admissible(const Multigraph& g) {
  if (!is_connected(g)) return {false, DisconnectedWitness{}};
  if (const auto b = bridges(g); !b.empty()) return {false, BridgeWitness{b.front()}};
  for (const auto& [e, f] : enumerate_two_edge_cuts(g)) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    VertexId shared = -1;
    for (VertexId v : {a.tail, a.head}) {
      if (b.incident(v) && (shared < 0 || v < shared)) shared = v;
    }
    if (shared >= 0) return {false, SharedCutWitness{e, f, shared}};
  }
  return {true, std::nullopt};
}

NotAdmissibleError::NotAdmissibleError(AdmissibilityVerdict verdict)
    : std::runtime_error(verdict.describe()), verdict_(std::move(verdict)) {}

}  // namespace richflow
