#include "richflow/tower.hpp"

#include <algorithm>

#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"

namespace richflow {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::add_chord:
      return "chord";
    case StepKind::add_vertex:
      return "vertex";
    case StepKind::add_block_chain:
      return "block_chain";
  }
  return "?";
}

EdgeMask Tower::edges_of(int i) const {
  EdgeMask mask(edge_level.size(), 0);
  for (std::size_t e = 0; e < edge_level.size(); ++e) mask[e] = edge_level[e] <= i ? 1 : 0;
  return mask;
}

VertexMask Tower::vertices_of(int i) const {
  VertexMask mask(vertex_level.size(), 0);
  for (std::size_t v = 0; v < vertex_level.size(); ++v) mask[v] = vertex_level[v] <= i ? 1 : 0;
  return mask;
}

bool subgraph_two_edge_connected(const Multigraph& g, const EdgeMask& edges, const VertexMask& vertices) {
  const EdgeSubgraph sub = edge_subgraph(g, edges);
  for (const Edge& e : sub.graph.edges()) {
    if (!vertices[static_cast<std::size_t>(e.tail)] || !vertices[static_cast<std::size_t>(e.head)]) return false;
  }
  const auto label = component_labels(sub.graph);
  int comp = -1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!vertices[static_cast<std::size_t>(v)]) continue;
    if (comp < 0) comp = label[static_cast<std::size_t>(v)];
    if (label[static_cast<std::size_t>(v)] != comp) return false;
  }
  return bridges(sub.graph).empty();
}

namespace {

constexpr int kUnset = 1 << 30;

}  // namespace

Tower build_tower(const Multigraph& g, EdgeId e_star, int b) {
  if (e_star < 0 || e_star >= g.edge_count()) throw PreconditionError("build_tower: e* out of range");
  if (b != 0 && b != 1) throw PreconditionError("build_tower: b must be 0 or 1");
  if (!edge_connectivity_at_least(g, 3)) throw PreconditionError("build_tower: graph is not 3-edge-connected");

  Tower tower;
  tower.e_star = e_star;
  tower.b = b;
  tower.edge_level.assign(static_cast<std::size_t>(g.edge_count()), kUnset);
  tower.vertex_level.assign(static_cast<std::size_t>(g.vertex_count()), kUnset);

  const Edge& star = g.edge(e_star);
  if (b == 1) {
    tower.base.circuits.push_back(find_circuit_through(g, e_star));
  } else {
    EdgeMask without(static_cast<std::size_t>(g.edge_count()), 1);
    without[static_cast<std::size_t>(e_star)] = 0;
    tower.base = find_circuit_chain(g, star.tail, star.head, &without);
  }
  for (const Circuit& c : tower.base.circuits) {
    for (EdgeId e : c.edges) tower.edge_level[static_cast<std::size_t>(e)] = 1;
    for (VertexId v : c.vertices) tower.vertex_level[static_cast<std::size_t>(v)] = 1;
  }

  auto in_h = [&](VertexId v) { return tower.vertex_level[static_cast<std::size_t>(v)] != kUnset; };
  auto edge_free = [&](EdgeId e) { return tower.edge_level[static_cast<std::size_t>(e)] == kUnset; };

  int remaining = 0;
  for (int lvl : tower.edge_level) remaining += lvl == kUnset ? 1 : 0;

  while (remaining > 0) {
    const int next_level = tower.height() + 1;
    TowerStep step;
    bool found = false;

    for (const Edge& e : g.edges()) {
      if (!edge_free(e.id) || !in_h(e.tail) || !in_h(e.head)) continue;
      if (e.id == e_star && remaining != 1) continue;
      step.kind = StepKind::add_chord;
      step.e1 = e.id;
      step.added_edges = {e.id};
      found = true;
      break;
    }

    if (!found) {
      for (VertexId v = 0; v < g.vertex_count() && !found; ++v) {
        if (in_h(v)) continue;
        std::vector<EdgeId> to_h;
        for (EdgeId e : g.incident(v)) {
          if (in_h(g.edge(e).other(v))) to_h.push_back(e);
        }
        if (to_h.size() < 2) continue;
        step.kind = StepKind::add_vertex;
        step.vertex = v;
        step.e1 = to_h[0];
        step.e2 = to_h[1];
        step.added_edges = {to_h[0], to_h[1]};
        step.added_vertices = {v};
        found = true;
      }
    }

    if (!found) {
      VertexMask inside(static_cast<std::size_t>(g.vertex_count()), 0);
      for (VertexId v = 0; v < g.vertex_count(); ++v) inside[static_cast<std::size_t>(v)] = in_h(v) ? 1 : 0;
      const AttachableBlock block = find_attachable_block(g, inside);
      EdgeMask block_edges(static_cast<std::size_t>(g.edge_count()), 0);
      for (EdgeId e : block.edges) block_edges[static_cast<std::size_t>(e)] = 1;
      step.kind = StepKind::add_block_chain;
      step.e1 = block.e1;
      step.e2 = block.e2;
      step.chain = find_circuit_chain(g, block.inner1, block.inner2, &block_edges);
      step.added_edges = {block.e1, block.e2};
      for (const Circuit& c : step.chain.circuits) {
        step.added_edges.insert(step.added_edges.end(), c.edges.begin(), c.edges.end());
        for (VertexId v : c.vertices) {
          if (std::find(step.added_vertices.begin(), step.added_vertices.end(), v) == step.added_vertices.end()) {
            step.added_vertices.push_back(v);
          }
        }
      }
      found = true;
    }

    for (EdgeId e : step.added_edges) {
      if (!edge_free(e)) throw DefectError("build_tower: step re-adds an edge");
      tower.edge_level[static_cast<std::size_t>(e)] = next_level;
      --remaining;
    }
    for (VertexId v : step.added_vertices) tower.vertex_level[static_cast<std::size_t>(v)] = next_level;
    tower.steps.push_back(std::move(step));

    if (!subgraph_two_edge_connected(g, tower.edges_of(next_level), tower.vertices_of(next_level))) {
      throw DefectError("build_tower: H_" + std::to_string(next_level) + " is not 2-edge-connected");
    }
  }
  for (int lvl : tower.vertex_level) {
    if (lvl == kUnset) throw DefectError("build_tower: a vertex was never reached");
  }
  return tower;
}

bool validate_tower(const Multigraph& g, const Tower& tower, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto m = static_cast<std::size_t>(g.edge_count());
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (tower.edge_level.size() != m || tower.vertex_level.size() != n) return fail("level arrays have wrong size");
  const Edge& star = g.edge(tower.e_star);

  // Replay the levels from the recorded base and steps.
  std::vector<int> edge_level(m, kUnset);
  std::vector<int> vertex_level(n, kUnset);
  if (tower.b == 1) {
    if (tower.base.circuits.size() != 1 || !is_valid_circuit(g, tower.base.circuits[0])) {
      return fail("base is not a single circuit");
    }
    if (!tower.base.circuits[0].contains_edge(tower.e_star)) return fail("base circuit misses e*");
  } else {
    if (!validate_circuit_chain(g, tower.base, std::make_pair(star.tail, star.head))) {
      return fail("base chain does not connect the ends of e*");
    }
    const auto base_edges = tower.base.edges();
    if (std::find(base_edges.begin(), base_edges.end(), tower.e_star) != base_edges.end()) {
      return fail("base chain uses e*");
    }
  }
  for (const Circuit& c : tower.base.circuits) {
    for (EdgeId e : c.edges) edge_level[static_cast<std::size_t>(e)] = 1;
    for (VertexId v : c.vertices) vertex_level[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t s = 0; s < tower.steps.size(); ++s) {
    const TowerStep& step = tower.steps[s];
    const int from = static_cast<int>(s) + 1;
    const int to = from + 1;
    auto in_h = [&](VertexId v) { return vertex_level[static_cast<std::size_t>(v)] <= from; };
    if (step.added_edges.empty()) return fail("step " + std::to_string(from) + " adds nothing");
    for (EdgeId e : step.added_edges) {
      if (edge_level[static_cast<std::size_t>(e)] != kUnset) return fail("step re-adds an edge");
    }
    switch (step.kind) {
      case StepKind::add_chord: {
        const Edge& e = g.edge(step.e1);
        if (!in_h(e.tail) || !in_h(e.head)) return fail("chord endpoints outside H");
        break;
      }
      case StepKind::add_vertex: {
        if (in_h(step.vertex)) return fail("vertex step adds a vertex already in H");
        for (EdgeId e : {step.e1, step.e2}) {
          if (!g.edge(e).incident(step.vertex) || !in_h(g.edge(e).other(step.vertex))) {
            return fail("vertex step edge does not join the vertex to H");
          }
        }
        if (step.e1 == step.e2) return fail("vertex step uses one edge twice");
        break;
      }
      case StepKind::add_block_chain: {
        const Edge& a = g.edge(step.e1);
        const Edge& b = g.edge(step.e2);
        const VertexId w1 = in_h(a.tail) ? a.head : a.tail;
        const VertexId w2 = in_h(b.tail) ? b.head : b.tail;
        if (in_h(w1) || in_h(w2) || !(in_h(a.tail) || in_h(a.head)) || !(in_h(b.tail) || in_h(b.head))) {
          return fail("block step edges do not join H to the block");
        }
        if (!validate_circuit_chain(g, step.chain, std::make_pair(w1, w2))) {
          return fail("block step chain does not connect the attachment points");
        }
        for (const Circuit& c : step.chain.circuits) {
          for (VertexId v : c.vertices) {
            if (in_h(v)) return fail("block step chain touches H");
          }
        }
        break;
      }
    }
    if (tower.b == 0) {
      const bool has_star =
          std::find(step.added_edges.begin(), step.added_edges.end(), tower.e_star) != step.added_edges.end();
      if (has_star && (step.kind != StepKind::add_chord || s + 1 != tower.steps.size())) {
        return fail("e* added before the final step");
      }
    }
    for (EdgeId e : step.added_edges) edge_level[static_cast<std::size_t>(e)] = to;
    for (VertexId v : step.added_vertices) vertex_level[static_cast<std::size_t>(v)] = to;
    EdgeMask h_edges(m, 0);
    VertexMask h_vertices(n, 0);
    for (std::size_t e = 0; e < m; ++e) h_edges[e] = edge_level[e] <= to ? 1 : 0;
    for (std::size_t v = 0; v < n; ++v) h_vertices[v] = vertex_level[v] <= to ? 1 : 0;
    if (!subgraph_two_edge_connected(g, h_edges, h_vertices)) {
      return fail("H_" + std::to_string(to) + " is not 2-edge-connected");
    }
  }
  if (edge_level != tower.edge_level || vertex_level != tower.vertex_level) {
    return fail("recorded levels disagree with the steps");
  }
  for (int lvl : edge_level) {
    if (lvl == kUnset) return fail("tower does not reach every edge");
  }
  for (int lvl : vertex_level) {
    if (lvl == kUnset) return fail("tower does not reach every vertex");
  }
  return true;
}

}  // namespace richflow
