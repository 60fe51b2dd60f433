#include "richflow/circuits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "network.hpp"
#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"

namespace richflow {

bool Circuit::contains_edge(EdgeId e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool Circuit::contains_vertex(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int Circuit::traversal_sign(const Multigraph& g, std::size_t i) const {
  return g.edge(edges[i]).tail == vertices[i] ? 1 : -1;
}

int Circuit::edge_sign(const Multigraph& g, EdgeId e) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] == e) return traversal_sign(g, i);
  }
  return 0;
}

Circuit Circuit::reversed() const {
  // Walk backwards from vertices[0]: new edge i joins new vertex i and i+1.
  Circuit r;
  const std::size_t n = edges.size();
  r.vertices.reserve(n);
  r.edges.reserve(n);
  r.vertices.push_back(vertices[0]);
  for (std::size_t i = 1; i < n; ++i) r.vertices.push_back(vertices[n - i]);
  for (std::size_t i = 0; i < n; ++i) r.edges.push_back(edges[n - 1 - i]);
  return r;
}

Circuit Circuit::oriented_along(const Multigraph& g, EdgeId e, bool against_reference) const {
  const int sign = edge_sign(g, e);
  if (sign == 0) throw PreconditionError("edge is not on the circuit");
  const int wanted = against_reference ? -1 : 1;
  return sign == wanted ? *this : reversed();
}

bool is_valid_circuit(const Multigraph& g, const Circuit& c) {
  const std::size_t n = c.edges.size();
  if (n < 2 || c.vertices.size() != n) return false;
  std::set<VertexId> vs;
  std::set<EdgeId> es;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId a = c.vertices[i];
    const VertexId b = c.vertices[(i + 1) % n];
    const EdgeId e = c.edges[i];
    if (a < 0 || a >= g.vertex_count() || e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (!((ed.tail == a && ed.head == b) || (ed.tail == b && ed.head == a))) return false;
    vs.insert(a);
    es.insert(e);
  }
  return vs.size() == n && es.size() == n;
}

std::vector<VertexId> CircuitChain::shared_vertices() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i + 1 < circuits.size(); ++i) {
    for (VertexId v : circuits[i].vertices) {
      if (circuits[i + 1].contains_vertex(v)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool CircuitChain::is_internal(std::size_t i, VertexId v) const {
  if (i >= circuits.size() || !circuits[i].contains_vertex(v)) return false;
  for (std::size_t j = 0; j < circuits.size(); ++j) {
    if (j != i && circuits[j].contains_vertex(v)) return false;
  }
  return true;
}

std::vector<VertexId> CircuitChain::internal_vertices(std::size_t i) const {
  std::vector<VertexId> out;
  for (VertexId v : circuits.at(i).vertices) {
    if (is_internal(i, v)) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> CircuitChain::edges() const {
  std::vector<EdgeId> out;
  for (const Circuit& c : circuits) out.insert(out.end(), c.edges.begin(), c.edges.end());
  return out;
}

bool validate_circuit_chain(const Multigraph& g, const CircuitChain& chain,
                            std::optional<std::pair<VertexId, VertexId>> endpoints) {
  const auto& cs = chain.circuits;
  if (cs.empty()) return false;
  for (const Circuit& c : cs) {
    if (!is_valid_circuit(g, c)) return false;
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::size_t common = 0;
      for (VertexId v : cs[i].vertices) common += cs[j].contains_vertex(v) ? 1 : 0;
      const std::size_t expected = (j == i + 1) ? 1 : 0;
      if (common != expected) return false;
    }
  }
  if (endpoints) {
    const auto [u, v] = *endpoints;
    if (u == v) return false;
    const std::size_t last = cs.size() - 1;
    const bool forward = chain.is_internal(0, u) && chain.is_internal(last, v);
    const bool backward = chain.is_internal(0, v) && chain.is_internal(last, u);
    if (!forward && !backward) return false;
  }
  return true;
}

std::optional<Path> shortest_path(const Multigraph& g, VertexId from, VertexId to, const EdgeMask* allowed) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<EdgeId> via(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(to)]) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(v)) {
      if (allowed && !(*allowed)[static_cast<std::size_t>(e)]) continue;
      const VertexId w = g.edge(e).other(v);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      via[static_cast<std::size_t>(w)] = e;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) return std::nullopt;
  Path p;
  for (VertexId v = to; v != from;) {
    const EdgeId e = via[static_cast<std::size_t>(v)];
    p.vertices.push_back(v);
    p.edges.push_back(e);
    v = g.edge(e).other(v);
  }
  p.vertices.push_back(from);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

Circuit find_circuit_through(const Multigraph& g, EdgeId e, const EdgeMask* allowed) {
  if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range");
  EdgeMask mask = allowed ? *allowed : EdgeMask(static_cast<std::size_t>(g.edge_count()), 1);
  mask[static_cast<std::size_t>(e)] = 0;
  const Edge& ed = g.edge(e);
  const auto path = shortest_path(g, ed.head, ed.tail, &mask);
  if (!path) throw PreconditionError("edge " + std::to_string(e) + " is a bridge; no circuit contains it");
  Circuit c;
  c.vertices.push_back(ed.tail);
  c.edges.push_back(e);
  for (std::size_t i = 0; i < path->edges.size(); ++i) {
    c.vertices.push_back(path->vertices[i]);
    c.edges.push_back(path->edges[i]);
  }
  return c;
}

Circuit circuit_through_vertices(const Multigraph& g, VertexId x, VertexId y, const EdgeMask* allowed) {
  if (x == y) throw PreconditionError("circuit_through_vertices: x == y");
  // Vertex v splits into in-node 2v and out-node 2v+1 with unit capacity.
  const int n = g.vertex_count();
  detail::Network net(2 * n);
  for (VertexId v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1, 0);
  std::vector<std::pair<int, EdgeId>> edge_arcs;
  for (const Edge& e : g.edges()) {
    if (allowed && !(*allowed)[static_cast<std::size_t>(e.id)]) continue;
    edge_arcs.emplace_back(net.add_arc(2 * e.tail + 1, 2 * e.head, 1, 1), e.id);
    edge_arcs.emplace_back(net.add_arc(2 * e.head + 1, 2 * e.tail, 1, 1), e.id);
  }
  if (net.min_cost_flow(2 * x + 1, 2 * y, 2) != 2) {
    throw PreconditionError("no two internally disjoint paths between the vertices");
  }
  // next[v] lists (w, edge) for used arcs leaving v.
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> next;
  for (const auto& [arc, e] : edge_arcs) {
    if (net.flow_on(arc) > 0) {
      const VertexId from = g.edge(e).tail == net.arc_head(arc) / 2 ? g.edge(e).head : g.edge(e).tail;
      next[from].emplace_back(net.arc_head(arc) / 2, e);
    }
  }
  std::vector<Path> paths;
  for (const auto& [w0, e0] : next[x]) {
    Path p;
    p.vertices = {x, w0};
    p.edges = {e0};
    VertexId cur = w0;
    while (cur != y) {
      const auto& step = next.at(cur);
      if (step.size() != 1) throw DefectError("circuit_through_vertices: malformed flow decomposition");
      p.vertices.push_back(step[0].first);
      p.edges.push_back(step[0].second);
      cur = step[0].first;
    }
    paths.push_back(std::move(p));
  }
  if (paths.size() != 2) throw DefectError("circuit_through_vertices: expected two paths");
  std::sort(paths.begin(), paths.end(),
            [](const Path& a, const Path& b) { return a.edges.front() < b.edges.front(); });
  Circuit c;
  const Path& p1 = paths[0];
  const Path& p2 = paths[1];
  for (std::size_t i = 0; i < p1.edges.size(); ++i) {
    c.vertices.push_back(p1.vertices[i]);
    c.edges.push_back(p1.edges[i]);
  }
  for (std::size_t i = p2.edges.size(); i-- > 0;) {
    c.vertices.push_back(p2.vertices[i + 1]);
    c.edges.push_back(p2.edges[i]);
  }
  if (!is_valid_circuit(g, c)) throw DefectError("circuit_through_vertices produced an invalid circuit");
  return c;
}

CircuitChain find_circuit_chain(const Multigraph& g, VertexId u, VertexId v, const EdgeMask* allowed) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
    throw PreconditionError("find_circuit_chain: vertex out of range");
  }
  if (u == v) throw PreconditionError("find_circuit_chain: endpoints must differ");
  const EdgeSubgraph sub =
      edge_subgraph(g, allowed ? *allowed : EdgeMask(static_cast<std::size_t>(g.edge_count()), 1));
  const Multigraph& h = sub.graph;

  const auto label = component_labels(h);
  const int comp = label[static_cast<std::size_t>(u)];
  if (label[static_cast<std::size_t>(v)] != comp) {
    throw PreconditionError("find_circuit_chain: endpoints are not connected");
  }
  for (EdgeId b : bridges(h)) {
    if (label[static_cast<std::size_t>(h.edge(b).tail)] == comp) {
      throw PreconditionError("find_circuit_chain: graph is not 2-edge-connected");
    }
  }

  const auto blocks = biconnected_blocks(h);
  const auto nb = static_cast<int>(blocks.size());
  std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(h.vertex_count()));
  for (int b = 0; b < nb; ++b) {
    for (VertexId x : blocks[static_cast<std::size_t>(b)].vertices) blocks_of[static_cast<std::size_t>(x)].push_back(b);
  }
  // Block-cut tree: block nodes 0..nb-1, vertex x as node nb + x.
  auto node_of = [&](VertexId x) {
    const auto& bs = blocks_of[static_cast<std::size_t>(x)];
    return bs.size() == 1 ? bs.front() : nb + x;
  };
  auto neighbours = [&](int node) {
    std::vector<int> out;
    if (node < nb) {
      for (VertexId x : blocks[static_cast<std::size_t>(node)].vertices) {
        if (blocks_of[static_cast<std::size_t>(x)].size() > 1) out.push_back(nb + x);
      }
    } else {
      out = blocks_of[static_cast<std::size_t>(node - nb)];
    }
    return out;
  };
  const int start = node_of(u);
  const int goal = node_of(v);
  std::map<int, int> parent{{start, start}};
  std::deque<int> queue{start};
  while (!queue.empty() && !parent.count(goal)) {
    const int cur = queue.front();
    queue.pop_front();
    for (int nxt : neighbours(cur)) {
      if (parent.emplace(nxt, cur).second) queue.push_back(nxt);
    }
  }
  if (!parent.count(goal)) throw DefectError("find_circuit_chain: block-cut tree path not found");
  std::vector<int> tree_path;
  for (int cur = goal;; cur = parent[cur]) {
    tree_path.push_back(cur);
    if (cur == start) break;
  }
  std::reverse(tree_path.begin(), tree_path.end());

  CircuitChain chain;
  VertexId entry = u;
  for (std::size_t i = 0; i < tree_path.size(); ++i) {
    const int node = tree_path[i];
    if (node >= nb) continue;
    const VertexId exit = (i + 1 < tree_path.size()) ? tree_path[i + 1] - nb : v;
    EdgeMask in_block(static_cast<std::size_t>(h.edge_count()), 0);
    for (EdgeId e : blocks[static_cast<std::size_t>(node)].edges) in_block[static_cast<std::size_t>(e)] = 1;
    Circuit c = circuit_through_vertices(h, entry, exit, &in_block);
    for (EdgeId& e : c.edges) e = sub.to_parent[static_cast<std::size_t>(e)];
    chain.circuits.push_back(std::move(c));
    entry = exit;
  }
  if (!validate_circuit_chain(g, chain, std::make_pair(u, v))) {
    throw DefectError("find_circuit_chain: constructed chain failed validation");
  }
  return chain;
}

AttachableBlock find_attachable_block(const Multigraph& g, const VertexMask& inside) {
  VertexMask outside(static_cast<std::size_t>(g.vertex_count()), 0);
  bool any_outside = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (inside[static_cast<std::size_t>(v)]) continue;
    outside[static_cast<std::size_t>(v)] = 1;
    any_outside = true;
    int to_inside = 0;
    for (EdgeId e : g.incident(v)) to_inside += inside[static_cast<std::size_t>(g.edge(e).other(v))] ? 1 : 0;
    if (to_inside >= 2) {
      throw PreconditionError("find_attachable_block: vertex " + std::to_string(v) +
                              " has two edges into the subgraph (vertex step applies)");
    }
  }
  if (!any_outside) throw PreconditionError("find_attachable_block: subgraph already spans the graph");

  const InducedSubgraph rest = induced_subgraph(g, outside);
  int block_count = 0;
  const auto label = edge_block_labels(rest.graph, &block_count);
  std::vector<int> leaving(static_cast<std::size_t>(block_count), 0);
  for (EdgeId b : bridges(rest.graph)) {
    const Edge& e = rest.graph.edge(b);
    ++leaving[static_cast<std::size_t>(label[static_cast<std::size_t>(e.tail)])];
    ++leaving[static_cast<std::size_t>(label[static_cast<std::size_t>(e.head)])];
  }
  std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < rest.to_parent_vertex.size(); ++i) {
    block_of[static_cast<std::size_t>(rest.to_parent_vertex[i])] = label[i];
  }
  // Blocks are labelled in order of their lowest local vertex, which is also
  // the order of their lowest vertex in G.
  for (int b = 0; b < block_count; ++b) {
    if (leaving[static_cast<std::size_t>(b)] > 1) continue;
    AttachableBlock out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (block_of[static_cast<std::size_t>(v)] == b) out.vertices.push_back(v);
    }
    for (const Edge& e : g.edges()) {
      const int bt = block_of[static_cast<std::size_t>(e.tail)];
      const int bh = block_of[static_cast<std::size_t>(e.head)];
      if (bt == b && bh == b) out.edges.push_back(e.id);
      const bool attaches = (bt == b && inside[static_cast<std::size_t>(e.head)]) ||
                            (bh == b && inside[static_cast<std::size_t>(e.tail)]);
      if (!attaches) continue;
      const VertexId inner = bt == b ? e.tail : e.head;
      if (out.e1 < 0) {
        out.e1 = e.id;
        out.inner1 = inner;
        out.outer1 = e.other(inner);
      } else if (out.e2 < 0 && inner != out.inner1) {
        out.e2 = e.id;
        out.inner2 = inner;
        out.outer2 = e.other(inner);
      }
    }
    if (out.e2 >= 0) return out;
  }
  throw PreconditionError("find_attachable_block: no leaf edge-block with two attachments");
}

bool ChainStructure::consecutive(const Multigraph& g, EdgeId e, EdgeId f) const {
  if (e == f) return false;
  const auto ei = static_cast<std::size_t>(e);
  const auto fi = static_cast<std::size_t>(f);
  if (chain_of_edge[ei] < 0 || chain_of_edge[ei] != chain_of_edge[fi]) return false;
  if (circuit_of_edge[ei] != circuit_of_edge[fi]) return false;
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  return b.incident(a.tail) || b.incident(a.head);
}

namespace {

std::optional<Circuit> circuit_from_edges(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    at[g.edge(e).tail].push_back(e);
    at[g.edge(e).head].push_back(e);
  }
  for (const auto& [v, inc] : at) {
    if (inc.size() != 2) return std::nullopt;
  }
  if (at.size() != edges.size()) return std::nullopt;
  Circuit c;
  VertexId cur = at.begin()->first;
  EdgeId prev = -1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& inc = at[cur];
    EdgeId e = inc[0];
    if (prev >= 0) {
      e = (inc[0] == prev) ? inc[1] : inc[0];
    } else {
      e = std::min(inc[0], inc[1]);
    }
    c.vertices.push_back(cur);
    c.edges.push_back(e);
    cur = g.edge(e).other(cur);
    prev = e;
  }
  if (!is_valid_circuit(g, c)) return std::nullopt;
  return c;
}

}  // namespace

std::optional<ChainStructure> decompose_circuit_chains(const Multigraph& g, const EdgeMask& edges) {
  const EdgeSubgraph sub = edge_subgraph(g, edges);
  const auto blocks = biconnected_blocks(sub.graph);

  ChainStructure out;
  out.chain_of_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
  out.circuit_of_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
  if (blocks.empty()) return out;

  std::vector<Circuit> circuits;
  for (const Block& b : blocks) {
    std::vector<EdgeId> parent_edges;
    for (EdgeId e : b.edges) parent_edges.push_back(sub.to_parent[static_cast<std::size_t>(e)]);
    auto c = circuit_from_edges(g, parent_edges);
    if (!c) return std::nullopt;
    circuits.push_back(std::move(*c));
  }
  std::map<VertexId, std::vector<int>> circuits_at;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (VertexId v : circuits[i].vertices) circuits_at[v].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<VertexId>> cuts_of(circuits.size());
  for (const auto& [v, cs] : circuits_at) {
    if (cs.size() > 2) return std::nullopt;
    if (cs.size() == 2) {
      cuts_of[static_cast<std::size_t>(cs[0])].push_back(v);
      cuts_of[static_cast<std::size_t>(cs[1])].push_back(v);
    }
  }
  for (const auto& cuts : cuts_of) {
    if (cuts.size() > 2) return std::nullopt;
  }
  std::vector<char> used(circuits.size(), 0);
  for (std::size_t start = 0; start < circuits.size(); ++start) {
    if (used[start] || cuts_of[start].size() > 1) continue;
    CircuitChain chain;
    int cur = static_cast<int>(start);
    VertexId came_through = -1;
    while (cur >= 0) {
      used[static_cast<std::size_t>(cur)] = 1;
      chain.circuits.push_back(circuits[static_cast<std::size_t>(cur)]);
      int next = -1;
      VertexId via = -1;
      for (VertexId x : cuts_of[static_cast<std::size_t>(cur)]) {
        if (x == came_through) continue;
        for (int c : circuits_at[x]) {
          if (c != cur) {
            next = c;
            via = x;
          }
        }
      }
      if (next >= 0 && used[static_cast<std::size_t>(next)]) return std::nullopt;
      cur = next;
      came_through = via;
    }
    out.chains.push_back(std::move(chain));
  }
  for (char u : used) {
    if (!u) return std::nullopt;  // a closed ring of circuits
  }
  for (std::size_t ci = 0; ci < out.chains.size(); ++ci) {
    if (!validate_circuit_chain(g, out.chains[ci])) return std::nullopt;
    for (std::size_t j = 0; j < out.chains[ci].circuits.size(); ++j) {
      for (EdgeId e : out.chains[ci].circuits[j].edges) {
        out.chain_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(ci);
        out.circuit_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(j);
      }
    }
  }
  return out;
}

}  // namespace richflow
