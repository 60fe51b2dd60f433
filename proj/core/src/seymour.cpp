#include "richflow/seymour.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"

namespace richflow {

void validate_pair_set(const Multigraph& g, const PairSet& pairs) {
  std::set<std::pair<EdgeId, EdgeId>> seen;
  std::map<EdgeId, std::vector<std::size_t>> pairs_of_edge;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const AdjacentPair& p = pairs[i];
    if (p.e < 0 || p.f < 0 || p.e >= g.edge_count() || p.f >= g.edge_count() || p.e == p.f) {
      throw PreconditionError("pair set: invalid edge ids");
    }
    if (p.shared < 0 || p.shared >= g.vertex_count() || !g.edge(p.e).incident(p.shared) ||
        !g.edge(p.f).incident(p.shared)) {
      throw PreconditionError("pair set: edges " + std::to_string(p.e) + "," + std::to_string(p.f) +
                              " do not share the anchor vertex");
    }
    if (!seen.emplace(std::min(p.e, p.f), std::max(p.e, p.f)).second) {
      throw PreconditionError("pair set: duplicate pair");
    }
    pairs_of_edge[p.e].push_back(i);
    pairs_of_edge[p.f].push_back(i);
  }
  for (const auto& [e, list] : pairs_of_edge) {
    if (list.size() >= 3) throw PreconditionError("pair set: edge " + std::to_string(e) + " lies in three pairs");
    if (list.size() == 2 && strongly_intersecting(g, pairs[list[0]], pairs[list[1]])) {
      throw PreconditionError("pair set: strongly intersecting pairs at edge " + std::to_string(e));
    }
  }
}

VertexId SplitMap::contract(VertexId v) const {
  return v < original_vertex_count ? v : anchor[static_cast<std::size_t>(v - original_vertex_count)];
}

namespace {

VertexId canonical_anchor(const Multigraph& g, const AdjacentPair& p) {
  const Edge& a = g.edge(p.e);
  const Edge& b = g.edge(p.f);
  return a.parallel_to(b) ? std::min(a.tail, a.head) : p.shared;
}

}  // namespace

SplitMap build_pair_splitting(const Multigraph& g, const PairSet& pairs) {
  validate_pair_set(g, pairs);
  if (const auto verdict = is_rich_flow_admissible(g); !verdict.admissible) throw NotAdmissibleError(verdict);

  const int n = g.vertex_count();
  const int m = g.edge_count();
  SplitMap out;
  out.original_vertex_count = n;
  out.original_edge_count = m;
  out.h = Multigraph(n + static_cast<int>(pairs.size()));

  std::vector<std::vector<std::size_t>> pairs_of_edge(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.anchor.push_back(canonical_anchor(g, pairs[i]));
    out.b_vertex.push_back(n + static_cast<VertexId>(i));
    pairs_of_edge[static_cast<std::size_t>(pairs[i].e)].push_back(i);
    pairs_of_edge[static_cast<std::size_t>(pairs[i].f)].push_back(i);
  }
  for (const Edge& e : g.edges()) {
    VertexId tail = e.tail;
    VertexId head = e.head;
    for (std::size_t i : pairs_of_edge[static_cast<std::size_t>(e.id)]) {
      const VertexId a = out.anchor[i];
      if (tail == a) {
        tail = out.b_vertex[i];
      } else if (head == a) {
        head = out.b_vertex[i];
      } else {
        throw DefectError("pair splitting: anchor already replaced on edge " + std::to_string(e.id));
      }
    }
    out.h.add_edge(tail, head);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.connector.push_back(out.h.add_edge(out.anchor[i], out.b_vertex[i]));
  }

  for (VertexId b : out.b_vertex) {
    if (out.h.degree(b) != 3) throw DefectError("pair splitting: b(p) does not have degree 3");
  }
  if (!bridges(out.h).empty()) throw DefectError("pair splitting: auxiliary graph has a bridge");
  if (!contraction_matches(g, out)) throw DefectError("pair splitting: contraction does not recover G");
  return out;
}

bool contraction_matches(const Multigraph& g, const SplitMap& split) {
  if (split.h.edge_count() != g.edge_count() + static_cast<int>(split.connector.size())) return false;
  for (const Edge& e : g.edges()) {
    const Edge& he = split.h.edge(e.id);
    if (split.contract(he.tail) != e.tail || split.contract(he.head) != e.head) return false;
  }
  for (std::size_t i = 0; i < split.connector.size(); ++i) {
    const Edge& c = split.h.edge(split.connector[i]);
    if (split.contract(c.tail) != split.contract(c.head)) return false;
  }
  return true;
}

namespace {

/// Backtracking state for the co-tree search.
class CotreeSearch {
 public:
  explicit CotreeSearch(const Multigraph& g) : g_(g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    parent_edge_.assign(n, -1);
    depth_.assign(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    std::deque<VertexId> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.edge(e).other(v);
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        parent_edge_[static_cast<std::size_t>(w)] = e;
        depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(v)] + 1;
        in_tree[static_cast<std::size_t>(e)] = 1;
        queue.push_back(w);
      }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!in_tree[static_cast<std::size_t>(e)]) cotree_.push_back(e);
    }
    last_.assign(static_cast<std::size_t>(g.edge_count()), -1);
    for (std::size_t j = 0; j < cotree_.size(); ++j) {
      cycle_.push_back(fundamental_cycle(cotree_[j]));
      for (const auto& [t, sign] : cycle_.back()) last_[static_cast<std::size_t>(t)] = static_cast<int>(j);
    }
    for (std::size_t j = 0; j < cotree_.size(); ++j) closing_.emplace_back();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (in_tree[static_cast<std::size_t>(e)]) {
        if (last_[static_cast<std::size_t>(e)] < 0) throw DefectError("co-tree search: tree edge on no cycle");
        closing_[static_cast<std::size_t>(last_[static_cast<std::size_t>(e)])].push_back(e);
      }
    }
    sum_.assign(static_cast<std::size_t>(g.edge_count()), 0);
  }

  bool run(long long node_limit) {
    nodes_left_ = node_limit;
    return descend(0);
  }

  Flow result() const {
    Flow phi(Group::z6(), g_.edge_count());
    for (EdgeId e = 0; e < g_.edge_count(); ++e) phi.set(e, {sum_[static_cast<std::size_t>(e)], 0});
    return phi;
  }

 private:
  // Tree edges of the cycle closed by c, with the sign of their traversal
  // when c is traversed tail -> head. The entry for c itself carries +1.
  std::vector<std::pair<EdgeId, int>> fundamental_cycle(EdgeId c) {
    std::vector<std::pair<EdgeId, int>> out{{c, 1}};
    VertexId up = g_.edge(c).head;   // walk from head upwards
    VertexId down = g_.edge(c).tail;  // path from LCA down to tail
    std::vector<std::pair<EdgeId, int>> tail_side;
    while (up != down) {
      if (depth_[static_cast<std::size_t>(up)] >= depth_[static_cast<std::size_t>(down)]) {
        const EdgeId pe = parent_edge_[static_cast<std::size_t>(up)];
        out.emplace_back(pe, g_.edge(pe).tail == up ? 1 : -1);
        up = g_.edge(pe).other(up);
      } else {
        const EdgeId pe = parent_edge_[static_cast<std::size_t>(down)];
        tail_side.emplace_back(pe, g_.edge(pe).head == down ? 1 : -1);
        down = g_.edge(pe).other(down);
      }
    }
    out.insert(out.end(), tail_side.rbegin(), tail_side.rend());
    return out;
  }

  void apply(std::size_t j, int x) {
    for (const auto& [t, sign] : cycle_[j]) {
      auto& s = sum_[static_cast<std::size_t>(t)];
      s = mod_floor(s + sign * x, 6);
    }
  }

  bool descend(std::size_t j) {
    if (j == cotree_.size()) return true;
    for (int x = 1; x <= 5; ++x) {
      if (--nodes_left_ < 0) return false;
      apply(j, x);
      bool ok = true;
      for (EdgeId t : closing_[j]) {
        if (sum_[static_cast<std::size_t>(t)] == 0) {
          ok = false;
          break;
        }
      }
      if (ok && descend(j + 1)) return true;
      apply(j, -x);
      if (nodes_left_ < 0) return false;
    }
    return false;
  }

  const Multigraph& g_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> depth_;
  std::vector<EdgeId> cotree_;
  std::vector<std::vector<std::pair<EdgeId, int>>> cycle_;
  std::vector<std::vector<EdgeId>> closing_;
  std::vector<int> last_;
  std::vector<std::int64_t> sum_;
  long long nodes_left_ = 0;
};

}  // namespace

Flow nowhere_zero_z6(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("nowhere_zero_z6: graph is disconnected");
  if (const auto b = bridges(g); !b.empty()) {
    throw PreconditionError("nowhere_zero_z6: bridge " + std::to_string(b.front()) +
                            " admits no nowhere-zero flow");
  }
  CotreeSearch search(g);
  if (!search.run(200'000'000)) throw DefectError("nowhere_zero_z6: search exhausted without a flow");
  Flow phi = search.result();
  const FlowReport report = verify_flow(g, phi);
  if (!report.conserved || !report.nowhere_zero) throw DefectError("nowhere_zero_z6: result failed verification");
  return phi;
}

Flow flow_avoiding_confluence(const Multigraph& g, const PairSet& pairs) {
  const SplitMap split = build_pair_splitting(g, pairs);
  const Flow on_h = nowhere_zero_z6(split.h);
  Flow phi(Group::z6(), g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) phi.set(e, on_h.value(e));

  const FlowReport report = verify_flow(g, phi);
  if (!report.conserved || !report.nowhere_zero) {
    throw DefectError("flow_avoiding_confluence: contracted flow failed verification");
  }
  for (const AdjacentPair& p : pairs) {
    if (pair_relation(g, phi, p).confluent) {
      throw DefectError("flow_avoiding_confluence: pair " + std::to_string(p.e) + "," + std::to_string(p.f) +
                        " is confluent");
    }
  }
  return phi;
}

}  // namespace richflow
