#include "richflow/flow.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "richflow/errors.hpp"

namespace richflow {

Flow::Flow(Group group, int edge_count) : group_(group), values_(static_cast<std::size_t>(edge_count)) {}

Element oriented_into(const Multigraph& g, const Group& group, EdgeId e, VertexId v, Element value) {
  const Edge& ed = g.edge(e);
  if (!ed.incident(v)) throw PreconditionError("oriented_into: vertex not on edge");
  return ed.head == v ? group.normalize(value) : group.negate(value);
}

Element oriented_out_of(const Multigraph& g, const Group& group, EdgeId e, VertexId v, Element value) {
  const Edge& ed = g.edge(e);
  if (!ed.incident(v)) throw PreconditionError("oriented_out_of: vertex not on edge");
  return ed.tail == v ? group.normalize(value) : group.negate(value);
}

void add_along_circuit(Flow& phi, const Multigraph& g, const Circuit& d, Element a) {
  if (!is_valid_circuit(g, d)) throw PreconditionError("add_along_circuit: not a circuit of the graph");
  const Group& group = phi.group();
  for (std::size_t i = 0; i < d.size(); ++i) {
    phi.add_to(d.edges[i], group.scale(d.traversal_sign(g, i), a));
  }
}

Flow send_through_circuit(const Multigraph& g, const Circuit& d, const Group& group, Element a) {
  Flow phi(group, g.edge_count());
  add_along_circuit(phi, g, d, a);
  return phi;
}

Flow linear_combine(const std::vector<FlowTerm>& terms) {
  if (terms.empty()) throw PreconditionError("linear_combine: no terms");
  const Flow& first = terms.front().flow;
  Group group = first.group();
  for (const auto& t : terms) {
    if (t.flow.edge_count() != first.edge_count()) throw PreconditionError("linear_combine: graph mismatch");
    if (!t.flow.group().compatible_with(group)) throw PreconditionError("linear_combine: group mismatch");
  }
  if (group.is_integer()) {
    std::int64_t reach = 0;
    for (const auto& t : terms) reach += std::llabs(t.coefficient) * (t.flow.group().modulus() - 1);
    group = Group::integer(reach + 1);
  }
  Flow out(group, first.edge_count());
  for (const auto& t : terms) {
    for (EdgeId e = 0; e < out.edge_count(); ++e) {
      out.add_to(e, group.scale(t.coefficient, t.flow.value(e)));
    }
  }
  return out;
}

Flow product_flows(const Flow& zk_flow, const Flow& z2_flow) {
  const auto ka = zk_flow.group().kind();
  if (ka != GroupKind::zk && ka != GroupKind::z6) throw PreconditionError("product_flows: first factor must be Zk");
  if (z2_flow.group().kind() != GroupKind::z2) throw PreconditionError("product_flows: second factor must be Z2");
  if (zk_flow.edge_count() != z2_flow.edge_count()) throw PreconditionError("product_flows: graph mismatch");
  Flow out(Group::zkxz2(zk_flow.group().modulus()), zk_flow.edge_count());
  for (EdgeId e = 0; e < out.edge_count(); ++e) {
    out.set(e, {zk_flow.value(e).first, z2_flow.value(e).first});
  }
  return out;
}

Flow first_coordinate(const Flow& product) {
  if (!product.group().is_product()) throw PreconditionError("first_coordinate: not a Zk x Z2 flow");
  Flow out(Group::zk(product.group().modulus()), product.edge_count());
  for (EdgeId e = 0; e < out.edge_count(); ++e) out.set(e, {product.value(e).first, 0});
  return out;
}

Flow second_coordinate(const Flow& product) {
  if (!product.group().is_product()) throw PreconditionError("second_coordinate: not a Zk x Z2 flow");
  Flow out(Group::z2(), product.edge_count());
  for (EdgeId e = 0; e < out.edge_count(); ++e) out.set(e, {product.value(e).second, 0});
  return out;
}

AdjacentPair make_adjacent_pair(const Multigraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw PreconditionError("adjacent pair needs two distinct edges");
  if (e > f) std::swap(e, f);
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  VertexId shared = -1;
  for (VertexId v : {a.tail, a.head}) {
    if (b.incident(v) && (shared < 0 || v < shared)) shared = v;
  }
  if (shared < 0) throw PreconditionError("edges are not adjacent");
  return {e, f, shared};
}

std::vector<AdjacentPair> adjacent_pairs(const Multigraph& g) {
  std::vector<AdjacentPair> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const AdjacentPair p = make_adjacent_pair(g, inc[i], inc[j]);
        if (p.shared == v) out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PairRelation relation_at(const Multigraph& g, const Flow& phi, EdgeId e, EdgeId f, VertexId v) {
  const Group& group = phi.group();
  const Element in_e = oriented_into(g, group, e, v, phi.value(e));
  const Element out_f = oriented_out_of(g, group, f, v, phi.value(f));
  return {group.equal(in_e, out_f), group.equal(in_e, group.negate(out_f))};
}

}  // namespace

PairRelation pair_relation(const Multigraph& g, const Flow& phi, const AdjacentPair& p) {
  const Edge& a = g.edge(p.e);
  const Edge& b = g.edge(p.f);
  if (p.e == p.f || !a.incident(p.shared) || !b.incident(p.shared)) {
    throw PreconditionError("pair_relation: not an adjacent pair");
  }
  const PairRelation r = relation_at(g, phi, p.e, p.f, p.shared);
  if (a.parallel_to(b)) {
    const PairRelation other = relation_at(g, phi, p.e, p.f, a.other(p.shared));
    if (other.confluent != r.confluent || other.contrafluent != r.contrafluent) {
      throw DefectError("pair_relation differs between the two shared vertices");
    }
  }
  return r;
}

bool strongly_intersecting(const Multigraph& g, const AdjacentPair& p1, const AdjacentPair& p2) {
  auto same_set = [](const AdjacentPair& a, const AdjacentPair& b) {
    return (a.e == b.e && a.f == b.f) || (a.e == b.f && a.f == b.e);
  };
  if (same_set(p1, p2)) return false;
  std::vector<EdgeId> all{p1.e, p1.f, p2.e, p2.f};
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() != 3) return false;
  const Edge& x = g.edge(all[0]);
  for (VertexId v : {x.tail, x.head}) {
    if (g.edge(all[1]).incident(v) && g.edge(all[2]).incident(v)) return true;
  }
  return false;
}

FlowReport verify_flow(const Multigraph& g, const Flow& phi) {
  if (phi.edge_count() != g.edge_count()) throw PreconditionError("verify_flow: edge count mismatch");
  const Group& group = phi.group();
  FlowReport r;
  std::vector<Element> net(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    const Element x = phi.value(e.id);
    auto& out = net[static_cast<std::size_t>(e.tail)];
    auto& in = net[static_cast<std::size_t>(e.head)];
    out = group.add(out, x);
    in = group.add(in, group.negate(x));
    if (group.is_zero(x)) {
      r.nowhere_zero = false;
      r.zero_edges.push_back(e.id);
    }
    if (group.is_integer() && std::llabs(x.first) >= group.modulus()) {
      r.within_bound = false;
      r.out_of_bound_edges.push_back(e.id);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!group.is_zero(net[static_cast<std::size_t>(v)])) {
      r.conserved = false;
      r.unbalanced_vertices.push_back(v);
    }
  }
  return r;
}

std::vector<EdgeId> chain_edges(const Flow& phi) {
  if (!phi.group().is_product()) throw PreconditionError("chain_edges: needs a Zk x Z2 flow");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < phi.edge_count(); ++e) {
    if (phi.value(e).second == 1) out.push_back(e);
  }
  return out;
}

EdgeMask chain_edge_mask(const Flow& phi) {
  EdgeMask mask(static_cast<std::size_t>(phi.edge_count()), 0);
  for (EdgeId e : chain_edges(phi)) mask[static_cast<std::size_t>(e)] = 1;
  return mask;
}

RichnessReport richness_report(const Multigraph& g, const Flow& phi) {
  RichnessReport r;
  r.integer_group = phi.group().is_integer();
  const FlowReport base = verify_flow(g, phi);
  r.conserved = base.conserved;
  r.nowhere_zero = base.nowhere_zero;
  r.bound_ok = r.integer_group && base.within_bound;
  for (const Element& x : phi.values()) r.max_abs = std::max<std::int64_t>(r.max_abs, std::llabs(x.first));
  r.adjacent_abs_distinct = true;
  for (const AdjacentPair& p : adjacent_pairs(g)) {
    if (std::llabs(phi.value(p.e).first) == std::llabs(phi.value(p.f).first)) {
      r.adjacent_abs_distinct = false;
      r.clash = p;
      break;
    }
  }
  return r;
}

bool is_rich(const Multigraph& g, const Flow& phi) { return richness_report(g, phi).rich(); }

std::pair<Multigraph, Flow> reorient_edge(const Multigraph& g, const Flow& phi, EdgeId e) {
  Flow out = phi;
  out.set(e, phi.group().negate(phi.value(e)));
  return {g.with_edge_reversed(e), std::move(out)};
}

std::string format_element(const Group& group, Element x) {
  const Element n = group.normalize(x);
  std::ostringstream out;
  if (group.is_product()) {
    out << '(' << n.first << ',' << n.second << ')';
  } else {
    out << n.first;
  }
  return out.str();
}

}  // namespace richflow
