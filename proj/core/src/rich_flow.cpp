#include "richflow/rich_flow.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"
#include "richflow/integer_lift.hpp"

namespace richflow {

namespace {

void require_admissible(const Multigraph& g) {
  const AdmissibilityVerdict verdict = is_rich_flow_admissible(g);
  if (!verdict.admissible) throw NotAdmissibleError(verdict);
  if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
}

struct Side {
  VertexMask vertices;
  std::tuple<int, int, EdgeId, EdgeId, VertexId> key;
};

}  // namespace

std::optional<TwoCutSplit> split_on_two_cut(const Multigraph& g) {
  require_admissible(g);
  if (edge_connectivity_at_least(g, 3)) return std::nullopt;

  std::optional<Side> best;
  std::pair<EdgeId, EdgeId> best_cut{-1, -1};
  for (const auto& [e1, e2] : enumerate_two_edge_cuts(g)) {
    EdgeMask keep(static_cast<std::size_t>(g.edge_count()), 1);
    keep[static_cast<std::size_t>(e1)] = 0;
    keep[static_cast<std::size_t>(e2)] = 0;
    const EdgeSubgraph rest = edge_subgraph(g, keep);
    int count = 0;
    const auto label = component_labels(rest.graph, &count);
    if (count != 2) throw DefectError("split_on_two_cut: cut does not leave two components");
    for (int side = 0; side < 2; ++side) {
      Side s;
      s.vertices.assign(static_cast<std::size_t>(g.vertex_count()), 0);
      int nv = 0;
      VertexId lowest = -1;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (label[static_cast<std::size_t>(v)] != side) continue;
        s.vertices[static_cast<std::size_t>(v)] = 1;
        ++nv;
        if (lowest < 0) lowest = v;
      }
      int ne = 0;
      for (const Edge& e : g.edges()) {
        if (s.vertices[static_cast<std::size_t>(e.tail)] && s.vertices[static_cast<std::size_t>(e.head)]) ++ne;
      }
      s.key = {ne, nv, e1, e2, lowest};
      if (!best || s.key < best->key) {
        best = s;
        best_cut = {e1, e2};
      }
    }
  }
  if (!best) throw DefectError("split_on_two_cut: no 2-edge-cut found");

  TwoCutSplit out;
  out.cut_e1 = best_cut.first;
  out.cut_e2 = best_cut.second;
  const VertexMask& in2 = best->vertices;
  auto ends = [&](EdgeId e) {
    const Edge& edge = g.edge(e);
    return in2[static_cast<std::size_t>(edge.head)] ? std::make_pair(edge.tail, edge.head)
                                                    : std::make_pair(edge.head, edge.tail);
  };
  std::tie(out.u1, out.v1) = ends(out.cut_e1);
  std::tie(out.u2, out.v2) = ends(out.cut_e2);
  if (out.u1 == out.u2 || out.v1 == out.v2) throw DefectError("split_on_two_cut: cut edges share a vertex");

  VertexMask in1(in2.size(), 0);
  for (std::size_t v = 0; v < in2.size(); ++v) in1[v] = in2[v] ? 0 : 1;

  auto build = [&](const VertexMask& mask, VertexId a, VertexId b, Multigraph& sub, std::vector<VertexId>& vmap,
                   std::vector<EdgeId>& emap, EdgeId& added) {
    InducedSubgraph ind = induced_subgraph(g, mask);
    sub = std::move(ind.graph);
    vmap = std::move(ind.to_parent_vertex);
    emap = std::move(ind.to_parent_edge);
    auto local = [&](VertexId v) {
      return static_cast<VertexId>(std::find(vmap.begin(), vmap.end(), v) - vmap.begin());
    };
    added = sub.add_edge(local(a), local(b));
    emap.push_back(-1);
  };
  build(in1, out.u1, out.u2, out.g1, out.g1_vertex_to_parent, out.g1_edge_to_parent, out.g1_added);
  build(in2, out.v1, out.v2, out.g2, out.g2_vertex_to_parent, out.g2_edge_to_parent, out.g2_added);

  if (!is_rich_flow_admissible(out.g1).admissible) throw DefectError("split_on_two_cut: G'1 is not admissible");
  if (!edge_connectivity_at_least(out.g2, 3)) throw DefectError("split_on_two_cut: G'2 is not 3-edge-connected");
  return out;
}

std::int64_t rich_flow_bound(int delta) { return 264 * static_cast<std::int64_t>(delta) - 445; }

namespace {

void record(SynthesisTrace* trace, int depth, const Multigraph& g, EdgeId e_star, bool against, Element target,
            const BuildingPhiResult& r) {
  if (!trace) return;
  PhiCall call;
  call.depth = depth;
  call.vertex_count = g.vertex_count();
  call.edge_count = g.edge_count();
  call.e_star = e_star;
  call.against_reference = against;
  call.target = target;
  call.tower = r.tower;
  call.diagnostics = r.diagnostics;
  trace->calls.push_back(std::move(call));
}

Flow mod_flow_rec(const Multigraph& g, int delta, int depth, SynthesisTrace* trace) {
  if (trace) trace->max_split_depth = std::max(trace->max_split_depth, depth);
  const auto split = split_on_two_cut(g);
  if (!split) {
    const Element target{1, 0};
    BuildingPhiResult r = building_phi(g, 0, false, target, delta);
    record(trace, depth, g, 0, false, target, r);
    return std::move(r.flow);
  }

  const Flow phi1 = mod_flow_rec(split->g1, delta, depth + 1, trace);
  const Element carried = phi1.value(split->g1_added);
  // v1v2 read from v2 to v1 plays the role of u1u2 read from u1 to u2.
  BuildingPhiResult r2 = building_phi(split->g2, split->g2_added, true, carried, delta);
  record(trace, depth, split->g2, split->g2_added, true, carried, r2);

  const Group& group = phi1.group();
  Flow phi(group, g.edge_count());
  for (EdgeId e = 0; e < split->g1.edge_count(); ++e) {
    const EdgeId parent = split->g1_edge_to_parent[static_cast<std::size_t>(e)];
    if (parent >= 0) phi.set(parent, phi1.value(e));
  }
  for (EdgeId e = 0; e < split->g2.edge_count(); ++e) {
    const EdgeId parent = split->g2_edge_to_parent[static_cast<std::size_t>(e)];
    if (parent >= 0) phi.set(parent, r2.flow.value(e));
  }
  const Edge& e1 = g.edge(split->cut_e1);
  const Edge& e2 = g.edge(split->cut_e2);
  phi.set(e1.id, e1.tail == split->u1 ? carried : group.negate(carried));
  phi.set(e2.id, e2.tail == split->v2 ? carried : group.negate(carried));

  const FlowReport report = verify_flow(g, phi);
  if (!report.conserved) throw DefectError("rich_mod_flow: glued flow is not conserved");
  const PairConditions bullets = check_mod_flow_bullets(g, phi);
  if (!bullets.all()) throw DefectError("rich_mod_flow: glued flow fails: " + bullets.violation);
  return phi;
}

}  // namespace

Flow rich_mod_flow(const Multigraph& g, SynthesisTrace* trace) {
  require_admissible(g);
  return mod_flow_rec(g, std::max(3, g.max_degree()), 0, trace);
}

RichFlowCertificate synthesize_rich_flow(const Multigraph& g, SynthesisTrace* trace) {
  require_admissible(g);
  const int delta = g.max_degree();
  Flow mod = rich_mod_flow(g, trace);

  PairSet confluent;
  for (const AdjacentPair& p : adjacent_pairs(g)) {
    if (pair_relation(g, mod, p).confluent) confluent.push_back(p);
  }
  Flow z6 = flow_avoiding_confluence(g, confluent);

  Flow phi1 = modular_to_integer(g, first_coordinate(mod));
  Flow phi2 = modular_to_integer(g, second_coordinate(mod));
  Flow phi3 = modular_to_integer(g, z6);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::int64_t a3 = std::llabs(phi3.value(e).first);
    if (a3 < 1 || a3 > 5) throw DefectError("synthesize_rich_flow: 6-flow value out of range");
    if (std::llabs(phi2.value(e).first) > 1) throw DefectError("synthesize_rich_flow: 2-flow value out of range");
  }

  Flow phi = linear_combine({{1, phi3}, {11, phi2}, {33, phi1}});
  const std::int64_t bound = rich_flow_bound(delta);
  if (phi.group().modulus() != bound) throw DefectError("synthesize_rich_flow: combined bound is not 264*Delta-445");

  RichnessReport checks = richness_report(g, phi);
  if (!checks.rich()) throw DefectError("synthesize_rich_flow: combined flow is not rich");
  if (checks.max_abs > bound - 1) throw DefectError("synthesize_rich_flow: value exceeds 264*Delta-446");

  return RichFlowCertificate{std::move(phi), delta, bound, checks.max_abs, checks, std::move(mod), std::move(confluent),
                             std::move(z6), std::move(phi1), std::move(phi2), std::move(phi3)};
}

}  // namespace richflow
