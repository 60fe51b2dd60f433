#include "doctest.h"
#include "support.hpp"

#include "richflow/building_phi.hpp"
#include "richflow/errors.hpp"
#include "richflow/rich_flow.hpp"

using namespace richflow;

TEST_CASE("splitting two K4 copies") {
  const Multigraph g = catalog::k4_chain(2);
  const auto split = split_on_two_cut(g);
  REQUIRE(split.has_value());
  for (const Multigraph* side : {&split->g1, &split->g2}) {
    CHECK(side->vertex_count() == 4);
    CHECK(side->edge_count() == 7);
    CHECK(edge_connectivity_at_least(*side, 3));
  }
  CHECK(split->g1_edge_to_parent[static_cast<std::size_t>(split->g1_added)] == -1);
  CHECK(split->g2_edge_to_parent[static_cast<std::size_t>(split->g2_added)] == -1);
  const Edge& a1 = split->g1.edge(split->g1_added);
  CHECK(split->g1_vertex_to_parent[static_cast<std::size_t>(a1.tail)] == split->u1);
  CHECK(split->g1_vertex_to_parent[static_cast<std::size_t>(a1.head)] == split->u2);
  const Edge& e1 = g.edge(split->cut_e1);
  CHECK(e1.incident(split->u1));
  CHECK(e1.incident(split->v1));
}

TEST_CASE("splitting needs a 2-edge-cut and admissibility") {
  CHECK_FALSE(split_on_two_cut(catalog::complete(4)).has_value());
  CHECK_THROWS_AS(split_on_two_cut(catalog::cycle(4)), NotAdmissibleError);
}

TEST_CASE("rich_mod_flow examples") {
  const Multigraph k4 = catalog::complete(4);
  SynthesisTrace trace;
  const Flow f = rich_mod_flow(k4, &trace);
  CHECK(check_mod_flow_bullets(k4, f).all());
  CHECK(trace.calls.size() == 1);
  CHECK(trace.max_split_depth == 0);

  const Multigraph dt = catalog::multi_triangle(2);
  SynthesisTrace dt_trace;
  const Flow fd = rich_mod_flow(dt, &dt_trace);
  CHECK(fd.group() == Group::zkxz2(19));
  CHECK(check_mod_flow_bullets(dt, fd).all());
  CHECK(dt_trace.calls.size() == 1);

  const Multigraph two = catalog::k4_chain(2);
  SynthesisTrace two_trace;
  const Flow ft = rich_mod_flow(two, &two_trace);
  CHECK(check_mod_flow_bullets(two, ft).all());
  CHECK(two_trace.max_split_depth == 1);
  const auto split = split_on_two_cut(two);
  REQUIRE(split.has_value());
  const Group& group = ft.group();
  const Element across1 = oriented_out_of(two, group, split->cut_e1, split->u1, ft.value(split->cut_e1));
  const Element across2 = oriented_out_of(two, group, split->cut_e2, split->v2, ft.value(split->cut_e2));
  CHECK(group.equal(across1, across2));
}

TEST_CASE("deeper recursion") {
  const Multigraph g = catalog::k4_chain(3);
  SynthesisTrace trace;
  const Flow f = rich_mod_flow(g, &trace);
  CHECK(trace.max_split_depth >= 2);
  CHECK(check_mod_flow_bullets(g, f).all());
}

TEST_CASE("synthesis examples") {
  CHECK(rich_flow_bound(3) == 347);
  const Multigraph t3 = catalog::theta(3);
  const RichFlowCertificate c = synthesize_rich_flow(t3);
  CHECK(c.delta == 3);
  CHECK(is_rich(t3, c.flow));
  CHECK(c.max_abs <= 346);
  CHECK(c.flow.group() == Group::integer(c.bound));

  const Multigraph dt = catalog::multi_triangle(2);
  const RichFlowCertificate d = synthesize_rich_flow(dt);
  CHECK(d.delta == 4);
  CHECK(d.checks.adjacent_abs_distinct);
  CHECK(is_rich(dt, d.flow));
  CHECK(d.max_abs <= 610);

  CHECK_THROWS_AS(synthesize_rich_flow(catalog::cycle(4)), NotAdmissibleError);
  CHECK_THROWS_AS(synthesize_rich_flow(catalog::bridged_triangles()), NotAdmissibleError);
}

TEST_CASE("certificate is the weighted sum of the lifts") {
  const Multigraph g = catalog::petersen();
  const RichFlowCertificate c = synthesize_rich_flow(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(c.flow.value(e).first ==
          c.phi3.value(e).first + 11 * c.phi2.value(e).first + 33 * c.phi1.value(e).first);
  }
  for (const AdjacentPair& p : c.confluent_pairs) CHECK_FALSE(pair_relation(g, c.z6_flow, p).confluent);
}

TEST_CASE("property: synthesis on random admissible graphs and relabelings") {
  rftest::Rng rng(60221);
  for (int iter = 0; iter < 60; ++iter) {
    const Multigraph g = rftest::random_admissible(rng, 8, 6);
    const Multigraph h = rftest::random_relabel(rng, g);
    CAPTURE(format_multigraph(g));
    for (const Multigraph* x : {&g, &h}) {
      const RichFlowCertificate c = synthesize_rich_flow(*x);
      CHECK(is_rich(*x, c.flow));
      CHECK(c.max_abs <= rich_flow_bound(c.delta) - 1);
      CHECK(check_mod_flow_bullets(*x, c.mod_flow).all());
    }
  }
}
