#include "doctest.h"
#include "support.hpp"

#include "richflow/errors.hpp"
#include "richflow/seymour.hpp"

using namespace richflow;

TEST_CASE("splitting K4 at one pair") {
  const Multigraph k4 = catalog::complete(4);
  const PairSet pairs{make_adjacent_pair(k4, 0, 1)};
  const SplitMap split = build_pair_splitting(k4, pairs);
  CHECK(split.h.vertex_count() == 5);
  CHECK(split.h.edge_count() == 7);
  CHECK(split.anchor[0] == 0);
  CHECK(split.h.degree(split.b_vertex[0]) == 3);
  CHECK(bridges(split.h).empty());
  CHECK(contraction_matches(k4, split));
}

TEST_CASE("parallel pairs anchor at the lower vertex") {
  const Multigraph t3 = catalog::theta(3);
  const SplitMap split = build_pair_splitting(t3, {make_adjacent_pair(t3, 0, 2)});
  CHECK(split.anchor[0] == 0);
  CHECK(contraction_matches(t3, split));
}

TEST_CASE("an edge in two pairs moves both ends") {
  const Multigraph k4 = catalog::complete(4);
  // Edge 0 joins 0 and 1; pair it with 1 (0-2) at vertex 0 and with 3 (1-2) at vertex 1.
  const PairSet pairs{make_adjacent_pair(k4, 0, 1), make_adjacent_pair(k4, 0, 3)};
  CHECK(pairs[0].shared == 0);
  CHECK(pairs[1].shared == 1);
  const SplitMap split = build_pair_splitting(k4, pairs);
  const Edge& moved = split.h.edge(0);
  const std::vector<VertexId> ends{moved.tail, moved.head};
  CHECK(std::is_permutation(ends.begin(), ends.end(), std::vector<VertexId>{split.b_vertex[0], split.b_vertex[1]}.begin()));
  CHECK(contraction_matches(k4, split));
}

TEST_CASE("pair set preconditions") {
  const Multigraph k4 = catalog::complete(4);
  // Edges 0 (0-1), 1 (0-2), 2 (0-3) all meet at vertex 0.
  CHECK_THROWS_AS(validate_pair_set(k4, {make_adjacent_pair(k4, 0, 1), make_adjacent_pair(k4, 1, 2)}),
                  PreconditionError);
  CHECK_THROWS_AS(flow_avoiding_confluence(k4, {make_adjacent_pair(k4, 0, 1), make_adjacent_pair(k4, 1, 2)}),
                  PreconditionError);
  CHECK_THROWS_AS(validate_pair_set(k4, {make_adjacent_pair(k4, 0, 1), make_adjacent_pair(k4, 0, 1)}),
                  PreconditionError);
  CHECK_THROWS_AS(validate_pair_set(k4, {AdjacentPair{0, 5, 0}}), PreconditionError);
  CHECK_THROWS(build_pair_splitting(catalog::cycle(4), {}));
}

TEST_CASE("nowhere-zero Z6 flows") {
  const Multigraph c4 = catalog::cycle(4);
  const Flow cyc = nowhere_zero_z6(c4);
  CHECK(verify_flow(c4, cyc).nowhere_zero);
  CHECK(verify_flow(c4, cyc).conserved);
  for (EdgeId e = 0; e < 4; ++e) CHECK(cyc.value(e) == Element{1, 0});

  for (const auto& [name, g] : catalog::named_graphs()) {
    if (!edge_connectivity_at_least(g, 2)) continue;
    CAPTURE(name);
    const FlowReport r = verify_flow(g, nowhere_zero_z6(g));
    CHECK(r.conserved);
    CHECK(r.nowhere_zero);
  }
  CHECK_THROWS_AS(nowhere_zero_z6(catalog::bridged_triangles()), PreconditionError);
}

TEST_CASE("avoiding confluence") {
  const Multigraph k4 = catalog::complete(4);
  const Flow none = flow_avoiding_confluence(k4, {});
  CHECK(verify_flow(k4, none).nowhere_zero);
  const AdjacentPair p = make_adjacent_pair(k4, 0, 1);
  const Flow one = flow_avoiding_confluence(k4, {p});
  CHECK(verify_flow(k4, one).nowhere_zero);
  CHECK_FALSE(pair_relation(k4, one, p).confluent);
}

TEST_CASE("property: random pair sets on admissible graphs") {
  rftest::Rng rng(314159);
  for (int iter = 0; iter < 150; ++iter) {
    const Multigraph g = rftest::random_admissible(rng, 8, 6);
    const PairSet pairs = rftest::random_pair_set(rng, g, 12);
    CAPTURE(format_multigraph(g));
    validate_pair_set(g, pairs);
    const SplitMap split = build_pair_splitting(g, pairs);
    CHECK(bridges(split.h).empty());
    for (VertexId b : split.b_vertex) CHECK(split.h.degree(b) == 3);
    CHECK(contraction_matches(g, split));
    const Flow phi = flow_avoiding_confluence(g, pairs);
    const FlowReport r = verify_flow(g, phi);
    CHECK(r.conserved);
    CHECK(r.nowhere_zero);
    for (const AdjacentPair& p : pairs) CHECK_FALSE(pair_relation(g, phi, p).confluent);
  }
}
