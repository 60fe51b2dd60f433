#include "doctest.h"
#include "support.hpp"

#include "richflow/errors.hpp"

using namespace richflow;

TEST_CASE("parse theta graph") {
  const Multigraph g = parse_multigraph_string("2 3\n0 1\n0 1\n0 1");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  for (const Edge& e : g.edges()) {
    CHECK(e.tail == 0);
    CHECK(e.head == 1);
  }
  CHECK(g.max_degree() == 3);
  CHECK(g.edge(0).parallel_to(g.edge(2)));
}

TEST_CASE("reference orientation follows the listed order") {
  const Multigraph g = parse_multigraph_string("3 2\n2 0\n1 2\n");
  CHECK(g.edge(0).tail == 2);
  CHECK(g.edge(0).head == 0);
  CHECK(g.edge(1).tail == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_multigraph_string("1 1\n0 0"), ParseError);
  CHECK_THROWS_AS(parse_multigraph_string("3 2\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_multigraph_string("3 1\n0 3"), ParseError);
  CHECK_THROWS_AS(parse_multigraph_string("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_multigraph_string(""), ParseError);
  CHECK_THROWS_AS(parse_multigraph_string("2 1\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_multigraph_string("2 1\n0 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_multigraph_string("2 -1\n"), ParseError);
}

TEST_CASE("comments, blank lines and CRLF are accepted") {
  const Multigraph g = parse_multigraph_string("# a comment\r\n\r\n3 3\r\n0 1\r\n# inner\r\n1 2\r\n2 0\r\n");
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(2).tail == 2);
}

TEST_CASE("format round trip") {
  for (const auto& [name, g] : catalog::named_graphs()) {
    CAPTURE(name);
    CHECK(parse_multigraph_string(format_multigraph(g)) == g);
  }
}

TEST_CASE("collections split on blank lines and take names from comments") {
  const auto list = parse_multigraph_collection("# header only\n\n# first\n2 3\n0 1\n0 1\n0 1\n\n\n3 3\n0 1\n1 2\n2 0\n");
  REQUIRE(list.size() == 2);
  CHECK(list[0].name == "first");
  CHECK(list[0].graph.edge_count() == 3);
  CHECK(list[1].name == "#1");
  CHECK(list[1].graph.vertex_count() == 3);
  CHECK_THROWS_AS(parse_multigraph_collection("2 1\n0 1\n\n1 1\n0 0\n"), ParseError);
}

TEST_CASE("loops and bad endpoints are rejected on construction") {
  Multigraph g(2);
  CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 2), PreconditionError);
  CHECK(g.add_vertex() == 2);
  CHECK(g.add_edge(0, 2) == 0);
}

TEST_CASE("incidence lists stay in id order") {
  const Multigraph g = catalog::petersen();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    CHECK(std::is_sorted(inc.begin(), inc.end()));
    CHECK(g.degree(v) == 3);
  }
}

TEST_CASE("subgraphs map back to the parent") {
  const Multigraph g = catalog::complete(4);
  EdgeMask keep{1, 0, 1, 0, 1, 0};
  const EdgeSubgraph sub = edge_subgraph(g, keep);
  CHECK(sub.graph.vertex_count() == 4);
  REQUIRE(sub.graph.edge_count() == 3);
  CHECK(sub.to_parent == std::vector<EdgeId>{0, 2, 4});
  CHECK(sub.graph.edge(1).tail == g.edge(2).tail);

  const InducedSubgraph ind = induced_subgraph(g, VertexMask{1, 1, 0, 1});
  CHECK(ind.graph.vertex_count() == 3);
  CHECK(ind.graph.edge_count() == 3);
  for (EdgeId e = 0; e < ind.graph.edge_count(); ++e) {
    const Edge& local = ind.graph.edge(e);
    const Edge& parent = g.edge(ind.to_parent_edge[static_cast<std::size_t>(e)]);
    CHECK(ind.to_parent_vertex[static_cast<std::size_t>(local.tail)] == parent.tail);
    CHECK(ind.to_parent_vertex[static_cast<std::size_t>(local.head)] == parent.head);
  }
}

TEST_CASE("reversing an edge swaps its ends only") {
  const Multigraph g = catalog::complete(4);
  const Multigraph h = g.with_edge_reversed(3);
  CHECK(h.edge(3).tail == g.edge(3).head);
  CHECK(h.edge(3).head == g.edge(3).tail);
  CHECK(h.edge(2).tail == g.edge(2).tail);
  CHECK_FALSE(h == g);
  CHECK(h.with_edge_reversed(3) == g);
}
