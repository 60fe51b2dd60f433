#include "richflow/catalog.hpp"

#include "richflow/errors.hpp"

namespace richflow::catalog {

Multigraph theta(int k) {
  Multigraph g(2);
  for (int i = 0; i < k; ++i) g.add_edge(0, 1);
  return g;
}

Multigraph multi_triangle(int k) {
  Multigraph g(3);
  for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
    for (int i = 0; i < k; ++i) g.add_edge(a, b);
  }
  return g;
}

Multigraph complete(int n) {
  Multigraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

Multigraph complete_bipartite(int a, int b) {
  Multigraph g(a + b);
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) g.add_edge(x, a + y);
  }
  return g;
}

Multigraph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph prism() {
  Multigraph g(6);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
    g.add_edge(i, 3 + i);
  }
  return g;
}

Multigraph wagner() {
  Multigraph g(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

Multigraph petersen() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Multigraph k4_chain(int count) {
  if (count < 1) throw PreconditionError("k4_chain needs at least one copy");
  Multigraph g(4 * count);
  for (int c = 0; c < count; ++c) {
    const int o = 4 * c;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) g.add_edge(o + a, o + b);
    }
    if (c > 0) {
      g.add_edge(o - 2, o);
      g.add_edge(o - 1, o + 1);
    }
  }
  return g;
}

Multigraph bowtie() {
  Multigraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  return g;
}

Multigraph bridged_triangles() {
  Multigraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  g.add_edge(2, 3);
  return g;
}

Multigraph doubled_edge_triangle() {
  Multigraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

std::vector<std::pair<std::string, Multigraph>> named_graphs() {
  return {
      {"T3", theta(3)},
      {"DT", multi_triangle(2)},
      {"K4", complete(4)},
      {"K33", complete_bipartite(3, 3)},
      {"prism", prism()},
      {"wagner", wagner()},
      {"petersen", petersen()},
      {"two-K4", k4_chain(2)},
      {"K4-chain3", k4_chain(3)},
      {"C4", cycle(4)},
      {"C5", cycle(5)},
      {"bowtie", bowtie()},
      {"bridge", bridged_triangles()},
      {"doubled-edge-triangle", doubled_edge_triangle()},
  };
}

}  // namespace richflow::catalog
