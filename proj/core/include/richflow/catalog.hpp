#pragma once

#include <string>
#include <vector>

#include "richflow/multigraph.hpp"

namespace richflow::catalog {

/// Two vertices joined by k parallel edges (T3 for k = 3).
Multigraph theta(int k);
/// Triangle with every side replaced by k parallel edges (DT for k = 2).
Multigraph multi_triangle(int k);
Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph cycle(int n);
/// Triangular prism (circular ladder on 6 vertices).
Multigraph prism();
/// Moebius ladder on 8 vertices.
Multigraph wagner();
Multigraph petersen();
/// `count` copies of K4 in a row, consecutive copies joined by two
/// vertex-disjoint edges.
Multigraph k4_chain(int count);
/// Two triangles sharing one vertex.
Multigraph bowtie();
/// Two triangles joined by a single edge.
Multigraph bridged_triangles();
/// Triangle with one side doubled.
Multigraph doubled_edge_triangle();

/// Named graphs above under their short names ("T3", "DT", "K4", "K33",
/// "prism", "wagner", "petersen", "two-K4", "K4-chain3", "C4", "C5",
/// "bowtie", "bridge", "doubled-edge-triangle").
std::vector<std::pair<std::string, Multigraph>> named_graphs();

}  // namespace richflow::catalog
