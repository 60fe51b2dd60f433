#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "richflow/catalog.hpp"
#include "richflow/circuits.hpp"
#include "richflow/connectivity.hpp"
#include "richflow/flow.hpp"
#include "richflow/multigraph.hpp"
#include "richflow/seymour.hpp"

namespace rftest {

using namespace richflow;
using Rng = std::mt19937_64;

inline std::string corpus_dir() { return RICHFLOW_CORPUS_DIR; }

/// Named *.graph files plus every member of *.graphs collections, in path
/// order. Names are "file" or "file#member".
inline std::vector<NamedGraph> corpus() {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> out;
  for (const fs::path& f : files) {
    if (f.extension() == ".graph") {
      out.push_back({f.stem().string(), read_multigraph_file(f.string())});
    } else if (f.extension() == ".graphs") {
      for (NamedGraph& g : read_multigraph_collection(f.string())) {
        out.push_back({f.stem().string() + "#" + g.name, std::move(g.graph)});
      }
    }
  }
  return out;
}

inline std::vector<NamedGraph> admissible_corpus() {
  std::vector<NamedGraph> out;
  for (NamedGraph& g : corpus()) {
    if (g.graph.edge_count() > 0 && is_rich_flow_admissible(g.graph).admissible) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<NamedGraph> three_connected_corpus() {
  std::vector<NamedGraph> out;
  for (NamedGraph& g : corpus()) {
    if (g.graph.edge_count() > 0 && edge_connectivity_at_least(g.graph, 3)) out.push_back(std::move(g));
  }
  return out;
}

inline Multigraph random_multigraph(Rng& rng, int n, int m) {
  Multigraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.edge_count() < m) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

/// Random graph whose vertices all have degree >= 3, rejected until it is
/// rich flow admissible.
inline Multigraph random_admissible(Rng& rng, int max_n, int extra_edges) {
  std::uniform_int_distribution<int> size(2, max_n);
  for (;;) {
    const int n = size(rng);
    Multigraph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    auto add_random_from = [&](int a) {
      int b = pick(rng);
      while (b == a) b = pick(rng);
      g.add_edge(a, b);
    };
    for (int v = 0; v < n; ++v) {
      while (g.degree(v) < 3) add_random_from(v);
    }
    std::uniform_int_distribution<int> extra(0, extra_edges);
    for (int i = extra(rng); i > 0; --i) add_random_from(pick(rng));
    if (is_rich_flow_admissible(g).admissible) return g;
  }
}

/// Same graph with vertices renamed by `vperm`, edges listed in `eorder`
/// order, and each edge reversed where `flip` is set.
inline Multigraph relabel(const Multigraph& g, const std::vector<int>& vperm, const std::vector<EdgeId>& eorder,
                          const std::vector<char>& flip) {
  Multigraph h(g.vertex_count());
  for (std::size_t i = 0; i < eorder.size(); ++i) {
    const Edge& e = g.edge(eorder[i]);
    const int a = vperm[static_cast<std::size_t>(e.tail)];
    const int b = vperm[static_cast<std::size_t>(e.head)];
    if (flip[i]) {
      h.add_edge(b, a);
    } else {
      h.add_edge(a, b);
    }
  }
  return h;
}

inline Multigraph random_relabel(Rng& rng, const Multigraph& g) {
  std::vector<int> vperm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> flip(order.size());
  std::bernoulli_distribution coin(0.5);
  for (auto& f : flip) f = coin(rng) ? 1 : 0;
  return relabel(g, vperm, order, flip);
}

/// Sum of random multiples sent around circuits through random edges.
inline Flow random_circuit_sum(Rng& rng, const Multigraph& g, const Group& group, int circuits) {
  Flow phi(group, g.edge_count());
  const auto bridge_list = bridges(g);
  std::uniform_int_distribution<EdgeId> pick_edge(0, g.edge_count() - 1);
  std::uniform_int_distribution<std::int64_t> pick_value(0, group.modulus() - 1);
  for (int i = 0; i < circuits; ++i) {
    const EdgeId e = pick_edge(rng);
    if (std::find(bridge_list.begin(), bridge_list.end(), e) != bridge_list.end()) continue;
    add_along_circuit(phi, g, find_circuit_through(g, e), Element{pick_value(rng), 0});
  }
  return phi;
}

/// Connectivity after deleting the given edges (plain union-find).
inline bool connected_without(const Multigraph& g, const std::set<EdgeId>& removed) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (!removed.count(e.id)) parent[static_cast<std::size_t>(find(e.tail))] = find(e.head);
  }
  int roots = 0;
  for (int v = 0; v < g.vertex_count(); ++v) roots += find(v) == v ? 1 : 0;
  return roots <= 1;
}

inline std::vector<EdgeId> brute_bridges(const Multigraph& g) {
  std::vector<EdgeId> out;
  const bool base = connected_without(g, {});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (base && !connected_without(g, {e})) out.push_back(e);
  }
  return out;
}

inline std::vector<std::pair<EdgeId, EdgeId>> brute_two_cuts(const Multigraph& g) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  const auto br = brute_bridges(g);
  auto is_bridge = [&](EdgeId e) { return std::find(br.begin(), br.end(), e) != br.end(); };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      if (!is_bridge(e) && !is_bridge(f) && !connected_without(g, {e, f})) out.emplace_back(e, f);
    }
  }
  return out;
}

/// Rich flow admissibility straight from the definition.
inline bool brute_admissible(const Multigraph& g) {
  if (!connected_without(g, {}) || !brute_bridges(g).empty()) return false;
  for (const auto& [e, f] : brute_two_cuts(g)) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    if (a.incident(b.tail) || a.incident(b.head)) return false;
  }
  return true;
}

}  // namespace rftest

namespace rftest {

/// Random pairs of adjacent edges, kept only while the set stays valid:
/// distinct, no two strongly intersecting, no edge in three pairs.
inline richflow::PairSet random_pair_set(Rng& rng, const Multigraph& g, int attempts) {
  richflow::PairSet out;
  const auto all = richflow::adjacent_pairs(g);
  if (all.empty()) return out;
  std::vector<int> uses(static_cast<std::size_t>(g.edge_count()), 0);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int a = 0; a < attempts; ++a) {
    const richflow::AdjacentPair p = all[pick(rng)];
    if (std::find(out.begin(), out.end(), p) != out.end()) continue;
    if (uses[static_cast<std::size_t>(p.e)] >= 2 || uses[static_cast<std::size_t>(p.f)] >= 2) continue;
    bool clash = false;
    for (const auto& q : out) clash = clash || richflow::strongly_intersecting(g, p, q);
    if (clash) continue;
    out.push_back(p);
    ++uses[static_cast<std::size_t>(p.e)];
    ++uses[static_cast<std::size_t>(p.f)];
  }
  return out;
}

}  // namespace rftest
