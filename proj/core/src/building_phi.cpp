#include "richflow/building_phi.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"

namespace richflow {

const char* to_string(PhiStage stage) {
  switch (stage) {
    case PhiStage::chord:
      return "chord";
    case PhiStage::vertex:
      return "vertex";
    case PhiStage::block_chain:
      return "block_chain";
    case PhiStage::final_circuit:
      return "final_circuit";
    case PhiStage::final_chain:
      return "final_chain";
  }
  return "?";
}

std::int64_t building_phi_modulus(int delta) { return 8 * static_cast<std::int64_t>(delta) - 13; }

PairConditions check_pair_conditions(const Multigraph& g, const Flow& phi, const EdgeMask& scope) {
  if (!phi.group().is_product()) throw PreconditionError("pair conditions need a Zk x Z2 flow");
  if (phi.edge_count() != g.edge_count() || scope.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("pair conditions: size mismatch");
  }
  PairConditions r;
  auto note = [&](const std::string& msg) {
    if (r.violation.empty()) r.violation = msg;
  };
  const Group& group = phi.group();

  r.nowhere_zero = true;
  EdgeMask chain(scope.size(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!scope[static_cast<std::size_t>(e)]) continue;
    const Element x = phi.value(e);
    if (group.is_zero(x)) {
      r.nowhere_zero = false;
      note("edge " + std::to_string(e) + " has value zero");
    }
    if (x.second != 0) chain[static_cast<std::size_t>(e)] = 1;
  }

  r.chains = decompose_circuit_chains(g, chain);
  r.chains_ok = r.chains.has_value();
  if (!r.chains_ok) note("chain edges do not form vertex-disjoint circuit chains");

  r.contrafluent_ok = true;
  std::vector<AdjacentPair> confluent;
  for (const AdjacentPair& p : adjacent_pairs(g)) {
    if (!scope[static_cast<std::size_t>(p.e)] || !scope[static_cast<std::size_t>(p.f)]) continue;
    const PairRelation rel = pair_relation(g, phi, p);
    if (rel.contrafluent && !(r.chains_ok && r.chains->consecutive(g, p.e, p.f))) {
      r.contrafluent_ok = false;
      note("contrafluent pair {" + std::to_string(p.e) + "," + std::to_string(p.f) +
           "} is not consecutive on a chain");
    }
    if (rel.confluent) confluent.push_back(p);
  }

  r.confluent_ok = true;
  std::vector<std::vector<std::size_t>> by_edge(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < confluent.size(); ++i) {
    by_edge[static_cast<std::size_t>(confluent[i].e)].push_back(i);
    by_edge[static_cast<std::size_t>(confluent[i].f)].push_back(i);
  }
  for (const auto& list : by_edge) {
    for (std::size_t a = 0; a < list.size() && r.confluent_ok; ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        const AdjacentPair& p = confluent[list[a]];
        const AdjacentPair& q = confluent[list[b]];
        if (strongly_intersecting(g, p, q)) {
          r.confluent_ok = false;
          note("confluent pairs {" + std::to_string(p.e) + "," + std::to_string(p.f) + "} and {" +
               std::to_string(q.e) + "," + std::to_string(q.f) + "} are strongly intersecting");
          break;
        }
      }
    }
  }
  return r;
}

PairConditions check_mod_flow_bullets(const Multigraph& g, const Flow& phi) {
  return check_pair_conditions(g, phi, EdgeMask(static_cast<std::size_t>(g.edge_count()), 1));
}

BuildingPhiBullets check_building_phi_bullets(const Multigraph& g, const Flow& phi, EdgeId e_star,
                                              bool against_reference, Element target) {
  BuildingPhiBullets out;
  out.pairs = check_mod_flow_bullets(g, phi);
  Element value = phi.value(e_star);
  if (against_reference) value = phi.group().negate(value);
  out.target_ok = phi.group().equal(value, target);
  return out;
}

namespace {

/// Value of an edge as a function of the free parameter c:
/// base + coef * (c, 0).
struct Affine {
  Element base;
  std::int64_t coef = 0;
};

/// All c in [0, k) with alpha * c = beta (mod k).
std::vector<std::int64_t> solve_congruence(std::int64_t alpha, std::int64_t beta, std::int64_t k) {
  alpha = mod_floor(alpha, k);
  beta = mod_floor(beta, k);
  const std::int64_t d = std::gcd(alpha, k);
  std::vector<std::int64_t> out;
  if (beta % d != 0) return out;
  const std::int64_t period = k / d;
  for (std::int64_t c = 0; c < period; ++c) {
    if (mod_floor(alpha * c - beta, k) == 0) {
      for (std::int64_t t = 0; t < d; ++t) out.push_back(c + t * period);
      break;
    }
  }
  return out;
}

class PhiBuilder {
 public:
  PhiBuilder(const Multigraph& g, EdgeId e_star, bool against, Element target, int delta)
      : g_(g),
        k_(building_phi_modulus(delta)),
        group_(Group::zkxz2(k_)),
        e_star_(e_star),
        against_(against),
        target_(group_.normalize(target)),
        delta_(delta),
        tower_(build_tower(g, e_star, target_.second)),
        phi_(group_, g.edge_count()) {}

  BuildingPhiResult run() {
    const int n = tower_.height();
    for (int i = n - 1; i >= 1; --i) {
      const Flow before = phi_;
      const TowerStep& step = tower_.steps[static_cast<std::size_t>(i - 1)];
      switch (step.kind) {
        case StepKind::add_chord:
          if (step.e1 == e_star_) {
            star_chord(i);
          } else {
            chord(i, step);
          }
          break;
        case StepKind::add_vertex:
          vertex(i, step);
          break;
        case StepKind::add_block_chain:
          block_chain(i, step);
          break;
      }
      check_step(i, before);
    }
    final_pass();

    const BuildingPhiBullets bullets = check_building_phi_bullets(g_, phi_, e_star_, against_, target_);
    if (!bullets.all()) {
      throw DefectError("building_phi: result fails its bullets: " +
                        (bullets.target_ok ? bullets.pairs.violation : std::string("wrong value on e*")));
    }
    return BuildingPhiResult{phi_, tower_, *bullets.pairs.chains, k_, delta_, diag_};
  }

 private:
  int level(EdgeId e) const { return tower_.edge_level[static_cast<std::size_t>(e)]; }

  Affine along(const Circuit& d, EdgeId x, Element extra = {}) const {
    return Affine{group_.add(phi_.value(x), extra), d.edge_sign(g_, x)};
  }

  void forbid_zero(const Affine& a, std::set<std::int64_t>& out) const {
    if (mod_floor(a.base.second, 2) != 0) return;
    for (std::int64_t c : solve_congruence(a.coef, -a.base.first, k_)) out.insert(c);
  }

  /// Values of c making (e, f) confluent / contrafluent at v.
  void forbid_pair(EdgeId e, const Affine& ae, EdgeId f, const Affine& af, VertexId v, bool confluent,
                   bool contrafluent, std::set<std::int64_t>& out) const {
    if (mod_floor(ae.base.second - af.base.second, 2) != 0) return;
    const std::int64_t se = g_.edge(e).head == v ? 1 : -1;
    const std::int64_t tf = g_.edge(f).tail == v ? 1 : -1;
    if (confluent) {
      for (std::int64_t c : solve_congruence(se * ae.coef - tf * af.coef, tf * af.base.first - se * ae.base.first, k_)) {
        out.insert(c);
      }
    }
    if (contrafluent) {
      for (std::int64_t c :
           solve_congruence(se * ae.coef + tf * af.coef, -tf * af.base.first - se * ae.base.first, k_)) {
        out.insert(c);
      }
    }
  }

  /// Pairs of a new edge x with edges that stay outside H_{i+1}.
  void forbid_against_outside(int i, const Circuit& d, EdgeId x, std::set<std::int64_t>& out) const {
    std::set<EdgeId> seen;
    const Affine ax = along(d, x);
    for (VertexId w : {g_.edge(x).tail, g_.edge(x).head}) {
      for (EdgeId f : g_.incident(w)) {
        if (f == x || level(f) <= i + 1 || !seen.insert(f).second) continue;
        forbid_pair(x, ax, f, Affine{phi_.value(f), 0}, w, true, true, out);
      }
    }
  }

  std::int64_t smallest_allowed(const std::set<std::int64_t>& forbidden) const {
    for (std::int64_t c = 0; c < k_; ++c) {
      if (!forbidden.count(c)) return c;
    }
    throw DefectError("building_phi: every value of c is forbidden");
  }

  void enforce_cap(const StepDiagnostics& d) const {
    if (d.forbidden > d.cap || static_cast<std::int64_t>(d.forbidden) >= k_) {
      std::ostringstream msg;
      msg << "building_phi: step " << d.index << " (" << to_string(d.stage) << ") forbids " << d.forbidden
          << " values, cap " << d.cap << ", k " << k_;
      throw DefectError(msg.str());
    }
  }

  Circuit fixed_circuit(const Circuit& c) const { return c.oriented_along(g_, e_star_, against_); }

  void star_chord(int i) {
    const Circuit d = fixed_circuit(find_circuit_through(g_, e_star_));
    add_along_circuit(phi_, g_, d, Element{target_.first, 0});
    StepDiagnostics diag;
    diag.index = i;
    diag.stage = PhiStage::chord;
    diag.forced = true;
    diag.chosen = target_.first;
    diag_.push_back(diag);
  }

  void chord(int i, const TowerStep& step) {
    const EdgeMask h = tower_.edges_of(i + 1);
    const Circuit d = find_circuit_through(g_, step.e1, &h);
    std::set<std::int64_t> forbidden;
    forbid_zero(along(d, step.e1), forbidden);
    forbid_against_outside(i, d, step.e1, forbidden);
    finish_single(i, PhiStage::chord, d, forbidden, static_cast<std::size_t>(4 * delta_ - 11));
  }

  void vertex(int i, const TowerStep& step) {
    const VertexId v = step.vertex;
    const VertexId u1 = g_.edge(step.e1).other(v);
    const VertexId u2 = g_.edge(step.e2).other(v);
    Circuit d;
    d.vertices = {v};
    d.edges = {step.e1};
    if (u1 == u2) {
      d.vertices.push_back(u1);
    } else {
      const EdgeMask h = tower_.edges_of(i);
      const auto p = shortest_path(g_, u1, u2, &h);
      if (!p) throw DefectError("building_phi: H_i is disconnected");
      d.vertices.insert(d.vertices.end(), p->vertices.begin(), p->vertices.end());
      d.edges.insert(d.edges.end(), p->edges.begin(), p->edges.end());
    }
    d.edges.push_back(step.e2);
    require_circuit(d);

    std::set<std::int64_t> forbidden;
    forbid_zero(along(d, step.e1), forbidden);
    forbid_zero(along(d, step.e2), forbidden);
    forbid_against_outside(i, d, step.e1, forbidden);
    forbid_against_outside(i, d, step.e2, forbidden);
    forbid_pair(step.e1, along(d, step.e1), step.e2, along(d, step.e2), v, false, true, forbidden);
    finish_single(i, PhiStage::vertex, d, forbidden, static_cast<std::size_t>(8 * delta_ - 15));
  }

  void block_chain(int i, const TowerStep& step) {
    const VertexMask inside = tower_.vertices_of(i);
    auto split = [&](EdgeId e) {
      const Edge& edge = g_.edge(e);
      return inside[static_cast<std::size_t>(edge.tail)] ? std::make_pair(edge.tail, edge.head)
                                                         : std::make_pair(edge.head, edge.tail);
    };
    const auto [u1, w1] = split(step.e1);
    const auto [u2, w2] = split(step.e2);

    EdgeMask chain_edges(static_cast<std::size_t>(g_.edge_count()), 0);
    for (EdgeId e : step.chain.edges()) chain_edges[static_cast<std::size_t>(e)] = 1;
    const auto q = shortest_path(g_, w1, w2, &chain_edges);
    if (!q) throw DefectError("building_phi: chain does not connect its attachment points");

    Circuit d;
    d.vertices = {u1};
    d.edges = {step.e1};
    d.vertices.insert(d.vertices.end(), q->vertices.begin(), q->vertices.end());
    d.edges.insert(d.edges.end(), q->edges.begin(), q->edges.end());
    d.edges.push_back(step.e2);
    if (u1 != u2) {
      const EdgeMask h = tower_.edges_of(i);
      const auto p = shortest_path(g_, u2, u1, &h);
      if (!p) throw DefectError("building_phi: H_i is disconnected");
      d.vertices.insert(d.vertices.end(), p->vertices.begin(), p->vertices.end() - 1);
      d.edges.insert(d.edges.end(), p->edges.begin(), p->edges.end());
    }
    require_circuit(d);

    std::set<std::int64_t> forbidden;
    forbid_zero(along(d, step.e1), forbidden);
    forbid_zero(along(d, step.e2), forbidden);
    forbid_against_outside(i, d, step.e1, forbidden);
    forbid_against_outside(i, d, step.e2, forbidden);
    if (u1 == u2) {
      forbid_pair(step.e1, along(d, step.e1), step.e2, along(d, step.e2), u1, false, true, forbidden);
    }
    StepDiagnostics diag = single_diag(i, PhiStage::block_chain, forbidden, static_cast<std::size_t>(8 * delta_ - 15));
    add_along_circuit(phi_, g_, d, Element{diag.chosen, 0});
    chain_pass(step.chain, diag);
    diag_.push_back(diag);
  }

  void final_pass() {
    StepDiagnostics diag;
    diag.index = 0;
    if (tower_.b == 1) {
      const Circuit c = fixed_circuit(tower_.base.circuits.front());
      Element current = phi_.value(e_star_);
      if (against_) current = group_.negate(current);
      diag.stage = PhiStage::final_circuit;
      diag.forced = true;
      diag.chosen = mod_floor(target_.first - current.first, k_);
      add_along_circuit(phi_, g_, c, Element{diag.chosen, 1});
    } else {
      diag.stage = PhiStage::final_chain;
      chain_pass(tower_.base, diag);
    }
    diag_.push_back(diag);
  }

  /// Sends (c_j, 1) through each circuit of the chain: c_1 = 0 and each
  /// later c_j keeps the pairs at the vertex shared with the previous
  /// circuit neither confluent nor contrafluent.
  void chain_pass(const CircuitChain& chain, StepDiagnostics& diag) {
    const auto shared = chain.shared_vertices();
    for (std::size_t j = 0; j < chain.circuits.size(); ++j) {
      const Circuit& cj = chain.circuits[j];
      std::set<std::int64_t> forbidden;
      if (j > 0) {
        const VertexId s = shared[j - 1];
        const Circuit& prev = chain.circuits[j - 1];
        for (EdgeId x : cj.edges) {
          if (!g_.edge(x).incident(s)) continue;
          const Affine ax = along(cj, x, Element{0, 1});
          for (EdgeId y : prev.edges) {
            if (!g_.edge(y).incident(s)) continue;
            forbid_pair(x, ax, y, Affine{phi_.value(y), 0}, s, true, true, forbidden);
          }
        }
      }
      const std::int64_t c = j == 0 ? 0 : smallest_allowed(forbidden);
      if (forbidden.size() > 8) {
        throw DefectError("building_phi: chain circuit " + std::to_string(j + 1) + " forbids " +
                          std::to_string(forbidden.size()) + " values");
      }
      diag.chain_forbidden.push_back(forbidden.size());
      diag.chain_forbidden_values.emplace_back(forbidden.begin(), forbidden.end());
      diag.chain_values.push_back(c);
      add_along_circuit(phi_, g_, cj, Element{c, 1});
    }
  }

  StepDiagnostics single_diag(int i, PhiStage stage, const std::set<std::int64_t>& forbidden, std::size_t cap) const {
    StepDiagnostics diag;
    diag.index = i;
    diag.stage = stage;
    diag.forbidden = forbidden.size();
    diag.forbidden_values.assign(forbidden.begin(), forbidden.end());
    diag.cap = std::min<std::size_t>(cap, static_cast<std::size_t>(k_ - 1));
    enforce_cap(diag);
    diag.chosen = smallest_allowed(forbidden);
    return diag;
  }

  void finish_single(int i, PhiStage stage, const Circuit& d, const std::set<std::int64_t>& forbidden,
                     std::size_t cap) {
    const StepDiagnostics diag = single_diag(i, stage, forbidden, cap);
    add_along_circuit(phi_, g_, d, Element{diag.chosen, 0});
    diag_.push_back(diag);
  }

  void require_circuit(const Circuit& d) const {
    if (!is_valid_circuit(g_, d)) throw DefectError("building_phi: constructed D* is not a circuit");
  }

  /// Conditions (A)-(E) for phi_i.
  void check_step(int i, const Flow& before) const {
    auto fail = [&](const std::string& what) {
      throw DefectError("building_phi: phi_" + std::to_string(i) + " violates " + what);
    };
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (level(e) > i + 1 && !(phi_.value(e) == before.value(e))) fail("(A) on edge " + std::to_string(e));
    }
    EdgeMask scope(static_cast<std::size_t>(g_.edge_count()), 0);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) scope[static_cast<std::size_t>(e)] = level(e) > i ? 1 : 0;
    const PairConditions pc = check_pair_conditions(g_, phi_, scope);
    if (!pc.nowhere_zero) fail("(B): " + pc.violation);
    if (!pc.chains_ok) fail("(C): " + pc.violation);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (phi_.value(e).second == 0) continue;
      if (!scope[static_cast<std::size_t>(e)]) fail("(C): chain edge inside H_i");
      for (VertexId v : {g_.edge(e).tail, g_.edge(e).head}) {
        if (tower_.vertex_level[static_cast<std::size_t>(v)] <= i) fail("(C): chain touches H_i");
      }
    }
    if (!pc.confluent_ok) fail("(D): " + pc.violation);
    if (!pc.contrafluent_ok) fail("(E): " + pc.violation);
  }

  const Multigraph& g_;
  std::int64_t k_;
  Group group_;
  EdgeId e_star_;
  bool against_;
  Element target_;
  int delta_;
  Tower tower_;
  Flow phi_;
  std::vector<StepDiagnostics> diag_;
};

}  // namespace

BuildingPhiResult building_phi(const Multigraph& g, EdgeId e_star, bool against_reference, Element target,
                               int delta) {
  if (e_star < 0 || e_star >= g.edge_count()) throw PreconditionError("building_phi: e* out of range");
  if (delta < g.max_degree()) throw PreconditionError("building_phi: delta is below the maximum degree");
  if (delta < 3) throw PreconditionError("building_phi: delta must be at least 3");
  const std::int64_t k = building_phi_modulus(delta);
  if (k % 2 == 0) throw DefectError("building_phi: k is even");
  if (mod_floor(target.first, k) == 0 && mod_floor(target.second, 2) == 0) {
    throw PreconditionError("building_phi: target must be nonzero");
  }
  if (!edge_connectivity_at_least(g, 3)) throw PreconditionError("building_phi: graph is not 3-edge-connected");
  return PhiBuilder(g, e_star, against_reference, target, delta).run();
}

}  // namespace richflow
