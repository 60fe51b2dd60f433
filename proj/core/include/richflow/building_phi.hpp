#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "richflow/circuits.hpp"
#include "richflow/flow.hpp"
#include "richflow/tower.hpp"

namespace richflow {

/// Result of checking the pair conditions of a Zk x Z2 flow on a set of
/// edges (the scope). Pairs count only when both edges are in scope.
struct PairConditions {
  bool nowhere_zero = false;
  bool chains_ok = false;             // chain edges form vertex-disjoint circuit chains
  bool confluent_ok = false;          // no two confluent pairs strongly intersect
  bool contrafluent_ok = false;       // contrafluent pairs are consecutive on a chain
  std::optional<ChainStructure> chains;
  std::string violation;              // first failure, empty when all hold

  [[nodiscard]] bool all() const { return nowhere_zero && chains_ok && confluent_ok && contrafluent_ok; }
};

PairConditions check_pair_conditions(const Multigraph& g, const Flow& phi, const EdgeMask& scope);

/// The three properties of a rich Zk x Z2 flow on the whole graph, plus
/// nowhere-zero.
PairConditions check_mod_flow_bullets(const Multigraph& g, const Flow& phi);

/// The properties of a building-phi output: the mod-flow bullets plus
/// phi(e*) = target under the fixed orientation.
struct BuildingPhiBullets {
  PairConditions pairs;
  bool target_ok = false;
  [[nodiscard]] bool all() const { return pairs.all() && target_ok; }
};

BuildingPhiBullets check_building_phi_bullets(const Multigraph& g, const Flow& phi, EdgeId e_star,
                                              bool against_reference, Element target);

enum class PhiStage { chord, vertex, block_chain, final_circuit, final_chain };

const char* to_string(PhiStage stage);

/// Forbidden-value accounting for one backward step phi_{i+1} -> phi_i.
struct StepDiagnostics {
  int index = 0;                 // i
  PhiStage stage = PhiStage::chord;
  bool forced = false;           // value fixed by the target, no choice made
  std::size_t forbidden = 0;     // |forbidden set of c|
  std::size_t cap = 0;           // per-case bound the count must respect
  std::int64_t chosen = 0;       // c
  std::vector<std::int64_t> forbidden_values;
  std::vector<std::size_t> chain_forbidden;  // per circuit of a chain pass
  std::vector<std::vector<std::int64_t>> chain_forbidden_values;
  std::vector<std::int64_t> chain_values;    // c_1, c_2, ...
};

struct BuildingPhiResult {
  Flow flow;
  Tower tower;
  ChainStructure chains;
  std::int64_t k = 0;
  int delta = 0;
  std::vector<StepDiagnostics> diagnostics;  // in the order computed (i = n-1 down to 0)
};

/// Nowhere-zero Zk x Z2 flow with k = 8 * delta - 13 and phi(e*) = target
/// when e* is read tail -> head (head -> tail with `against_reference`).
///
/// Requires G 3-edge-connected, delta >= max degree and target != (0, 0).
/// Every intermediate flow is checked against the backward-pass conditions;
/// any failure, or a forbidden set exceeding its cap, throws DefectError.
BuildingPhiResult building_phi(const Multigraph& g, EdgeId e_star, bool against_reference, Element target,
                               int delta);

/// k = 8 * delta - 13.
std::int64_t building_phi_modulus(int delta);

}  // namespace richflow
