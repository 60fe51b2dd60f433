#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "richflow/flow.hpp"

namespace richflow {

/// Limits for the exact searches. `node_limit` is deterministic; the time
/// limit is a safety net (<= 0 disables it).
struct SearchBudget {
  int k_max = 64;
  std::int64_t node_limit = 200'000'000;
  double time_limit_s = 60.0;
};

enum class SearchStatus { exact, budget_exhausted };

struct FlowSearchResult {
  std::optional<Flow> flow;
  SearchStatus status = SearchStatus::exact;
  std::int64_t nodes = 0;
};

/// Exhaustive search for a nowhere-zero flow in `group` (rich additionally
/// demands distinct absolute values on adjacent edges; integer groups
/// only, bound <= 64). Independent of the synthesis code: edges are
/// assigned one at a time in decreasing degree-sum order, and a vertex
/// with a single undecided edge forces that edge's value.
FlowSearchResult brute_force_flow(const Multigraph& g, const Group& group, bool require_rich,
                                  const SearchBudget& budget = {});

struct ExactResult {
  std::optional<int> value;
  SearchStatus status = SearchStatus::exact;
  std::optional<Flow> flow_witness;
  std::optional<std::vector<int>> coloring_witness;
  std::int64_t nodes = 0;
};

/// Least k with a rich k-flow. `value` is empty for non-admissible graphs
/// (status exact) or when the budget runs out.
ExactResult exact_rich_flow_number(const Multigraph& g, const SearchBudget& budget = {});

/// Chromatic index by backtracking, with a proper coloring as witness.
ExactResult chromatic_index(const Multigraph& g, const SearchBudget& budget = {});

bool is_proper_edge_coloring(const Multigraph& g, const std::vector<int>& colors, int palette);

}  // namespace richflow
