#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "richflow/multigraph.hpp"
#include "richflow/oracle.hpp"

namespace richflow::cli {

struct BatchOptions {
  int jobs = 1;
  bool timing = false;
  SearchBudget budget;
};

struct BatchRow {
  std::string graph_path;
  int n = 0;
  int m = 0;
  int delta = 0;
  bool parsed = false;
  bool admissible = false;
  std::optional<int> chi_prime;
  std::optional<int> exact_r;
  std::optional<std::int64_t> synth_bound;
  std::optional<std::int64_t> synth_max_abs;
  std::optional<int> conj1_bound;
  bool conj2_applicable = false;
  std::optional<int> conj2_bound;
  std::string status;
  double elapsed_ms = 0;
  bool defect = false;
};

struct BatchInput {
  std::string path;  // relative to the batch directory, "#name" for collection members
  std::optional<Multigraph> graph;
  std::string parse_error;
};

/// Every *.graph file (one graph) and *.graphs file (a collection) directly
/// inside `dir`, in path order.
std::vector<BatchInput> collect_batch_inputs(const std::string& dir);

BatchRow evaluate_graph(const BatchInput& input, const BatchOptions& options);

/// Evaluates all inputs with `jobs` worker threads; rows keep input order.
std::vector<BatchRow> run_batch(const std::vector<BatchInput>& inputs, const BatchOptions& options);

void write_batch_csv(std::ostream& out, const std::vector<BatchRow>& rows, bool timing);

}  // namespace richflow::cli
