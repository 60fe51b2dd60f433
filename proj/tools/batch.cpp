#include "batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <thread>

#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"
#include "richflow/rich_flow.hpp"

namespace richflow::cli {

namespace fs = std::filesystem;

std::vector<BatchInput> collect_batch_inputs(const std::string& dir) {
  if (!fs::is_directory(dir)) throw ParseError("not a directory: '" + dir + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".graph" || ext == ".graphs") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BatchInput> inputs;
  for (const fs::path& file : files) {
    const std::string name = file.filename().string();
    if (file.extension() == ".graph") {
      BatchInput in;
      in.path = name;
      try {
        in.graph = read_multigraph_file(file.string());
      } catch (const ParseError& e) {
        in.parse_error = e.what();
      }
      inputs.push_back(std::move(in));
      continue;
    }
    try {
      for (NamedGraph& g : read_multigraph_collection(file.string())) {
        BatchInput in;
        in.path = name + "#" + g.name;
        in.graph = std::move(g.graph);
        inputs.push_back(std::move(in));
      }
    } catch (const ParseError& e) {
      BatchInput in;
      in.path = name;
      in.parse_error = e.what();
      inputs.push_back(std::move(in));
    }
  }
  return inputs;
}

BatchRow evaluate_graph(const BatchInput& input, const BatchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  BatchRow row;
  row.graph_path = input.path;
  std::vector<std::string> flags;
  auto finish = [&] {
    if (flags.empty()) flags.push_back("ok");
    std::ostringstream status;
    for (std::size_t i = 0; i < flags.size(); ++i) status << (i ? "|" : "") << flags[i];
    row.status = status.str();
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    row.elapsed_ms = elapsed.count();
    return row;
  };
  if (!input.graph) {
    flags.push_back("parse_error");
    return finish();
  }
  const Multigraph& g = *input.graph;
  row.parsed = true;
  row.n = g.vertex_count();
  row.m = g.edge_count();
  row.delta = g.max_degree();
  row.admissible = is_rich_flow_admissible(g).admissible && g.edge_count() > 0;
  if (!row.admissible) {
    flags.push_back("not_admissible");
    return finish();
  }
  if (row.delta >= 5) row.conj1_bound = static_cast<int>(std::floor(1.5 * row.delta + 1));
  row.conj2_applicable = edge_connectivity_at_least(g, 3);
  if (row.conj2_applicable) row.conj2_bound = row.delta + 3;

  try {
    const RichFlowCertificate cert = synthesize_rich_flow(g);
    row.synth_bound = cert.bound;
    row.synth_max_abs = cert.max_abs;
  } catch (const DefectError&) {
    row.defect = true;
    flags.push_back("defect");
  }

  const ExactResult chi = chromatic_index(g, options.budget);
  row.chi_prime = chi.value;
  const ExactResult r = exact_rich_flow_number(g, options.budget);
  row.exact_r = r.value;
  if (!chi.value || !r.value) flags.push_back("budget_exhausted");
  if (r.value) {
    if (!is_rich(g, *r.flow_witness)) {
      row.defect = true;
      flags.push_back("bad_witness");
    }
    if (row.synth_bound && *r.value > *row.synth_bound) flags.push_back("above_synth_bound");
    if (chi.value && *r.value < *chi.value + 1) flags.push_back("below_chromatic_bound");
    if (row.conj1_bound && *r.value > *row.conj1_bound) flags.push_back("conj1_exceeded");
    if (row.conj2_bound && *r.value > *row.conj2_bound) flags.push_back("conj2_exceeded");
  }
  return finish();
}

std::vector<BatchRow> run_batch(const std::vector<BatchInput>& inputs, const BatchOptions& options) {
  std::vector<BatchRow> rows(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) rows[i] = evaluate_graph(inputs[i], options);
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BatchRow& a, const BatchRow& b) { return a.graph_path < b.graph_path; });
  return rows;
}

namespace {

template <typename T>
std::string cell(const std::optional<T>& value) {
  return value ? std::to_string(*value) : std::string();
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_batch_csv(std::ostream& out, const std::vector<BatchRow>& rows, bool timing) {
  out << "graph_path,n,m,delta,admissible,chi_prime,exact_R,synth_bound,synth_max_abs,conj1_bound,"
         "conj2_applicable,conj2_bound,status,elapsed_ms\n";
  for (const BatchRow& r : rows) {
    out << quote(r.graph_path) << ',';
    if (r.parsed) {
      out << r.n << ',' << r.m << ',' << r.delta << ',' << (r.admissible ? "true" : "false") << ',';
    } else {
      out << ",,,,";
    }
    out << cell(r.chi_prime) << ',' << cell(r.exact_r) << ',' << cell(r.synth_bound) << ','
        << cell(r.synth_max_abs) << ',' << cell(r.conj1_bound) << ',';
    out << (r.parsed && r.admissible ? (r.conj2_applicable ? "true" : "false") : "") << ',';
    out << cell(r.conj2_bound) << ',' << r.status << ',';
    if (timing) out << std::fixed << std::setprecision(1) << r.elapsed_ms << std::defaultfloat;
    out << '\n';
  }
}

}  // namespace richflow::cli
