#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "batch.hpp"
#include "richflow/building_phi.hpp"
#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"
#include "richflow/flow_io.hpp"
#include "richflow/oracle.hpp"
#include "richflow/rich_flow.hpp"

namespace richflow::cli {

namespace {

using nlohmann::json;

const char* verdict_word(bool ok) { return ok ? "pass" : "FAIL"; }

std::string values_line(const Flow& phi) {
  std::ostringstream out;
  out << '[';
  for (EdgeId e = 0; e < phi.edge_count(); ++e) {
    out << (e ? ", " : "") << format_element(phi.group(), phi.value(e));
  }
  out << ']';
  return out.str();
}

json trace_step(const StepDiagnostics& d) {
  return json{{"i", d.index},
              {"stage", to_string(d.stage)},
              {"forced", d.forced},
              {"c", d.chosen},
              {"forbidden", d.forbidden_values},
              {"forbidden_count", d.forbidden},
              {"cap", d.cap},
              {"chain_values", d.chain_values},
              {"chain_forbidden", d.chain_forbidden_values}};
}

json trace_tower(const Tower& t) {
  json base = json::array();
  for (const Circuit& c : t.base.circuits) base.push_back(c.edges);
  json steps = json::array();
  for (const TowerStep& s : t.steps) {
    json step{{"kind", to_string(s.kind)}, {"edges", s.added_edges}, {"vertices", s.added_vertices}};
    if (s.kind == StepKind::add_block_chain) {
      json chain = json::array();
      for (const Circuit& c : s.chain.circuits) chain.push_back(c.edges);
      step["chain"] = chain;
    }
    steps.push_back(step);
  }
  return json{{"e_star", t.e_star}, {"b", t.b}, {"base", base}, {"steps", steps}};
}

void write_trace(std::ostream& err, const SynthesisTrace& trace) {
  for (std::size_t i = 0; i < trace.calls.size(); ++i) {
    const PhiCall& call = trace.calls[i];
    err << json{{"event", "building_phi"},
                {"call", i},
                {"depth", call.depth},
                {"n", call.vertex_count},
                {"m", call.edge_count},
                {"e_star", call.e_star},
                {"against_reference", call.against_reference},
                {"target", {call.target.first, call.target.second}},
                {"tower", trace_tower(call.tower)}}
               .dump()
        << '\n';
    for (const StepDiagnostics& d : call.diagnostics) {
      json line = trace_step(d);
      line["event"] = "step";
      line["call"] = i;
      err << line.dump() << '\n';
    }
  }
  err << json{{"event", "done"}, {"max_split_depth", trace.max_split_depth}}.dump() << '\n';
}

int cmd_check(const std::string& graph_path, std::ostream& out) {
  const Multigraph g = read_multigraph_file(graph_path);
  const AdmissibilityVerdict verdict = is_rich_flow_admissible(g);
  out << verdict.describe() << '\n';
  return verdict.admissible ? exit_ok : exit_failed;
}

int cmd_synth(const std::string& graph_path, const std::string& out_path, bool trace, std::ostream& out,
              std::ostream& err) {
  const Multigraph g = read_multigraph_file(graph_path);
  const AdmissibilityVerdict verdict = is_rich_flow_admissible(g);
  if (!verdict.admissible) {
    out << verdict.describe() << '\n';
    return exit_failed;
  }
  SynthesisTrace log;
  const RichFlowCertificate cert = synthesize_rich_flow(g, trace ? &log : nullptr);
  if (trace) write_trace(err, log);
  const std::string certificate = flow_to_json(g, cert.flow);
  std::ostream& summary = out_path.empty() ? err : out;
  if (out_path.empty()) {
    out << certificate << '\n';
  } else {
    std::ofstream file(out_path);
    if (!file) throw ParseError("cannot write '" + out_path + "'");
    file << certificate << '\n';
  }
  summary << "Delta = " << cert.delta << '\n'
          << "bound = " << cert.bound << '\n'
          << "max_abs = " << cert.max_abs << '\n';
  return exit_ok;
}

int cmd_verify(const std::string& graph_path, const std::string& flow_path, std::ostream& out) {
  const Multigraph g = read_multigraph_file(graph_path);
  const Flow phi = bind_flow(g, read_flow_file(flow_path));
  out << "group: " << phi.group().describe() << '\n';
  bool all = true;
  auto line = [&](const char* name, bool ok) {
    out << name << ": " << verdict_word(ok) << '\n';
    all = all && ok;
  };
  const FlowReport report = verify_flow(g, phi);
  line("conserved", report.conserved);
  line("nowhere_zero", report.nowhere_zero);
  if (phi.group().is_integer()) {
    const RichnessReport rich = richness_report(g, phi);
    line("within_bound", rich.bound_ok);
    line("adjacent_abs_distinct", rich.adjacent_abs_distinct);
    out << "max_abs = " << rich.max_abs << '\n';
    if (rich.clash) {
      out << "clash: edges " << rich.clash->e << " and " << rich.clash->f << " at vertex " << rich.clash->shared
          << '\n';
    }
  } else if (phi.group().is_product()) {
    const PairConditions pc = check_mod_flow_bullets(g, phi);
    line("chain_edges_form_chains", pc.chains_ok);
    line("confluent_pairs_not_strongly_intersecting", pc.confluent_ok);
    line("contrafluent_pairs_consecutive", pc.contrafluent_ok);
  }
  out << (all ? "all checks passed" : "verification failed") << '\n';
  return all ? exit_ok : exit_failed;
}

SearchBudget make_budget(int k_max, std::int64_t node_limit) {
  SearchBudget budget;
  budget.k_max = k_max;
  budget.node_limit = node_limit;
  budget.time_limit_s = time_limit_from_env();
  return budget;
}

int cmd_exact(const std::string& graph_path, int k_max, std::int64_t node_limit, std::ostream& out) {
  const Multigraph g = read_multigraph_file(graph_path);
  const AdmissibilityVerdict verdict = is_rich_flow_admissible(g);
  if (!verdict.admissible) {
    out << verdict.describe() << '\n';
    return exit_failed;
  }
  const ExactResult r = exact_rich_flow_number(g, make_budget(k_max, node_limit));
  if (!r.value) {
    out << "R unknown: budget exhausted after " << r.nodes << " nodes (k up to " << k_max << ")\n";
    return exit_ok;
  }
  if (!is_rich(g, *r.flow_witness)) throw DefectError("oracle witness is not rich");
  out << "R = " << *r.value << '\n' << "witness = " << values_line(*r.flow_witness) << '\n';
  return exit_ok;
}

Group parse_group(const std::string& text) {
  if (text == "z2") return Group::z2();
  if (text == "z6") return Group::z6();
  if (text.rfind("zk:", 0) == 0) {
    const std::string digits = text.substr(3);
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == digits.size() && !digits.empty() && k >= 2) return Group::zk(k);
  }
  throw PreconditionError("--group must be z2, z6 or zk:<k> with k >= 2");
}

int cmd_oracle_nz(const std::string& graph_path, const std::string& group_text, std::int64_t node_limit,
                  std::ostream& out) {
  const Group group = parse_group(group_text);
  const Multigraph g = read_multigraph_file(graph_path);
  const FlowSearchResult r = brute_force_flow(g, group, false, make_budget(64, node_limit));
  if (r.flow) {
    if (!verify_flow(g, *r.flow).conserved || !verify_flow(g, *r.flow).nowhere_zero) {
      throw DefectError("oracle flow fails verification");
    }
    out << "nowhere-zero " << group.describe() << " flow found\n" << flow_to_json(g, *r.flow) << '\n';
    return exit_ok;
  }
  if (r.status == SearchStatus::budget_exhausted) {
    out << "unknown: budget exhausted after " << r.nodes << " nodes\n";
    return exit_ok;
  }
  out << "no nowhere-zero " << group.describe() << " flow exists\n";
  return exit_failed;
}

int cmd_batch(const std::string& dir, const std::string& report, int jobs, bool timing, int k_max,
              std::int64_t node_limit, std::ostream& out) {
  BatchOptions options;
  options.jobs = jobs;
  options.timing = timing;
  options.budget = make_budget(k_max, node_limit);
  const auto rows = run_batch(collect_batch_inputs(dir), options);
  if (report.empty() || report == "-") {
    write_batch_csv(out, rows, timing);
  } else {
    std::ofstream file(report);
    if (!file) throw ParseError("cannot write '" + report + "'");
    write_batch_csv(file, rows, timing);
    out << rows.size() << " graphs written to " << report << '\n';
  }
  const bool defect = std::any_of(rows.begin(), rows.end(), [](const BatchRow& r) { return r.defect; });
  return defect ? exit_defect : exit_ok;
}

}  // namespace

double time_limit_from_env() {
  const char* raw = std::getenv("RICHFLOW_TIME_LIMIT_S");
  if (!raw) return 60.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  return (end != raw && *end == '\0' && v > 0) ? v : 60.0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rich flow synthesis, verification and exact search for multigraphs", "richflow"};
  app.require_subcommand(1);

  std::string graph_path, flow_path, out_path, group_text, dir, report;
  bool trace = false;
  bool timing = false;
  int k_max = 64;
  int jobs = 1;
  std::int64_t node_limit = 20'000'000;

  auto* check = app.add_subcommand("check", "Report rich flow admissibility");
  check->add_option("graph", graph_path, "Graph file")->required();

  auto* synth = app.add_subcommand("synth", "Construct a rich flow and write its certificate");
  synth->add_option("graph", graph_path, "Graph file")->required();
  synth->add_option("-o,--output", out_path, "Certificate path (stdout when omitted)");
  synth->add_flag("--trace", trace, "Write the construction trace to stderr as JSON lines");

  auto* verify = app.add_subcommand("verify", "Check a flow certificate against a graph");
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("flow", flow_path, "Flow certificate")->required();

  auto* exact = app.add_subcommand("exact", "Compute the rich flow number by exhaustive search");
  exact->add_option("graph", graph_path, "Graph file")->required();
  exact->add_option("--kmax", k_max, "Largest flow bound tried")->check(CLI::Range(2, 64));
  exact->add_option("--node-limit", node_limit, "Search node budget")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle-nz", "Search for a nowhere-zero flow in a group");
  oracle->add_option("graph", graph_path, "Graph file")->required();
  oracle->add_option("--group", group_text, "z2, z6 or zk:<k>")->required();
  oracle->add_option("--node-limit", node_limit, "Search node budget")->check(CLI::PositiveNumber);

  auto* batch = app.add_subcommand("batch", "Evaluate every graph in a directory and write a CSV report");
  batch->add_option("dir", dir, "Directory of *.graph / *.graphs files")->required();
  batch->add_option("--report", report, "CSV path (stdout when omitted)");
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  batch->add_flag("--timing", timing, "Fill the elapsed_ms column");
  batch->add_option("--kmax", k_max, "Largest flow bound tried")->check(CLI::Range(2, 64));
  batch->add_option("--node-limit", node_limit, "Search node budget per graph")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*check) return cmd_check(graph_path, out);
    if (*synth) return cmd_synth(graph_path, out_path, trace, out, err);
    if (*verify) return cmd_verify(graph_path, flow_path, out);
    if (*exact) return cmd_exact(graph_path, k_max, node_limit, out);
    if (*oracle) return cmd_oracle_nz(graph_path, group_text, node_limit, out);
    if (*batch) return cmd_batch(dir, report, jobs, timing, k_max, node_limit, out);
  } catch (const NotAdmissibleError& e) {
    out << e.what() << '\n';
    return exit_failed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DefectError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_defect;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_defect;
  }
  return exit_usage;
}

}  // namespace richflow::cli
