// Acceptance checks. Usage: acceptance <richflow-binary> <corpus-dir> <work-dir>
// Prints one "AC<n> PASS|FAIL: ..." line per criterion; exits 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "richflow/building_phi.hpp"
#include "richflow/integer_lift.hpp"
#include "richflow/oracle.hpp"
#include "richflow/rich_flow.hpp"
#include "richflow/seymour.hpp"
#include "support.hpp"

using namespace richflow;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Seconds = 60.0;
constexpr double kAc3SecondsPerGraph = 5.0;
constexpr int kAc4ChoicesPerGraph = 10;
constexpr int kAc5MinDepth = 2;
constexpr int kAc6PairSets = 100;
constexpr int kAc7Flows = 1000;
constexpr int kAc8MaxEdges = 12;
constexpr std::int64_t kAc9NodeLimit = 50'000'000;
constexpr double kAc9Seconds = 60.0;

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

Verdict ac1() {
  const auto start = Clock::now();
  const Multigraph t3 = catalog::theta(3);
  const ExactResult r = exact_rich_flow_number(t3);
  const double t = seconds_since(start);
  const bool witness = r.flow_witness && is_rich(t3, *r.flow_witness) && r.flow_witness->group() == Group::integer(4);
  const bool ok = r.value == 4 && r.status == SearchStatus::exact && witness && t < kAc1Seconds;
  return {ok, "T3: R = " + (r.value ? std::to_string(*r.value) : std::string("?")) +
                  ", witness " + (witness ? "rich" : "missing") + ", " + fmt(t) + " (limit 1 s)"};
}

Verdict ac2() {
  const auto start = Clock::now();
  const Multigraph dt = catalog::multi_triangle(2);
  const ExactResult chi = chromatic_index(dt);
  const ExactResult r = exact_rich_flow_number(dt);
  const double t = seconds_since(start);
  const bool witness = r.flow_witness && is_rich(dt, *r.flow_witness);
  const bool coloring = chi.coloring_witness && is_proper_edge_coloring(dt, *chi.coloring_witness, 6);
  const bool ok = chi.value == 6 && r.value == 7 && witness && coloring && t < kAc2Seconds;
  return {ok, "DT: chi' = " + (chi.value ? std::to_string(*chi.value) : std::string("?")) +
                  ", R = " + (r.value ? std::to_string(*r.value) : std::string("?")) + " (3k+1 = 7), " + fmt(t) +
                  " (limit 60 s)"};
}

Verdict ac3(const std::vector<NamedGraph>& admissible) {
  static const std::vector<std::string> required{"T3", "DT", "K4", "K33", "prism", "wagner", "petersen", "two-K4"};
  for (const std::string& name : required) {
    bool found = false;
    for (const NamedGraph& g : admissible) found = found || g.name == name;
    if (!found) return {false, "corpus lacks " + name};
  }
  int small = 0;
  double worst = 0;
  std::string worst_name;
  for (const NamedGraph& g : admissible) {
    if (g.name.find("small_admissible") != std::string::npos) ++small;
    const auto start = Clock::now();
    const RichFlowCertificate c = synthesize_rich_flow(g.graph);
    const double t = seconds_since(start);
    if (t > worst) {
      worst = t;
      worst_name = g.name;
    }
    if (!is_rich(g.graph, c.flow)) return {false, g.name + ": certificate is not rich"};
    if (c.max_abs > 264 * c.delta - 446) {
      return {false, g.name + ": max_abs " + std::to_string(c.max_abs) + " > 264*" + std::to_string(c.delta) + "-446"};
    }
    if (t > kAc3SecondsPerGraph) return {false, g.name + ": " + fmt(t) + " exceeds 5 s"};
  }
  if (small == 0) return {false, "no graphs from the checked-in small corpus"};
  return {true, std::to_string(admissible.size()) + " graphs (" + std::to_string(small) +
                    " from small_admissible.graphs) rich with max_abs <= 264*Delta-446; slowest " + fmt(worst) +
                    " (" + worst_name + ", limit 5 s)"};
}

Verdict ac4(const std::vector<NamedGraph>& three) {
  rftest::Rng rng(20240611);
  int runs = 0;
  std::size_t worst_ratio_num = 0, worst_ratio_den = 1;
  for (const NamedGraph& g : three) {
    const int delta = std::max(3, g.graph.max_degree());
    const std::int64_t k = building_phi_modulus(delta);
    std::set<std::tuple<EdgeId, bool, std::int64_t, std::int64_t>> choices;
    std::uniform_int_distribution<EdgeId> edge(0, g.graph.edge_count() - 1);
    std::uniform_int_distribution<std::int64_t> value(0, k - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    while (static_cast<int>(choices.size()) < kAc4ChoicesPerGraph) {
      const std::int64_t a = value(rng);
      const std::int64_t b = bit(rng);
      if (a == 0 && b == 0) continue;
      choices.emplace(edge(rng), bit(rng) == 1, a, b);
    }
    for (const auto& [e, against, a, b] : choices) {
      const Element target{a, b};
      // building_phi re-checks Conditions (A)-(E) after every step and throws on a violation.
      const BuildingPhiResult r = building_phi(g.graph, e, against, target, delta);
      const BuildingPhiBullets bullets = check_building_phi_bullets(g.graph, r.flow, e, against, target);
      const std::string where = g.name + " e*=" + std::to_string(e) + " target=(" + std::to_string(a) + "," +
                                std::to_string(b) + ")";
      if (!bullets.all()) return {false, where + ": " + bullets.pairs.violation};
      for (const StepDiagnostics& d : r.diagnostics) {
        if (d.forbidden >= static_cast<std::size_t>(k) || d.forbidden > d.cap) {
          return {false, where + ": forbidden set of size " + std::to_string(d.forbidden) + " at step " +
                             std::to_string(d.index)};
        }
        for (std::size_t f : d.chain_forbidden) {
          if (f >= static_cast<std::size_t>(k) || f > 8) return {false, where + ": chain forbidden set too large"};
        }
        if (d.forbidden * worst_ratio_den > worst_ratio_num * static_cast<std::size_t>(k)) {
          worst_ratio_num = d.forbidden;
          worst_ratio_den = static_cast<std::size_t>(k);
        }
      }
      ++runs;
    }
  }
  return {runs > 0, std::to_string(three.size()) + " graphs x 10 choices = " + std::to_string(runs) +
                        " runs; bullets and (A)-(E) hold; largest forbidden set " + std::to_string(worst_ratio_num) +
                        " with k = " + std::to_string(worst_ratio_den)};
}

Verdict ac5(const std::vector<NamedGraph>& admissible) {
  int depth = 0;
  std::string deepest;
  for (const NamedGraph& g : admissible) {
    SynthesisTrace trace;
    const Flow f = rich_mod_flow(g.graph, &trace);
    const PairConditions c = check_mod_flow_bullets(g.graph, f);
    if (!verify_flow(g.graph, f).conserved || !c.all()) return {false, g.name + ": " + c.violation};
    if (trace.max_split_depth > depth) {
      depth = trace.max_split_depth;
      deepest = g.name;
    }
  }
  return {depth >= kAc5MinDepth, std::to_string(admissible.size()) + " graphs pass all three bullets; deepest 2-cut recursion " +
                                       std::to_string(depth) + " (" + deepest + ", need >= 2)"};
}

Verdict ac6(const std::vector<NamedGraph>& admissible) {
  rftest::Rng rng(777);
  std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
  int sets = 0;
  std::size_t pairs_total = 0;
  while (sets < kAc6PairSets) {
    const NamedGraph& g = admissible[pick(rng)];
    const PairSet pairs = rftest::random_pair_set(rng, g.graph, 3 * g.graph.edge_count());
    if (pairs.empty()) continue;
    validate_pair_set(g.graph, pairs);
    const SplitMap split = build_pair_splitting(g.graph, pairs);
    if (!bridges(split.h).empty()) return {false, g.name + ": H has a bridge"};
    for (VertexId b : split.b_vertex) {
      if (split.h.degree(b) != 3) return {false, g.name + ": b(p) of degree " + std::to_string(split.h.degree(b))};
    }
    const Flow phi = flow_avoiding_confluence(g.graph, pairs);
    const FlowReport r = verify_flow(g.graph, phi);
    if (phi.group() != Group::z6() || !r.conserved || !r.nowhere_zero) return {false, g.name + ": not a NZ Z6 flow"};
    for (const AdjacentPair& p : pairs) {
      if (pair_relation(g.graph, phi, p).confluent) return {false, g.name + ": a pair of P is confluent"};
    }
    pairs_total += pairs.size();
    ++sets;
  }
  return {true, std::to_string(sets) + " pair sets (" + std::to_string(pairs_total) +
                    " pairs): NZ Z6, no confluent pair, b(p) degree 3, H bridgeless"};
}

Verdict ac7(const std::vector<NamedGraph>& admissible) {
  rftest::Rng rng(1000);
  std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
  const std::vector<Group> groups{Group::z2(), Group::zk(3), Group::zk(5), Group::z6(), Group::zk(11), Group::zk(19),
                                  Group::zk(43)};
  std::uniform_int_distribution<std::size_t> group_pick(0, groups.size() - 1);
  std::uniform_int_distribution<int> circuits(1, 6);
  for (int i = 0; i < kAc7Flows; ++i) {
    const NamedGraph& g = admissible[pick(rng)];
    const Group& group = groups[group_pick(rng)];
    const Flow phi = rftest::random_circuit_sum(rng, g.graph, group, circuits(rng));
    const Flow lifted = modular_to_integer(g.graph, phi);
    const std::int64_t k = group.modulus();
    if (!verify_flow(g.graph, lifted).conserved) return {false, g.name + ": lift not conserved"};
    for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
      const std::int64_t x = lifted.value(e).first;
      const std::int64_t r = phi.value(e).first;
      if (mod_floor(x, k) != r) return {false, g.name + ": residue changed"};
      if (std::llabs(x) >= k) return {false, g.name + ": |value| >= k"};
      if ((x == 0) != (r == 0)) return {false, g.name + ": zero set changed"};
    }
  }
  return {true, "1000 random circuit sums over Z2, Z3, Z5, Z6, Z11, Z19, Z43: residues, conservation, |x| < k, zeros kept"};
}

Verdict ac8(const std::vector<NamedGraph>& all) {
  int checked = 0;
  for (const NamedGraph& g : all) {
    if (g.graph.edge_count() > kAc8MaxEdges) continue;
    auto br = bridges(g.graph);
    std::sort(br.begin(), br.end());
    auto ref_br = rftest::brute_bridges(g.graph);
    std::sort(ref_br.begin(), ref_br.end());
    if (br != ref_br) return {false, g.name + ": bridges differ"};
    auto cuts = enumerate_two_edge_cuts(g.graph);
    for (auto& [a, b] : cuts) {
      if (a > b) std::swap(a, b);
    }
    std::sort(cuts.begin(), cuts.end());
    auto ref = rftest::brute_two_cuts(g.graph);
    std::sort(ref.begin(), ref.end());
    if (cuts != ref) return {false, g.name + ": 2-edge-cuts differ"};
    if (is_rich_flow_admissible(g.graph).admissible != rftest::brute_admissible(g.graph)) {
      return {false, g.name + ": admissibility differs"};
    }
    ++checked;
  }
  return {checked > 0, std::to_string(checked) + " corpus graphs with <= 12 edges: bridges and 2-edge-cuts match brute force"};
}

Verdict ac9(const std::vector<NamedGraph>& admissible) {
  SearchBudget budget;
  budget.node_limit = kAc9NodeLimit;
  budget.time_limit_s = kAc9Seconds;
  int exact = 0, skipped = 0;
  for (const NamedGraph& g : admissible) {
    const ExactResult chi = chromatic_index(g.graph, budget);
    const ExactResult r = exact_rich_flow_number(g.graph, budget);
    if (!chi.value || !r.value) {
      ++skipped;
      continue;
    }
    if (*r.value < *chi.value + 1) {
      return {false, g.name + ": R = " + std::to_string(*r.value) + " < chi' + 1 = " + std::to_string(*chi.value + 1)};
    }
    ++exact;
  }
  return {exact > 0, std::to_string(exact) + " graphs with both values exact satisfy R >= chi' + 1; " +
                         std::to_string(skipped) + " skipped on budget"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict ac10(const std::string& binary, const std::string& corpus, const fs::path& work) {
  fs::create_directories(work);
  const fs::path a = work / "batch_run1.csv";
  const fs::path b = work / "batch_run2.csv";
  const std::string base = "\"" + binary + "\" batch \"" + corpus + "\" --report ";
  const int ra = std::system((base + "\"" + a.string() + "\" --jobs 1 > /dev/null").c_str());
  const int rb = std::system((base + "\"" + b.string() + "\" --jobs 4 > /dev/null").c_str());
  if (ra != 0 || rb != 0) return {false, "batch exited with a nonzero status"};
  const std::string ta = slurp(a);
  const std::string tb = slurp(b);
  const auto rows = std::count(ta.begin(), ta.end(), '\n');
  return {!ta.empty() && ta == tb,
          "two batch runs (--jobs 1, --jobs 4), " + std::to_string(rows - 1) + " rows, reports " +
              (ta == tb ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <richflow-binary> <corpus-dir> <work-dir>\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::string corpus_dir = argv[2];
  const fs::path work = argv[3];

  const std::vector<NamedGraph> all = rftest::corpus();
  const std::vector<NamedGraph> admissible = rftest::admissible_corpus();
  const std::vector<NamedGraph> three = rftest::three_connected_corpus();

  const std::vector<std::function<Verdict()>> criteria{
      [] { return ac1(); },
      [] { return ac2(); },
      [&] { return ac3(admissible); },
      [&] { return ac4(three); },
      [&] { return ac5(admissible); },
      [&] { return ac6(admissible); },
      [&] { return ac7(admissible); },
      [&] { return ac8(all); },
      [&] { return ac9(admissible); },
      [&] { return ac10(binary, corpus_dir, work); },
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "AC" << (i + 1) << ' ' << (v.pass ? "PASS" : "FAIL") << ": " << v.detail << std::endl;
    if (!v.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all 10 acceptance criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
