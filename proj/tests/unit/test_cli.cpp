#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = richflow::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string graph(const std::string& name) { return rftest::corpus_dir() + "/" + name + ".graph"; }

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "richflow_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("check") {
  const Outcome c4 = run({"check", graph("C4")});
  CHECK(c4.code == 1);
  CHECK(c4.out.find("not admissible: 2-edge-cut {0,1} shares vertex 1") != std::string::npos);
  const Outcome k4 = run({"check", graph("K4")});
  CHECK(k4.code == 0);
  CHECK(k4.out.find("admissible") != std::string::npos);
}

TEST_CASE("exact") {
  const Outcome t3 = run({"exact", graph("T3"), "--kmax", "8"});
  CHECK(t3.code == 0);
  CHECK(t3.out.find("R = 4") != std::string::npos);
  const Outcome capped = run({"exact", graph("T3"), "--kmax", "3"});
  CHECK(capped.code == 0);
  CHECK(capped.out.find("R unknown") != std::string::npos);
  CHECK(run({"exact", graph("C4")}).code == 1);
}

TEST_CASE("synth then verify") {
  const auto dir = scratch();
  const std::string flow = (dir / "dt.flow.json").string();
  const Outcome s = run({"synth", graph("DT"), "-o", flow});
  CHECK(s.code == 0);
  CHECK(s.out.find("Delta = 4") != std::string::npos);
  const Outcome v = run({"verify", graph("DT"), flow});
  CHECK(v.code == 0);
  CHECK(v.out.find("all checks passed") != std::string::npos);
  CHECK(v.out.find("FAIL") == std::string::npos);

  const Outcome mismatch = run({"verify", graph("K4"), flow});
  CHECK(mismatch.code == 2);

  auto doc = nlohmann::json::parse(std::ifstream(flow));
  doc["edges"][0]["value"] = 0;
  const std::string broken = (dir / "broken.flow.json").string();
  std::ofstream(broken) << doc.dump();
  const Outcome bad = run({"verify", graph("DT"), broken});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verification failed") != std::string::npos);
}

TEST_CASE("synth writes JSON to stdout without -o") {
  const Outcome s = run({"synth", graph("T3")});
  CHECK(s.code == 0);
  const auto doc = nlohmann::json::parse(s.out);
  CHECK(doc["group"] == "int");
  CHECK(s.err.find("max_abs = ") != std::string::npos);
  const Outcome traced = run({"synth", graph("K4"), "--trace", "-o", (scratch() / "k4.json").string()});
  CHECK(traced.code == 0);
  CHECK(traced.err.find("\"building_phi\"") != std::string::npos);
}

TEST_CASE("oracle-nz") {
  const Outcome k4 = run({"oracle-nz", graph("K4"), "--group", "z6"});
  CHECK(k4.code == 0);
  CHECK(k4.out.find("nowhere-zero") != std::string::npos);
  const Outcome pet = run({"oracle-nz", graph("petersen"), "--group", "zk:4"});
  CHECK(pet.code == 1);
  CHECK(pet.out.find("no nowhere-zero") != std::string::npos);
  CHECK(run({"oracle-nz", graph("K4"), "--group", "q7"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "/nonexistent.graph"}).code == 2);
  CHECK(run({"exact", graph("T3"), "--kmax", "many"}).code == 2);
  const auto dir = scratch();
  const std::string loop = (dir / "loop.graph").string();
  std::ofstream(loop) << "1 1\n0 0\n";
  CHECK(run({"check", loop}).code == 2);
}

TEST_CASE("batch") {
  const auto dir = scratch() / "batch";
  std::filesystem::create_directories(dir);
  for (const char* name : {"T3", "C4", "K4"}) {
    std::filesystem::copy_file(graph(name), dir / (std::string(name) + ".graph"),
                               std::filesystem::copy_options::overwrite_existing);
  }
  const std::string report = (scratch() / "report.csv").string();
  const Outcome b = run({"batch", dir.string(), "--report", report, "--jobs", "2"});
  CHECK(b.code == 0);
  std::ifstream in(report);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("status") != std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) ++rows;
    if (line.find("C4") != std::string::npos) CHECK(line.find("not_admissible") != std::string::npos);
  }
  CHECK(rows == 3);
}
