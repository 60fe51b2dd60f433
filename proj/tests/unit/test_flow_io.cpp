#include "doctest.h"
#include "support.hpp"

#include "json.hpp"
#include "richflow/errors.hpp"
#include "richflow/flow_io.hpp"

using namespace richflow;

namespace {

Flow sample(const Multigraph& g, const Group& group) {
  Flow phi(group, g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) phi.set(e, group.normalize({static_cast<std::int64_t>(e) - 2, e % 2}));
  return phi;
}

}  // namespace

TEST_CASE("certificates round trip for every group") {
  const Multigraph g = catalog::complete(4);
  for (const Group& group : {Group::integer(9), Group::zk(11), Group::z2(), Group::z6(), Group::zkxz2(11)}) {
    CAPTURE(group.describe());
    const Flow phi = sample(g, group);
    const std::string text = flow_to_json(g, phi);
    const FlowFile file = parse_flow_file(text);
    CHECK(file.group == group);
    CHECK(flow_file_mismatch(g, file).empty());
    CHECK(bind_flow(g, file) == phi);
  }
}

TEST_CASE("certificate layout") {
  const Multigraph t3 = catalog::theta(3);
  Flow phi(Group::integer(4), 3);
  phi.set(0, {1, 0});
  phi.set(1, {2, 0});
  phi.set(2, {-3, 0});
  const auto j = nlohmann::json::parse(flow_to_json(t3, phi));
  CHECK(j["format"] == 1);
  CHECK(j["group"] == "int");
  CHECK(j["bound"] == 4);
  CHECK(j["edges"].size() == 3);
  CHECK(j["edges"][2]["value"] == -3);
  CHECK(j["edges"][2]["tail"] == 0);

  Flow p(Group::zkxz2(11), 3);
  p.set(1, {3, 1});
  const auto jp = nlohmann::json::parse(flow_to_json(t3, p));
  CHECK(jp["k"] == 11);
  CHECK(jp["edges"][1]["value"] == nlohmann::json::array({3, 1}));
}

TEST_CASE("malformed certificates are parse errors") {
  CHECK_THROWS_AS(parse_flow_file("{"), ParseError);
  CHECK_THROWS_AS(parse_flow_file("[]"), ParseError);
  CHECK_THROWS_AS(parse_flow_file(R"({"format":2,"group":"int","bound":4,"edges":[]})"), ParseError);
  CHECK_THROWS_AS(parse_flow_file(R"({"format":1,"group":"q","bound":4,"edges":[]})"), ParseError);
  CHECK_THROWS_AS(parse_flow_file(R"({"format":1,"group":"int","edges":[]})"), ParseError);
  CHECK_THROWS_AS(parse_flow_file(R"({"format":1,"group":"int","bound":4,"edges":[{"id":0}]})"), ParseError);
  CHECK_THROWS_AS(parse_flow_file(R"({"format":1,"group":"zkxz2","k":5,"edges":[{"id":0,"tail":0,"head":1,"value":3}]})"),
                  ParseError);
}

TEST_CASE("certificates must match the graph") {
  const Multigraph t3 = catalog::theta(3);
  const Multigraph k4 = catalog::complete(4);
  const FlowFile file = parse_flow_file(flow_to_json(t3, Flow(Group::integer(4), 3)));
  CHECK_FALSE(flow_file_mismatch(k4, file).empty());
  CHECK_THROWS_AS(bind_flow(k4, file), ParseError);
  CHECK_FALSE(flow_file_mismatch(t3.with_edge_reversed(1), file).empty());
  CHECK_THROWS_AS(read_flow_file("/nonexistent/flow.json"), ParseError);
}
