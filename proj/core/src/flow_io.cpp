#include "richflow/flow_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "richflow/errors.hpp"

namespace richflow {

using nlohmann::json;

std::string flow_to_json(const Multigraph& g, const Flow& phi) {
  const Group& group = phi.group();
  json doc;
  doc["format"] = 1;
  doc["group"] = group.tag();
  if (group.is_integer()) {
    doc["bound"] = group.modulus();
  } else {
    doc["k"] = group.modulus();
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    const Element x = phi.value(e.id);
    json entry;
    entry["id"] = e.id;
    entry["tail"] = e.tail;
    entry["head"] = e.head;
    if (group.is_product()) {
      entry["value"] = json::array({x.first, x.second});
    } else {
      entry["value"] = x.first;
    }
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

namespace {

Group group_from(const json& doc) {
  const std::string tag = doc.at("group").get<std::string>();
  if (tag == "int") return Group::integer(doc.at("bound").get<std::int64_t>());
  if (tag == "z2") return Group::z2();
  if (tag == "z6") return Group::z6();
  if (tag == "zk") return Group::zk(doc.at("k").get<std::int64_t>());
  if (tag == "zkxz2") return Group::zkxz2(doc.at("k").get<std::int64_t>());
  throw ParseError("unknown flow group '" + tag + "'");
}

}  // namespace

FlowFile parse_flow_file(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.contains("format") && doc.at("format").get<int>() != 1) {
      throw ParseError("unsupported flow file format version");
    }
    FlowFile file;
    file.group = group_from(doc);
    for (const json& entry : doc.at("edges")) {
      FlowFileEdge e;
      e.id = entry.at("id").get<EdgeId>();
      e.tail = entry.at("tail").get<VertexId>();
      e.head = entry.at("head").get<VertexId>();
      const json& v = entry.at("value");
      if (file.group.is_product()) {
        if (!v.is_array() || v.size() != 2) throw ParseError("Zk x Z2 values must be [a, b]");
        e.value = {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
      } else {
        e.value = {v.get<std::int64_t>(), 0};
      }
      file.edges.push_back(e);
    }
    return file;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("flow file: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("flow file: ") + ex.what());
  }
}

FlowFile read_flow_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open flow file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_flow_file(buf.str());
}

std::string flow_file_mismatch(const Multigraph& g, const FlowFile& file) {
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (const FlowFileEdge& e : file.edges) {
    if (e.id < 0 || e.id >= g.edge_count()) return "edge id " + std::to_string(e.id) + " not in graph";
    if (seen[static_cast<std::size_t>(e.id)]) return "edge id " + std::to_string(e.id) + " listed twice";
    seen[static_cast<std::size_t>(e.id)] = 1;
    const Edge& ge = g.edge(e.id);
    if (ge.tail != e.tail || ge.head != e.head) {
      return "edge " + std::to_string(e.id) + " is " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
             " in the flow file but " + std::to_string(ge.tail) + "->" + std::to_string(ge.head) + " in the graph";
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!seen[static_cast<std::size_t>(e)]) return "edge " + std::to_string(e) + " missing from flow file";
  }
  return {};
}

Flow bind_flow(const Multigraph& g, const FlowFile& file) {
  if (const std::string why = flow_file_mismatch(g, file); !why.empty()) throw ParseError(why);
  Flow phi(file.group, g.edge_count());
  for (const FlowFileEdge& e : file.edges) {
    // Integer values are stored verbatim so that out-of-bound entries stay visible.
    phi.set(e.id, e.value);
  }
  return phi;
}

}  // namespace richflow
