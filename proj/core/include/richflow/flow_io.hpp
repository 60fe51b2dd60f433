#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "richflow/flow.hpp"

namespace richflow {

/// One "edges" entry of a flow file.
struct FlowFileEdge {
  EdgeId id = -1;
  VertexId tail = -1;
  VertexId head = -1;
  Element value;
};

/// A flow file as read from disk, before binding to a graph.
struct FlowFile {
  Group group = Group::integer(2);
  std::vector<FlowFileEdge> edges;
};

/// Serializes to the certificate format:
///   {"format": 1, "group": "int", "bound": B, "edges": [{"id", "tail", "head", "value"}]}
/// Modular flows write "k" instead of "bound"; Zk x Z2 values are [a, b].
std::string flow_to_json(const Multigraph& g, const Flow& phi);

/// Throws ParseError on malformed JSON or schema violations.
FlowFile parse_flow_file(std::string_view text);
FlowFile read_flow_file(const std::string& path);

/// Empty when every graph edge appears exactly once with matching tail and
/// head; otherwise a description of the first mismatch.
std::string flow_file_mismatch(const Multigraph& g, const FlowFile& file);

/// Throws ParseError when flow_file_mismatch is non-empty.
Flow bind_flow(const Multigraph& g, const FlowFile& file);

}  // namespace richflow
