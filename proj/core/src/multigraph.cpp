#include "richflow/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "richflow/errors.hpp"

namespace richflow {

Multigraph::Multigraph(int vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
}

VertexId Multigraph::add_vertex() {
  incidence_.emplace_back();
  return vertex_count() - 1;
}

EdgeId Multigraph::add_edge(VertexId tail, VertexId head) {
  if (tail < 0 || head < 0 || tail >= vertex_count() || head >= vertex_count()) {
    throw PreconditionError("edge endpoint out of range");
  }
  if (tail == head) throw PreconditionError("loops are not allowed");
  const EdgeId id = edge_count();
  edges_.push_back(Edge{id, tail, head});
  incidence_[static_cast<std::size_t>(tail)].push_back(id);
  incidence_[static_cast<std::size_t>(head)].push_back(id);
  return id;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (const auto& inc : incidence_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

int Multigraph::min_degree() const {
  if (incidence_.empty()) return 0;
  int best = static_cast<int>(incidence_.front().size());
  for (const auto& inc : incidence_) best = std::min(best, static_cast<int>(inc.size()));
  return best;
}

Multigraph Multigraph::with_edge_reversed(EdgeId e) const {
  Multigraph out(vertex_count());
  for (const Edge& ed : edges_) {
    if (ed.id == e) {
      out.add_edge(ed.head, ed.tail);
    } else {
      out.add_edge(ed.tail, ed.head);
    }
  }
  return out;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    if (a.edge(e).tail != b.edge(e).tail || a.edge(e).head != b.edge(e).head) return false;
  }
  return true;
}

EdgeSubgraph edge_subgraph(const Multigraph& g, const EdgeMask& keep) {
  EdgeSubgraph out{Multigraph(g.vertex_count()), {}};
  for (const Edge& e : g.edges()) {
    if (keep[static_cast<std::size_t>(e.id)]) {
      out.graph.add_edge(e.tail, e.head);
      out.to_parent.push_back(e.id);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexMask& keep) {
  InducedSubgraph out;
  std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (keep[static_cast<std::size_t>(v)]) {
      local[static_cast<std::size_t>(v)] = static_cast<VertexId>(out.to_parent_vertex.size());
      out.to_parent_vertex.push_back(v);
    }
  }
  out.graph = Multigraph(static_cast<int>(out.to_parent_vertex.size()));
  for (const Edge& e : g.edges()) {
    const VertexId t = local[static_cast<std::size_t>(e.tail)];
    const VertexId h = local[static_cast<std::size_t>(e.head)];
    if (t >= 0 && h >= 0) {
      out.graph.add_edge(t, h);
      out.to_parent_edge.push_back(e.id);
    }
  }
  return out;
}

namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    long long value = 0;
    const auto* first = line.data() + i;
    const auto* last = line.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                       std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

bool is_skippable(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t");
  return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

Multigraph parse_multigraph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  Multigraph g;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (is_skippable(raw)) continue;
    const auto ints = parse_ints(raw, line_no);
    if (!have_header) {
      if (ints.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": malformed header, expected \"n m\"");
      n = ints[0];
      m = ints[1];
      if (n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed header, counts out of range");
      }
      g = Multigraph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (ints.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected edge \"u v\"");
    if (g.edge_count() >= m) throw ParseError("edge count mismatch: more than " + std::to_string(m) + " edge lines");
    const long long u = ints[0];
    const long long v = ints[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (!have_header) throw ParseError("malformed header: no \"n m\" line");
  if (g.edge_count() != m) {
    throw ParseError("edge count mismatch: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(g.edge_count()));
  }
  return g;
}

Multigraph parse_multigraph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_multigraph(in);
}

Multigraph read_multigraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return parse_multigraph(in);
}

std::vector<NamedGraph> parse_multigraph_collection(std::string_view text) {
  std::vector<NamedGraph> out;
  std::string block;
  std::string name;
  bool has_data = false;
  auto flush = [&] {
    if (has_data) {
      try {
        Multigraph g = parse_multigraph_string(block);
        out.push_back({name.empty() ? "#" + std::to_string(out.size()) : name, std::move(g)});
      } catch (const ParseError& e) {
        throw ParseError("graph " + std::to_string(out.size()) + ": " + e.what());
      }
    }
    block.clear();
    name.clear();
    has_data = false;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') {
      if (name.empty() && !has_data) {
        const auto start = line.find_first_not_of(" \t", first + 1);
        if (start != std::string::npos) name = line.substr(start);
      }
    } else {
      has_data = true;
    }
    block += line;
    block += '\n';
  }
  flush();
  return out;
}

std::vector<NamedGraph> read_multigraph_collection(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_multigraph_collection(text.str());
}

std::string format_multigraph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

}  // namespace richflow
