#include "richflow/integer_lift.hpp"

#include "network.hpp"
#include "richflow/errors.hpp"

namespace richflow {

Flow modular_to_integer(const Multigraph& g, const Flow& phi) {
  const Group& group = phi.group();
  if (group.is_integer() || group.is_product()) {
    throw PreconditionError("modular_to_integer: needs a single-coordinate modular flow");
  }
  if (phi.edge_count() != g.edge_count()) throw PreconditionError("modular_to_integer: edge count mismatch");
  if (!verify_flow(g, phi).conserved) throw PreconditionError("modular_to_integer: input is not a flow");

  const std::int64_t k = group.modulus();
  const int n = g.vertex_count();
  std::vector<std::int64_t> excess(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    const std::int64_t r = phi.value(e.id).first;
    excess[static_cast<std::size_t>(e.tail)] += r;
    excess[static_cast<std::size_t>(e.head)] -= r;
  }

  // x_e = 1 means g(e) = r - k. Choosing x as a 0/1 flow along tail -> head
  // with net outflow excess(v) / k at v makes g conserved.
  const int source = n;
  const int sink = n + 1;
  detail::Network net(n + 2);
  std::vector<int> arc_of(static_cast<std::size_t>(g.edge_count()), -1);
  for (const Edge& e : g.edges()) {
    if (phi.value(e.id).first != 0) arc_of[static_cast<std::size_t>(e.id)] = net.add_arc(e.tail, e.head, 1);
  }
  std::int64_t demand = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::int64_t d = excess[static_cast<std::size_t>(v)];
    if (d % k != 0) throw DefectError("modular_to_integer: excess not divisible by k");
    if (d > 0) {
      net.add_arc(source, v, d / k);
      demand += d / k;
    } else if (d < 0) {
      net.add_arc(v, sink, -d / k);
    }
  }
  if (net.min_cost_flow(source, sink, demand) != demand) {
    throw DefectError("modular_to_integer: no integer lift found");
  }

  Flow out(Group::integer(k), g.edge_count());
  for (const Edge& e : g.edges()) {
    const std::int64_t r = phi.value(e.id).first;
    const int arc = arc_of[static_cast<std::size_t>(e.id)];
    out.set(e.id, {arc >= 0 && net.flow_on(arc) > 0 ? r - k : r, 0});
  }
  if (!verify_flow(g, out).conserved) throw DefectError("modular_to_integer: lift is not conserved");
  return out;
}

}  // namespace richflow
