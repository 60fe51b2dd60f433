#pragma once

#include "richflow/flow.hpp"

namespace richflow {

/// Converts a Zk-flow (also Z2, Z6) into an integer k-flow g with the same
/// reference orientations, g(e) = phi(e) mod k, |g(e)| < k, and g(e) = 0
/// exactly where phi(e) = 0.
///
/// Every nonzero edge takes either its residue r in 1..k-1 or r - k. Which
/// edges drop by k is a 0/1 circulation problem with vertex demands
/// (sum_out r - sum_in r) / k, solved as a max-flow. The result group is
/// Group::integer(k).
Flow modular_to_integer(const Multigraph& g, const Flow& phi);

}  // namespace richflow
