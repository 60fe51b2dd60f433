#include "richflow/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <cstdlib>
#include <numeric>

#include "richflow/connectivity.hpp"
#include "richflow/errors.hpp"

namespace richflow {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const SearchBudget& b) : limit_(b.node_limit), time_limit_(b.time_limit_s), start_(Clock::now()) {}

  /// Counts a node; false once the budget is gone.
  bool tick() {
    ++nodes_;
    if (limit_ > 0 && nodes_ > limit_) exhausted_ = true;
    if (!exhausted_ && time_limit_ > 0 && (nodes_ & 0xfff) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - start_;
      if (elapsed.count() > time_limit_) exhausted_ = true;
    }
    return !exhausted_;
  }
  [[nodiscard]] bool exhausted() const { return exhausted_; }
  [[nodiscard]] std::int64_t nodes() const { return nodes_; }

 private:
  std::int64_t limit_;
  double time_limit_;
  Clock::time_point start_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

/// Edges by decreasing degree sum, then id.
std::vector<EdgeId> search_order(const Multigraph& g) {
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  auto weight = [&](EdgeId e) { return g.degree(g.edge(e).tail) + g.degree(g.edge(e).head); };
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
  return order;
}

class FlowSearch {
 public:
  FlowSearch(const Multigraph& g, const Group& group, bool rich, Budget& budget)
      : g_(g),
        group_(group),
        rich_(rich),
        budget_(budget),
        order_(search_order(g)),
        assigned_(static_cast<std::size_t>(g.edge_count()), 0),
        value_(static_cast<std::size_t>(g.edge_count())),
        sum_(static_cast<std::size_t>(g.vertex_count())),
        open_(static_cast<std::size_t>(g.vertex_count())),
        used_abs_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) open_[static_cast<std::size_t>(v)] = g.degree(v);
    build_domain();
    build_parallel_classes();
  }

  bool run() { return search(0); }

  [[nodiscard]] Flow flow() const {
    Flow phi(group_, g_.edge_count());
    for (EdgeId e = 0; e < g_.edge_count(); ++e) phi.set(e, value_[static_cast<std::size_t>(e)]);
    return phi;
  }

 private:
  void build_domain() {
    switch (group_.kind()) {
      case GroupKind::integer:
        for (std::int64_t x = 1; x < group_.modulus(); ++x) {
          domain_.push_back({x, 0});
          domain_.push_back({-x, 0});
        }
        break;
      case GroupKind::zkxz2:
        for (std::int64_t b = 0; b < 2; ++b) {
          for (std::int64_t x = 0; x < group_.modulus(); ++x) {
            if (x != 0 || b != 0) domain_.push_back({x, b});
          }
        }
        break;
      default:
        for (std::int64_t x = 1; 2 * x <= group_.modulus(); ++x) {
          domain_.push_back({x, 0});
          if (2 * x != group_.modulus()) domain_.push_back({group_.modulus() - x, 0});
        }
        break;
    }
  }

  /// Parallel edges are interchangeable, so their values read from the
  /// lower to the higher endpoint must increase with the edge id.
  void build_parallel_classes() {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> by_ends;
    for (const Edge& e : g_.edges()) by_ends[{std::min(e.tail, e.head), std::max(e.tail, e.head)}].push_back(e.id);
    parallel_.resize(static_cast<std::size_t>(g_.edge_count()));
    for (const auto& [ends, ids] : by_ends) {
      for (EdgeId e : ids) parallel_[static_cast<std::size_t>(e)] = ids;
    }
  }

  [[nodiscard]] std::int64_t order_key(EdgeId e, Element x) const {
    const Edge& edge = g_.edge(e);
    if (edge.tail > edge.head) x = group_.negate(x);
    x = group_.normalize(x);
    return group_.is_integer() ? x.first : x.second * group_.modulus() + x.first;
  }

  [[nodiscard]] bool ordered_among_parallel(EdgeId e, Element x) const {
    const std::int64_t key = order_key(e, x);
    for (EdgeId f : parallel_[static_cast<std::size_t>(e)]) {
      if (f == e || !assigned_[static_cast<std::size_t>(f)]) continue;
      const std::int64_t other = order_key(f, value_[static_cast<std::size_t>(f)]);
      const std::int64_t lo = f < e ? other : key;
      const std::int64_t hi = f < e ? key : other;
      if (rich_ ? lo >= hi : lo > hi) return false;
    }
    return true;
  }

  [[nodiscard]] std::int64_t abs_of(Element x) const { return std::llabs(x.first); }

  [[nodiscard]] Element contribution(EdgeId e, VertexId v, Element x) const {
    return g_.edge(e).tail == v ? x : group_.negate(x);
  }

  [[nodiscard]] bool fits(EdgeId e, Element x) const {
    if (group_.is_zero(x)) return false;
    if (group_.is_integer() && abs_of(x) >= group_.modulus()) return false;
    if (!ordered_among_parallel(e, x)) return false;
    if (rich_) {
      const std::uint64_t bit = std::uint64_t{1} << abs_of(x);
      if ((used_abs_[static_cast<std::size_t>(g_.edge(e).tail)] & bit) ||
          (used_abs_[static_cast<std::size_t>(g_.edge(e).head)] & bit)) {
        return false;
      }
    }
    return true;
  }

  /// Assigns e := x and propagates forced edges; records everything on the
  /// trail. Returns false on a contradiction (the trail still needs undoing).
  bool assign(EdgeId e, Element x) {
    if (!fits(e, x)) return false;
    assigned_[static_cast<std::size_t>(e)] = 1;
    value_[static_cast<std::size_t>(e)] = x;
    trail_.push_back(e);
    for (VertexId v : {g_.edge(e).tail, g_.edge(e).head}) {
      auto& s = sum_[static_cast<std::size_t>(v)];
      s = group_.add(s, contribution(e, v, x));
      --open_[static_cast<std::size_t>(v)];
      if (rich_) used_abs_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << abs_of(x);
    }
    for (VertexId v : {g_.edge(e).tail, g_.edge(e).head}) {
      if (!vertex_ok(v)) return false;
    }
    for (VertexId v : {g_.edge(e).tail, g_.edge(e).head}) {
      if (open_[static_cast<std::size_t>(v)] != 1) continue;
      EdgeId last = -1;
      for (EdgeId f : g_.incident(v)) {
        if (!assigned_[static_cast<std::size_t>(f)]) {
          last = f;
          break;
        }
      }
      if (last < 0) continue;
      const Element need = group_.negate(sum_[static_cast<std::size_t>(v)]);
      const Element forced = g_.edge(last).tail == v ? need : group_.negate(need);
      if (!assign(last, forced)) return false;
    }
    return true;
  }

  [[nodiscard]] bool vertex_ok(VertexId v) const {
    const Element s = sum_[static_cast<std::size_t>(v)];
    const int open = open_[static_cast<std::size_t>(v)];
    if (open == 0) return group_.is_zero(s);
    if (group_.is_integer()) return std::llabs(s.first) <= open * (group_.modulus() - 1);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId e = trail_.back();
      trail_.pop_back();
      const Element x = value_[static_cast<std::size_t>(e)];
      for (VertexId v : {g_.edge(e).tail, g_.edge(e).head}) {
        auto& s = sum_[static_cast<std::size_t>(v)];
        s = group_.add(s, group_.negate(contribution(e, v, x)));
        ++open_[static_cast<std::size_t>(v)];
        if (rich_) used_abs_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << abs_of(x));
      }
      assigned_[static_cast<std::size_t>(e)] = 0;
      value_[static_cast<std::size_t>(e)] = Element{};
    }
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && assigned_[static_cast<std::size_t>(order_[pos])]) ++pos;
    if (pos == order_.size()) return true;
    const EdgeId e = order_[pos];
    const bool first = trail_.empty() && parallel_[static_cast<std::size_t>(e)].size() == 1;
    for (const Element& x : domain_) {
      if (first && group_.is_integer() && x.first < 0) continue;  // phi and -phi are equivalent
      if (!budget_.tick()) return false;
      const std::size_t mark = trail_.size();
      if (assign(e, x) && search(pos + 1)) return true;
      undo_to(mark);
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Multigraph& g_;
  Group group_;
  bool rich_;
  Budget& budget_;
  std::vector<EdgeId> order_;
  std::vector<Element> domain_;
  std::vector<char> assigned_;
  std::vector<Element> value_;
  std::vector<Element> sum_;
  std::vector<int> open_;
  std::vector<std::uint64_t> used_abs_;
  std::vector<EdgeId> trail_;
  std::vector<std::vector<EdgeId>> parallel_;
};

}  // namespace

FlowSearchResult brute_force_flow(const Multigraph& g, const Group& group, bool require_rich,
                                  const SearchBudget& budget) {
  if (require_rich && (!group.is_integer() || group.modulus() > 64)) {
    throw PreconditionError("rich search needs an integer group with bound at most 64");
  }
  Budget b(budget);
  FlowSearch search(g, group, require_rich, b);
  FlowSearchResult out;
  const bool found = search.run();
  out.nodes = b.nodes();
  if (found) {
    out.flow = search.flow();
  } else if (b.exhausted()) {
    out.status = SearchStatus::budget_exhausted;
  }
  return out;
}

ExactResult exact_rich_flow_number(const Multigraph& g, const SearchBudget& budget) {
  ExactResult out;
  if (!is_rich_flow_admissible(g).admissible) return out;
  if (g.edge_count() == 0) {
    out.value = 1;
    out.flow_witness = Flow(Group::integer(1), 0);
    return out;
  }
  const int k_max = std::min(budget.k_max, 64);
  SearchBudget remaining = budget;
  const auto start = Clock::now();
  for (int k = 2; k <= k_max; ++k) {
    // Adjacent values at a vertex need Delta distinct absolute values in 1..k-1.
    if (k - 1 < g.max_degree()) continue;
    if (budget.time_limit_s > 0) {
      const std::chrono::duration<double> used = Clock::now() - start;
      remaining.time_limit_s = budget.time_limit_s - used.count();
      if (remaining.time_limit_s <= 0) {
        out.status = SearchStatus::budget_exhausted;
        return out;
      }
    }
    if (budget.node_limit > 0) {
      remaining.node_limit = budget.node_limit - out.nodes;
      if (remaining.node_limit <= 0) {
        out.status = SearchStatus::budget_exhausted;
        return out;
      }
    }
    const FlowSearchResult r = brute_force_flow(g, Group::integer(k), true, remaining);
    out.nodes += r.nodes;
    if (r.flow) {
      out.value = k;
      out.flow_witness = r.flow;
      return out;
    }
    if (r.status == SearchStatus::budget_exhausted) {
      out.status = SearchStatus::budget_exhausted;
      return out;
    }
  }
  out.status = SearchStatus::budget_exhausted;
  return out;
}

bool is_proper_edge_coloring(const Multigraph& g, const std::vector<int>& colors, int palette) {
  if (colors.size() != static_cast<std::size_t>(g.edge_count())) return false;
  for (int c : colors) {
    if (c < 0 || c >= palette) return false;
  }
  for (const AdjacentPair& p : adjacent_pairs(g)) {
    if (colors[static_cast<std::size_t>(p.e)] == colors[static_cast<std::size_t>(p.f)]) return false;
  }
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Multigraph& g, int palette, Budget& budget)
      : g_(g),
        palette_(palette),
        budget_(budget),
        order_(search_order(g)),
        color_(static_cast<std::size_t>(g.edge_count()), -1),
        used_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  bool search(std::size_t pos, int colors_used) {
    if (pos == order_.size()) return true;
    const EdgeId e = order_[pos];
    const Edge& edge = g_.edge(e);
    const std::uint64_t busy = used_[static_cast<std::size_t>(edge.tail)] | used_[static_cast<std::size_t>(edge.head)];
    const int limit = std::min(palette_, colors_used + 1);
    for (int c = 0; c < limit; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (busy & bit) continue;
      if (!budget_.tick()) return false;
      color_[static_cast<std::size_t>(e)] = c;
      used_[static_cast<std::size_t>(edge.tail)] |= bit;
      used_[static_cast<std::size_t>(edge.head)] |= bit;
      if (search(pos + 1, std::max(colors_used, c + 1))) return true;
      used_[static_cast<std::size_t>(edge.tail)] &= ~bit;
      used_[static_cast<std::size_t>(edge.head)] &= ~bit;
      color_[static_cast<std::size_t>(e)] = -1;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  [[nodiscard]] const std::vector<int>& colors() const { return color_; }

 private:
  const Multigraph& g_;
  int palette_;
  Budget& budget_;
  std::vector<EdgeId> order_;
  std::vector<int> color_;
  std::vector<std::uint64_t> used_;
};

}  // namespace

ExactResult chromatic_index(const Multigraph& g, const SearchBudget& budget) {
  ExactResult out;
  if (g.edge_count() == 0) {
    out.value = 0;
    out.coloring_witness = std::vector<int>{};
    return out;
  }
  Budget b(budget);
  for (int palette = g.max_degree(); palette <= 64; ++palette) {
    ColoringSearch search(g, palette, b);
    if (search.search(0, 0)) {
      out.value = palette;
      out.coloring_witness = search.colors();
      out.nodes = b.nodes();
      return out;
    }
    if (b.exhausted()) break;
  }
  out.status = SearchStatus::budget_exhausted;
  out.nodes = b.nodes();
  return out;
}

}  // namespace richflow
