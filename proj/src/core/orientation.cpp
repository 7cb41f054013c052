#include "core/orientation.hpp"

#include "core/errors.hpp"
#include "core/limits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace aoforge {

Orientation Orientation::trivial(const SimpleGraph& g) {
  return Orientation(std::vector<EdgeState>(g.edge_count(), EdgeState::Unoriented));
}

Orientation Orientation::from_labelling(const SimpleGraph& g, std::span<const int> label) {
  std::vector<EdgeState> states;
  states.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    states.push_back(label[static_cast<std::size_t>(e.u - 1)] < label[static_cast<std::size_t>(e.v - 1)]
                         ? EdgeState::Forward
                         : EdgeState::Backward);
  }
  return Orientation(std::move(states));
}

bool Orientation::is_complete() const {
  return std::none_of(states_.begin(), states_.end(),
                      [](EdgeState s) { return s == EdgeState::Unoriented; });
}

void Orientation::orient(const SimpleGraph& g, int a, int b) {
  auto idx = g.edge_index(a, b);
  if (!idx) throw InvalidArgument("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  states_[*idx] = a < b ? EdgeState::Forward : EdgeState::Backward;
}

std::pair<int, int> Orientation::arc(const SimpleGraph& g, std::size_t edge) const {
  const Edge& e = g.edge(edge);
  return states_[edge] == EdgeState::Backward ? std::pair{e.v, e.u} : std::pair{e.u, e.v};
}

std::uint64_t Orientation::pack() const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    key |= static_cast<std::uint64_t>(states_[i]) << (2 * i);
  }
  return key;
}

void check_orientation(const SimpleGraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw InvalidArgument("orientation assigns " + std::to_string(o.size()) + " edges but the graph has " +
                          std::to_string(g.edge_count()));
  }
}

std::vector<int> in_degrees(const SimpleGraph& g, const Orientation& o) {
  check_orientation(g, o);
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (o.state(i) == EdgeState::Unoriented) continue;
    ++out[static_cast<std::size_t>(o.arc(g, i).second - 1)];
  }
  return out;
}

std::vector<int> out_degrees(const SimpleGraph& g, const Orientation& o) {
  check_orientation(g, o);
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (o.state(i) == EdgeState::Unoriented) continue;
    ++out[static_cast<std::size_t>(o.arc(g, i).first - 1)];
  }
  return out;
}

std::vector<int> no_out_degrees(const SimpleGraph& g, const Orientation& o) {
  std::vector<int> out = g.degrees();
  std::vector<int> outdeg = out_degrees(g, o);
  for (std::size_t v = 0; v < out.size(); ++v) out[v] -= outdeg[v];
  return out;
}

std::vector<VertexSet> predecessor_sets(const SimpleGraph& g, const Orientation& o) {
  check_orientation(g, o);
  std::vector<VertexSet> preds(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (o.state(i) == EdgeState::Unoriented) continue;
    auto [tail, head] = o.arc(g, i);
    preds[static_cast<std::size_t>(head - 1)].insert(tail);
  }
  return preds;
}

std::optional<std::vector<int>> topological_order(const SimpleGraph& g, const Orientation& o) {
  std::vector<VertexSet> preds = predecessor_sets(g, o);
  std::vector<int> indegree(preds.size());
  std::vector<VertexSet> succs(preds.size());
  for (std::size_t v = 0; v < preds.size(); ++v) {
    indegree[v] = preds[v].size();
    preds[v].for_each([&](int u) { succs[static_cast<std::size_t>(u - 1)].insert(static_cast<int>(v) + 1); });
  }
  std::deque<int> sources;
  for (std::size_t v = 0; v < preds.size(); ++v)
    if (indegree[v] == 0) sources.push_back(static_cast<int>(v) + 1);
  std::vector<int> order;
  while (!sources.empty()) {
    int v = sources.front();
    sources.pop_front();
    order.push_back(v);
    succs[static_cast<std::size_t>(v - 1)].for_each([&](int w) {
      if (--indegree[static_cast<std::size_t>(w - 1)] == 0) sources.push_back(w);
    });
  }
  if (order.size() != preds.size()) return std::nullopt;
  return order;
}

bool is_acyclic(const SimpleGraph& g, const Orientation& o) { return topological_order(g, o).has_value(); }

std::vector<VertexSet> strict_upper_sets(const SimpleGraph& g, const Orientation& o) {
  auto order = topological_order(g, o);
  if (!order) throw InvalidArgument("orientation has a directed cycle");
  std::vector<VertexSet> succs(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (o.state(i) == EdgeState::Unoriented) continue;
    auto [tail, head] = o.arc(g, i);
    succs[static_cast<std::size_t>(tail - 1)].insert(head);
  }
  std::vector<VertexSet> above(succs.size());
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    auto v = static_cast<std::size_t>(*it - 1);
    VertexSet acc = succs[v];
    succs[v].for_each([&](int w) { acc = acc | above[static_cast<std::size_t>(w - 1)]; });
    above[v] = acc;
  }
  return above;
}

std::string encode(const SimpleGraph& g, const Orientation& o, bool root_label) {
  check_orientation(g, o);
  int root = g.vertex_count();
  auto name = [&](int v) { return root_label && v == root ? std::string("r") : std::to_string(v); };
  std::string out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i > 0) out += ',';
    const Edge& e = g.edge(i);
    switch (o.state(i)) {
      case EdgeState::Forward: out += name(e.u) + "->" + name(e.v); break;
      case EdgeState::Backward: out += name(e.v) + "->" + name(e.u); break;
      case EdgeState::Unoriented: out += name(e.u) + "-" + name(e.v); break;
    }
  }
  return out;
}

namespace {

// Depth-first assignment of edge directions, pruning as soon as a new arc
// closes a directed cycle. Produces orientations in canonical order.
void extend_acyclic(const SimpleGraph& g, std::size_t edge, std::vector<EdgeState>& states,
                    std::vector<VertexSet>& reach, std::vector<Orientation>& out) {
  if (edge == g.edge_count()) {
    out.emplace_back(states);
    return;
  }
  const Edge& e = g.edge(edge);
  for (EdgeState s : {EdgeState::Forward, EdgeState::Backward}) {
    int tail = s == EdgeState::Forward ? e.u : e.v;
    int head = s == EdgeState::Forward ? e.v : e.u;
    // reach[x-1] holds x itself and everything reachable from x.
    if (reach[static_cast<std::size_t>(head - 1)].contains(tail)) continue;
    std::vector<VertexSet> saved = reach;
    VertexSet gained = reach[static_cast<std::size_t>(head - 1)];
    for (std::size_t x = 0; x < reach.size(); ++x) {
      if (reach[x].contains(tail)) reach[x] = reach[x] | gained;
    }
    states[edge] = s;
    extend_acyclic(g, edge + 1, states, reach, out);
    reach = std::move(saved);
  }
}

}  // namespace

std::vector<Orientation> enumerate_acyclic_orientations(const SimpleGraph& g) {
  require_size("enumerate_acyclic_orientations", g.vertex_count(), 16);
  std::vector<EdgeState> states(g.edge_count(), EdgeState::Unoriented);
  std::vector<VertexSet> reach;
  for (int v = 1; v <= g.vertex_count(); ++v) reach.push_back(VertexSet::single(v));
  std::vector<Orientation> out;
  extend_acyclic(g, 0, states, reach, out);
  return out;
}

std::vector<AcyclicOrientationRecord> acyclic_orientation_census(const SimpleGraph& g) {
  std::vector<AcyclicOrientationRecord> out;
  for (Orientation& o : enumerate_acyclic_orientations(g)) {
    AcyclicOrientationRecord rec{o, in_degrees(g, o), out_degrees(g, o)};
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

using Adjacency = std::vector<std::uint64_t>;  // 0-based bit masks

Adjacency drop_vertex(const Adjacency& adj, std::size_t v) {
  auto squeeze = [v](std::uint64_t m) {
    std::uint64_t low = m & ((std::uint64_t{1} << v) - 1);
    std::uint64_t high = (m >> (v + 1)) << v;
    return low | high;
  };
  Adjacency out;
  out.reserve(adj.size() - 1);
  for (std::size_t x = 0; x < adj.size(); ++x) {
    if (x != v) out.push_back(squeeze(adj[x]));
  }
  return out;
}

class AcyclicCounter {
public:
  Integer count(const Adjacency& adj) {
    // Isolated vertices contribute a factor of one.
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (adj[v] == 0) return count(drop_vertex(adj, v));
    }
    if (adj.empty()) return 1;
    auto it = memo_.find(adj);
    if (it != memo_.end()) return it->second;

    std::size_t u = 0;
    auto w = static_cast<std::size_t>(std::countr_zero(adj[0]));
    Adjacency deleted = adj;
    deleted[u] &= ~(std::uint64_t{1} << w);
    deleted[w] &= ~(std::uint64_t{1} << u);

    Adjacency merged = deleted;
    merged[u] |= merged[w];
    for (std::size_t x = 0; x < merged.size(); ++x) {
      if ((merged[x] >> w) & 1U) {
        merged[x] &= ~(std::uint64_t{1} << w);
        if (x != u) merged[x] |= std::uint64_t{1} << u;
      }
    }
    merged[u] &= ~(std::uint64_t{1} << u);
    Adjacency contracted = drop_vertex(merged, w);

    Integer result = count(deleted) + count(contracted);
    memo_.emplace(adj, result);
    return result;
  }

private:
  std::map<Adjacency, Integer> memo_;
};

}  // namespace

Integer count_acyclic_orientations(const SimpleGraph& g) {
  Adjacency adj;
  for (int v = 1; v <= g.vertex_count(); ++v) adj.push_back(g.neighbors(v).mask());
  AcyclicCounter counter;
  return counter.count(adj);
}

Integer linear_extension_count(const SimpleGraph& g, const Orientation& o) {
  check_orientation(g, o);
  if (!o.is_complete()) throw InvalidArgument("linear_extension_count needs every edge oriented");
  if (!is_acyclic(g, o)) throw InvalidArgument("linear_extension_count: orientation has a directed cycle");
  std::vector<VertexSet> preds = predecessor_sets(g, o);
  VertexSet all = g.vertices();
  std::unordered_map<VertexSet::Mask, Integer> memo;
  // Number of ways to finish a linear extension whose first |placed| values are used.
  auto extend = [&](auto&& self, VertexSet placed) -> Integer {
    if (placed == all) return 1;
    auto it = memo.find(placed.mask());
    if (it != memo.end()) return it->second;
    Integer total = 0;
    (all - placed).for_each([&](int v) {
      if (preds[static_cast<std::size_t>(v - 1)].is_subset_of(placed)) total += self(self, placed | VertexSet::single(v));
    });
    memo.emplace(placed.mask(), total);
    return total;
  };
  return extend(extend, VertexSet());
}

SubmodularityReport submodularity_check(const SimpleGraph& g, const Rational& a, const Rational& b,
                                        const Rational& c, VertexSet sigma, VertexSet rho) {
  if (!sigma.is_subset_of(g.vertices()) || !rho.is_subset_of(g.vertices())) {
    throw InvalidArgument("submodularity_check: vertex sets must lie in 1.." + std::to_string(g.vertex_count()));
  }
  if (c <= 0) throw InvalidArgument("submodularity_check: c must be positive");
  auto f = [&](VertexSet s) { return Rational(a + b * s.size() + c * g.edges_within(s)); };
  SubmodularityReport r;
  r.f_sigma = f(sigma);
  r.f_rho = f(rho);
  r.f_meet = f(sigma & rho);
  r.f_join = f(sigma | rho);
  Rational lhs = r.f_sigma + r.f_rho;
  Rational rhs = r.f_meet + r.f_join;
  r.inequality_holds = lhs <= rhs;
  r.equality = lhs == rhs;
  VertexSet left = sigma - rho;
  VertexSet right = rho - sigma;
  bool nonadjacent = true;
  left.for_each([&](int v) { nonadjacent = nonadjacent && !g.neighbors(v).intersects(right); });
  r.differences_nonadjacent = nonadjacent;
  r.equality_iff_nonadjacent = r.equality == nonadjacent;
  return r;
}

}  // namespace aoforge
