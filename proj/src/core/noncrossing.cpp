#include "core/noncrossing.hpp"

#include "core/errors.hpp"
#include "core/limits.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace aoforge {

RootedSpanningTree::RootedSpanningTree(int n, std::vector<int> parents) : n_(n), parent_(std::move(parents)) {
  if (n < 1) throw InvalidArgument("rooted spanning tree needs at least one vertex");
  if (static_cast<int>(parent_.size()) != n) {
    throw InvalidArgument("tree lists " + std::to_string(parent_.size()) + " parents for " + std::to_string(n) + " vertices");
  }
  for (int v = 1; v <= n; ++v) {
    int u = parent(v);
    if (u < 1 || u > n + 1 || u == v) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has invalid parent " + std::to_string(u));
    }
  }
  // Every vertex must reach the root within n steps.
  for (int v = 1; v <= n; ++v) {
    int x = v;
    for (int steps = 0; x != root(); ++steps) {
      if (steps > n) throw InvalidArgument("parent links from vertex " + std::to_string(v) + " form a cycle");
      x = parent(x);
    }
  }
}

int RootedSpanningTree::depth(int v) const {
  int d = 0;
  for (int x = v; x != root(); x = parent(x)) ++d;
  return d;
}

void validate_tree(const SimpleGraph& g, const RootedSpanningTree& t) {
  if (t.vertex_count() != g.vertex_count()) {
    throw InvalidArgument("tree has " + std::to_string(t.vertex_count()) + " vertices but the graph has " +
                          std::to_string(g.vertex_count()));
  }
  for (int v = 1; v <= t.vertex_count(); ++v) {
    int u = t.parent(v);
    if (u != t.root() && !g.adjacent(u, v)) {
      throw InvalidArgument("tree edge {" + std::to_string(v) + "," + std::to_string(u) + "} is not an edge of the graph");
    }
  }
}

DepictionFunction::DepictionFunction(std::vector<int> position) : position_(std::move(position)) {
  std::vector<bool> hit(position_.size(), false);
  for (int p : position_) {
    if (p < 0 || p >= static_cast<int>(position_.size()) || hit[static_cast<std::size_t>(p)]) {
      throw InvalidArgument("depiction function is not a bijection onto 0..n");
    }
    hit[static_cast<std::size_t>(p)] = true;
  }
  if (!position_.empty() && position_.back() != 0) throw InvalidArgument("depiction function must send the root to 0");
}

std::vector<int> DepictionFunction::inverse() const {
  std::vector<int> inv(position_.size(), 0);
  for (std::size_t v = 0; v < position_.size(); ++v) inv[static_cast<std::size_t>(position_[v])] = static_cast<int>(v) + 1;
  return inv;
}

bool tree_order_precedes(const RootedSpanningTree& t, int i, int j) {
  if (i == j) return false;
  int di = t.depth(i);
  int dj = t.depth(j);
  int x = i;
  int y = j;
  for (; di > dj; --di) x = t.parent(x);
  for (; dj > di; --dj) y = t.parent(y);
  if (x == y) return x == i;  // one is an ancestor of the other
  while (t.parent(x) != t.parent(y)) {
    x = t.parent(x);
    y = t.parent(y);
  }
  // x and y are the children of the meeting vertex on the paths from i and j.
  return x > y;
}

DepictionFunction canonical_depiction(const RootedSpanningTree& t) {
  int n = t.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) order[static_cast<std::size_t>(v - 1)] = v;
  auto less = [&](int a, int b) { return tree_order_precedes(t, a, b); };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (!less(order[a], order[b]) || less(order[b], order[a])) {
        throw InternalError("tree order is not a strict total order at vertices " + std::to_string(order[a]) + " and " +
                            std::to_string(order[b]));
      }
    }
  }
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    position[static_cast<std::size_t>(order[rank] - 1)] = static_cast<int>(rank) + 1;
  }
  return DepictionFunction(std::move(position));
}

bool is_order_reversing(const RootedSpanningTree& t, const DepictionFunction& p) {
  for (int v = 1; v <= t.vertex_count(); ++v) {
    if (p(t.parent(v)) >= p(v)) return false;
  }
  return true;
}

bool satisfies_sibling_order(const RootedSpanningTree& t, const DepictionFunction& p) {
  for (int i = 1; i <= t.vertex_count(); ++i) {
    for (int j = i + 1; j <= t.vertex_count(); ++j) {
      if (t.parent(i) == t.parent(j) && p(i) <= p(j)) return false;
    }
  }
  return true;
}

bool is_noncrossing(const RootedSpanningTree& t, const DepictionFunction& p) {
  int n = t.vertex_count();
  for (int j = 1; j <= n; ++j) {
    int lo1 = std::min(p(j), p(t.parent(j)));
    int hi1 = std::max(p(j), p(t.parent(j)));
    for (int m = 1; m <= n; ++m) {
      int lo2 = std::min(p(m), p(t.parent(m)));
      int hi2 = std::max(p(m), p(t.parent(m)));
      if (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) return false;
    }
  }
  return true;
}

TreeConstruction monomial_to_tree(const SimpleGraph& g, std::span<const int> a) {
  int n = g.vertex_count();
  if (static_cast<int>(a.size()) != n) {
    throw InvalidArgument("monomial has " + std::to_string(a.size()) + " exponents for " + std::to_string(n) + " vertices");
  }
  for (int x : a) {
    if (x < 0) throw InvalidArgument("monomial exponents must be non-negative");
  }
  int root = n + 1;
  std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);  // indexed by vertex-1
  std::vector<int> placed_at{root};                                  // f: position -> vertex
  position[static_cast<std::size_t>(root - 1)] = 0;
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  TreeConstruction out;
  for (int step = 1; step <= n; ++step) {
    TraceStep trace;
    trace.step = step;
    std::pair<int, int> best{-1, -1};
    for (int j = 1; j <= n; ++j) {
      if (position[static_cast<std::size_t>(j - 1)] >= 0) continue;
      // Placed neighbours of j in G_r; the root is always one of them.
      std::vector<int> levels{0};
      g.neighbors(j).for_each([&](int w) {
        int pw = position[static_cast<std::size_t>(w - 1)];
        if (pw >= 0) levels.push_back(pw);
      });
      std::sort(levels.begin(), levels.end());
      int aj = a[static_cast<std::size_t>(j - 1)];
      if (aj >= static_cast<int>(levels.size())) continue;
      std::pair<int, int> candidate{levels[static_cast<std::size_t>(aj)], j};
      trace.admissible.push_back(candidate);
      best = std::max(best, candidate);
    }
    if (best.second < 0) {
      std::string text = "(";
      for (std::size_t i = 0; i < a.size(); ++i) text += (i ? "," : "") + std::to_string(a[i]);
      throw InvalidArgument("monomial " + text + ") is not standard for T_G: no admissible pair at step " +
                            std::to_string(step));
    }
    auto [k, j] = best;
    int attach = placed_at[static_cast<std::size_t>(k)];
    position[static_cast<std::size_t>(j - 1)] = step;
    placed_at.push_back(j);
    parent[static_cast<std::size_t>(j - 1)] = attach;
    trace.vertex = j;
    trace.anchor = k;
    trace.parent = attach;
    out.trace.push_back(std::move(trace));
  }
  out.tree = RootedSpanningTree(n, std::move(parent));
  out.depiction = DepictionFunction(std::move(position));
  return out;
}

std::vector<int> tree_to_monomial(const SimpleGraph& g, const RootedSpanningTree& t) {
  validate_tree(g, t);
  DepictionFunction p = canonical_depiction(t);
  int n = g.vertex_count();
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int threshold = p(t.parent(i));
    int count = threshold > 0 ? 1 : 0;  // the root, at position 0
    g.neighbors(i).for_each([&](int j) { count += p(j) < threshold; });
    b[static_cast<std::size_t>(i - 1)] = count;
  }
  return b;
}

TreeOrientation tree_to_orientation(const SimpleGraph& g, const RootedSpanningTree& t) {
  validate_tree(g, t);
  DepictionFunction p = canonical_depiction(t);
  int n = g.vertex_count();
  TreeOrientation out;
  out.orientation = Orientation::trivial(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    int u = g.edge(e).u;
    int v = g.edge(e).v;
    if (p(v) <= p(t.parent(u))) {
      out.orientation.set(e, EdgeState::Forward);
    } else if (p(u) <= p(t.parent(v))) {
      out.orientation.set(e, EdgeState::Backward);
    }
  }
  out.flagged = true;
  for (int i = 1; i <= n && out.flagged; ++i) {
    g.neighbors(i).for_each([&](int j) {
      if (p(t.parent(i)) < p(j) && p(j) < p(i)) out.flagged = false;
    });
  }
  if (out.flagged != out.orientation.is_complete()) {
    throw InternalError("flag and orientation completeness disagree for a spanning tree");
  }
  for (int v = 1; v <= n; ++v) out.linear_extension.push_back(n + 1 - p(v));
  out.extension_valid = out.flagged;
  for (std::size_t e = 0; e < g.edge_count() && out.extension_valid; ++e) {
    auto [tail, head] = out.orientation.arc(g, e);
    out.extension_valid = out.linear_extension[static_cast<std::size_t>(tail - 1)] <
                          out.linear_extension[static_cast<std::size_t>(head - 1)];
  }
  return out;
}

RootedSpanningTree ao_to_tree(const SimpleGraph& g, const Orientation& o) {
  check_orientation(g, o);
  if (!o.is_complete() || !is_acyclic(g, o)) throw InvalidArgument("ao_to_tree needs an acyclic orientation");
  std::vector<int> outdeg = out_degrees(g, o);
  return monomial_to_tree(g, outdeg).tree;
}

std::vector<RootedSpanningTree> enumerate_rooted_spanning_trees(const SimpleGraph& g) {
  int n = g.vertex_count();
  require_size("enumerate_rooted_spanning_trees", n, 9);
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    choices[static_cast<std::size_t>(v - 1)] = g.neighbors(v).elements();
    choices[static_cast<std::size_t>(v - 1)].push_back(n + 1);
  }
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  std::vector<RootedSpanningTree> out;
  auto reaches_root = [&]() {
    // state: 0 unknown, 1 in progress, 2 reaches root
    std::vector<int> state(static_cast<std::size_t>(n) + 2, 0);
    state[static_cast<std::size_t>(n + 1)] = 2;
    for (int v = 1; v <= n; ++v) {
      std::vector<int> path;
      int x = v;
      while (state[static_cast<std::size_t>(x)] == 0) {
        state[static_cast<std::size_t>(x)] = 1;
        path.push_back(x);
        x = parent[static_cast<std::size_t>(x - 1)];
      }
      if (state[static_cast<std::size_t>(x)] == 1) return false;
      for (int y : path) state[static_cast<std::size_t>(y)] = 2;
    }
    return true;
  };
  std::function<void(int)> visit = [&](int v) {
    if (v > n) {
      if (reaches_root()) out.emplace_back(n, parent);
      return;
    }
    for (int u : choices[static_cast<std::size_t>(v - 1)]) {
      parent[static_cast<std::size_t>(v - 1)] = u;
      visit(v + 1);
    }
  };
  visit(1);
  std::sort(out.begin(), out.end());
  return out;
}

NCPartition::NCPartition(std::vector<int> block_of) {
  std::map<int, int> relabel;
  block_of_.reserve(block_of.size());
  for (int b : block_of) {
    auto it = relabel.find(b);
    if (it == relabel.end()) it = relabel.emplace(b, static_cast<int>(relabel.size())).first;
    block_of_.push_back(it->second);
  }
}

NCPartition NCPartition::singletons(int size) {
  std::vector<int> ids(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) ids[static_cast<std::size_t>(i)] = i;
  return NCPartition(std::move(ids));
}

NCPartition NCPartition::from_blocks(int size, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(static_cast<std::size_t>(size), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidArgument("partition has an empty block");
    for (int x : blocks[b]) {
      if (x < 0 || x >= size) throw InvalidArgument("partition element " + std::to_string(x) + " out of range");
      if (ids[static_cast<std::size_t>(x)] >= 0) throw InvalidArgument("element " + std::to_string(x) + " appears twice");
      ids[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  }
  for (int id : ids) {
    if (id < 0) throw InvalidArgument("partition does not cover 0.." + std::to_string(size - 1));
  }
  return NCPartition(std::move(ids));
}

int NCPartition::block_count() const {
  int count = 0;
  for (int b : block_of_) count = std::max(count, b + 1);
  return count;
}

std::vector<std::vector<int>> NCPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count()));
  for (std::size_t x = 0; x < block_of_.size(); ++x) out[static_cast<std::size_t>(block_of_[x])].push_back(static_cast<int>(x));
  return out;
}

bool NCPartition::is_noncrossing() const {
  auto m = block_of_.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (block_of_[a] == block_of_[b]) continue;
      for (std::size_t c = b + 1; c < m; ++c) {
        if (block_of_[c] != block_of_[a]) continue;
        for (std::size_t d = c + 1; d < m; ++d) {
          if (block_of_[d] == block_of_[b]) return false;
        }
      }
    }
  return true;
}

NCPartition NCPartition::merge(int x, int y) const {
  int bx = block_of(x);
  int by = block_of(y);
  std::vector<int> ids = block_of_;
  for (int& id : ids) {
    if (id == by) id = bx;
  }
  return NCPartition(std::move(ids));
}

void validate_chain(const NCChain& c) {
  if (c.partitions.size() < 2) throw InvalidArgument("a maximal chain needs at least two partitions");
  int size = c.partitions.front().ground_size();
  int n = size - 1;
  if (static_cast<int>(c.partitions.size()) != n + 1) {
    throw InvalidArgument("maximal chain on {0.." + std::to_string(n) + "} must have " + std::to_string(n + 1) +
                          " partitions, got " + std::to_string(c.partitions.size()));
  }
  if (c.partitions.front() != NCPartition::singletons(size)) throw InvalidArgument("chain must start with singletons");
  for (std::size_t t = 0; t < c.partitions.size(); ++t) {
    const NCPartition& pi = c.partitions[t];
    if (pi.ground_size() != size) throw InvalidArgument("chain partitions have different ground sets");
    if (!pi.is_noncrossing()) throw InvalidArgument("partition " + std::to_string(t) + " of the chain is crossing");
    if (pi.block_count() != size - static_cast<int>(t)) {
      throw InvalidArgument("step " + std::to_string(t) + " of the chain does not merge exactly two blocks");
    }
    if (t == 0) continue;
    const NCPartition& prev = c.partitions[t - 1];
    // Refinement: each block of prev lies inside one block of pi.
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        if (prev.block_of(x) == prev.block_of(y) && pi.block_of(x) != pi.block_of(y)) {
          throw InvalidArgument("partition " + std::to_string(t) + " does not coarsen its predecessor");
        }
      }
    }
  }
}

namespace {

// The two blocks of prev merged in next, as (element that stops being a block
// minimum, largest element of the other block below it).
std::pair<int, int> merged_step(const NCPartition& prev, const NCPartition& next) {
  std::vector<std::vector<int>> blocks = prev.blocks();
  std::vector<int> mins;
  for (const auto& b : blocks) mins.push_back(b.front());
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      if (next.block_of(mins[a]) != next.block_of(mins[b])) continue;
      // blocks sorted by minimum, so blocks[b] has the larger minimum
      int top = mins[b];
      int below = -1;
      for (int x : blocks[a]) {
        if (x < top) below = std::max(below, x);
      }
      return {top, below};
    }
  }
  throw InvalidArgument("chain step merges no blocks");
}

}  // namespace

DepictedTree chain_to_tree(const NCChain& c) {
  validate_chain(c);
  int n = c.partitions.front().ground_size() - 1;
  std::vector<int> top(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> below(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> vertex_at(static_cast<std::size_t>(n) + 1, 0);
  vertex_at[0] = n + 1;
  for (int i = 1; i <= n; ++i) {
    auto [t, b] = merged_step(c.partitions[static_cast<std::size_t>(i - 1)], c.partitions[static_cast<std::size_t>(i)]);
    top[static_cast<std::size_t>(i)] = t;
    below[static_cast<std::size_t>(i)] = b;
    vertex_at[static_cast<std::size_t>(t)] = i;
  }
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    parent[static_cast<std::size_t>(i - 1)] = vertex_at[static_cast<std::size_t>(below[static_cast<std::size_t>(i)])];
    position[static_cast<std::size_t>(i - 1)] = top[static_cast<std::size_t>(i)];
  }
  return DepictedTree{RootedSpanningTree(n, std::move(parent)), DepictionFunction(std::move(position))};
}

NCChain tree_to_chain(const RootedSpanningTree& t) {
  int n = t.vertex_count();
  DepictionFunction p = canonical_depiction(t);
  NCChain c;
  c.partitions.push_back(NCPartition::singletons(n + 1));
  for (int i = 1; i <= n; ++i) {
    const NCPartition& prev = c.partitions.back();
    int x = p(i);
    int y = p(t.parent(i));
    if (prev.block_of(x) == prev.block_of(y)) {
      throw InternalError("tree_to_chain: step " + std::to_string(i) + " merges a block with itself");
    }
    NCPartition next = prev.merge(x, y);
    if (!next.is_noncrossing()) throw InternalError("tree_to_chain: step " + std::to_string(i) + " is crossing");
    c.partitions.push_back(std::move(next));
  }
  return c;
}

namespace {

std::vector<NCPartition> noncrossing_successors(const NCPartition& pi) {
  std::vector<NCPartition> out;
  std::vector<std::vector<int>> blocks = pi.blocks();
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      NCPartition next = pi.merge(blocks[a].front(), blocks[b].front());
      if (next.is_noncrossing()) out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

std::vector<NCChain> enumerate_nc_maximal_chains(int n) {
  require_size("enumerate_nc_maximal_chains", n, 6);
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<NCChain> out;
  NCChain current;
  current.partitions.push_back(NCPartition::singletons(n + 1));
  std::function<void()> visit = [&]() {
    const NCPartition& last = current.partitions.back();
    if (last.block_count() == 1) {
      out.push_back(current);
      return;
    }
    for (NCPartition& next : noncrossing_successors(last)) {
      current.partitions.push_back(std::move(next));
      visit();
      current.partitions.pop_back();
    }
  };
  visit();
  std::sort(out.begin(), out.end());
  return out;
}

Integer count_nc_maximal_chains(int n) {
  require_size("count_nc_maximal_chains", n, 7);
  if (n < 1) throw InvalidArgument("n must be positive");
  std::map<NCPartition, Integer> memo;
  std::function<Integer(const NCPartition&)> count = [&](const NCPartition& pi) -> Integer {
    if (pi.block_count() == 1) return 1;
    auto it = memo.find(pi);
    if (it != memo.end()) return it->second;
    Integer total = 0;
    for (const NCPartition& next : noncrossing_successors(pi)) total += count(next);
    memo.emplace(pi, total);
    return total;
  };
  return count(NCPartition::singletons(n + 1));
}

std::vector<NCPartition> enumerate_noncrossing_partitions(int size) {
  std::vector<NCPartition> out;
  if (size <= 0) return out;
  std::vector<int> rgs(static_cast<std::size_t>(size), 0);
  std::function<void(int, int)> visit = [&](int i, int max_block) {
    if (i == size) {
      NCPartition pi(rgs);
      if (pi.is_noncrossing()) out.push_back(std::move(pi));
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      visit(i + 1, std::max(max_block, b));
    }
  };
  visit(1, 0);
  return out;
}

ForestIdentity forest_identity(int n) {
  require_size("forest_identity", n, 8);
  if (n < 1) throw InvalidArgument("n must be positive");
  ForestIdentity out;
  mpz_ui_pow_ui(out.lhs.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
  out.rhs = 0;
  Integer total = factorial(static_cast<unsigned>(n));
  for (const NCPartition& pi : enumerate_noncrossing_partitions(n)) {
    Integer denom = 1;
    for (const auto& b : pi.blocks()) denom *= factorial(static_cast<unsigned>(b.size()));
    out.rhs += total / denom;
    ++out.partitions;
  }
  return out;
}

}  // namespace aoforge
