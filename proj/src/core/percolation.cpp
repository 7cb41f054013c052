#include "core/percolation.hpp"

#include "core/errors.hpp"
#include "core/limits.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace aoforge {

namespace {

constexpr int kPercolationLimit = 20;

using Mask = VertexSet::Mask;

void sort_by_size(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
  });
}

bool in_C(const PercolationInstance& inst, VertexSet sigma) {
  bool ok = !sigma.empty();
  sigma.for_each([&](int i) { ok = ok && inst.graph.degree_out(i, sigma) < inst.k; });
  return ok;
}

// contains_member[U] is set when some member of C is a subset of U, i.e. the
// indicator monomial of U lies in the percolation ideal.
std::vector<bool> ideal_membership(const PercolationInstance& inst) {
  int n = inst.graph.vertex_count();
  require_size("percolation", n, kPercolationLimit);
  const Mask count = Mask{1} << n;
  std::vector<bool> member(count, false);
  for (Mask u = 1; u < count; ++u) {
    if (in_C(inst, VertexSet(u))) {
      member[u] = true;
      continue;
    }
    for (Mask rest = u; rest != 0; rest &= rest - 1) {
      if (member[u & ~(rest & (~rest + 1))]) {
        member[u] = true;
        break;
      }
    }
  }
  return member;
}

}  // namespace

PercolationInstance::PercolationInstance(SimpleGraph g, int threshold) : graph(std::move(g)), k(threshold) {
  if (k < 1) throw InvalidArgument("percolation threshold k must be at least 1, got " + std::to_string(k));
}

VertexSet closure(const PercolationInstance& inst, VertexSet a) {
  const SimpleGraph& g = inst.graph;
  if (!a.is_subset_of(g.vertices())) throw InvalidArgument("initial set " + a.to_string() + " is not a set of vertices");
  std::vector<int> infected_neighbors(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<int> queue;
  a.for_each([&](int v) { queue.push_back(v); });
  VertexSet out = a;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    g.neighbors(v).for_each([&](int w) {
      if (out.contains(w)) return;
      if (++infected_neighbors[static_cast<std::size_t>(w - 1)] >= inst.k) {
        out.insert(w);
        queue.push_back(w);
      }
    });
  }
  return out;
}

bool percolates(const PercolationInstance& inst, VertexSet a) {
  return closure(inst, a) == inst.graph.vertices();
}

std::vector<VertexSet> generators_C(const PercolationInstance& inst) {
  int n = inst.graph.vertex_count();
  require_size("generators_C", n, kPercolationLimit);
  std::vector<VertexSet> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (in_C(inst, VertexSet(s))) out.push_back(VertexSet(s));
  }
  sort_by_size(out);
  return out;
}

MonomialIdeal percolation_ideal(const PercolationInstance& inst) {
  int n = inst.graph.vertex_count();
  std::vector<Monomial> gens;
  for (VertexSet s : generators_C(inst)) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    s.for_each([&](int i) { e[static_cast<std::size_t>(i - 1)] = 1; });
    gens.emplace_back(std::move(e));
  }
  return minimize(n, std::move(gens));
}

std::vector<VertexSet> percolating_sets(const PercolationInstance& inst) {
  std::vector<bool> member = ideal_membership(inst);
  const Mask full = inst.graph.vertices().mask();
  std::vector<VertexSet> out;
  for (Mask a = 0; a <= full; ++a) {
    if (!member[full & ~a]) out.push_back(VertexSet(a));
  }
  sort_by_size(out);
  return out;
}

std::vector<VertexSet> percolating_sets_by_closure(const PercolationInstance& inst) {
  require_size("percolating_sets_by_closure", inst.graph.vertex_count(), kPercolationLimit);
  const Mask full = inst.graph.vertices().mask();
  std::vector<VertexSet> out;
  for (Mask a = 0; a <= full; ++a) {
    if (percolates(inst, VertexSet(a))) out.push_back(VertexSet(a));
  }
  sort_by_size(out);
  return out;
}

int minimal_percolating_size(const PercolationInstance& inst) {
  std::vector<bool> member = ideal_membership(inst);
  const Mask full = inst.graph.vertices().mask();
  int best = inst.graph.vertex_count();
  for (Mask a = 0; a <= full; ++a) {
    if (!member[full & ~a]) best = std::min(best, std::popcount(a));
  }
  return best;
}

}  // namespace aoforge
