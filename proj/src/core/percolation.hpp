#pragma once

#include "core/graph.hpp"
#include "core/monomial.hpp"

#include <vector>

namespace aoforge {

// k-neighbour bootstrap percolation on a graph.
struct PercolationInstance {
  SimpleGraph graph;
  int k = 1;

  PercolationInstance(SimpleGraph g, int threshold);
};

// Least fixed point of A -> A | { i : |N(i) & A| >= k }.
VertexSet closure(const PercolationInstance& inst, VertexSet a);
bool percolates(const PercolationInstance& inst, VertexSet a);

// Every nonempty s with degout_s(i) < k for all i in s, ordered by size then
// mask (n <= 20).
std::vector<VertexSet> generators_C(const PercolationInstance& inst);
// Square-free ideal generated by the indicator monomials of generators_C.
MonomialIdeal percolation_ideal(const PercolationInstance& inst);

// Sets A whose complement indicator monomial is standard for the percolation
// ideal, ordered by size then mask.
std::vector<VertexSet> percolating_sets(const PercolationInstance& inst);
// The same family obtained by running closure on all 2^n subsets.
std::vector<VertexSet> percolating_sets_by_closure(const PercolationInstance& inst);
int minimal_percolating_size(const PercolationInstance& inst);

}  // namespace aoforge
