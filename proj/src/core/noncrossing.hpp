#pragma once

#include "core/graph.hpp"
#include "core/orientation.hpp"
#include "core/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aoforge {

// Spanning tree of G_r stored as parent links; the root is n+1.
class RootedSpanningTree {
public:
  RootedSpanningTree() = default;
  // parent[i-1] is the parent of vertex i, a value in 1..n+1.
  RootedSpanningTree(int n, std::vector<int> parent);

  int vertex_count() const { return n_; }
  int root() const { return n_ + 1; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& parents() const { return parent_; }
  int depth(int v) const;

  friend bool operator==(const RootedSpanningTree&, const RootedSpanningTree&) = default;
  friend auto operator<=>(const RootedSpanningTree&, const RootedSpanningTree&) = default;

private:
  int n_ = 0;
  std::vector<int> parent_;
};

// Throws InvalidArgument unless every tree edge is an edge of G_r.
void validate_tree(const SimpleGraph& g, const RootedSpanningTree& t);

// Bijection from 1..n+1 to 0..n with the root sent to 0.
class DepictionFunction {
public:
  DepictionFunction() = default;
  explicit DepictionFunction(std::vector<int> position);  // position[v-1] for v = 1..n+1

  int operator()(int v) const { return position_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& positions() const { return position_; }
  // inverse()[k] is the vertex at position k.
  std::vector<int> inverse() const;

  friend bool operator==(const DepictionFunction&, const DepictionFunction&) = default;

private:
  std::vector<int> position_;
};

// Whether i precedes j in the total order used to build the canonical depiction.
bool tree_order_precedes(const RootedSpanningTree& t, int i, int j);

DepictionFunction canonical_depiction(const RootedSpanningTree& t);

bool is_order_reversing(const RootedSpanningTree& t, const DepictionFunction& p);
// Siblings i < j satisfy p(i) > p(j).
bool satisfies_sibling_order(const RootedSpanningTree& t, const DepictionFunction& p);
// No tree edges (j,i), (m,k) with p(i) < p(k) < p(j) < p(m).
bool is_noncrossing(const RootedSpanningTree& t, const DepictionFunction& p);

struct TraceStep {
  int step = 0;
  int vertex = 0;     // j, placed at position `step`
  int anchor = 0;     // k, the position it hangs from
  int parent = 0;     // f(k)
  std::vector<std::pair<int, int>> admissible;  // all admissible (k, j)
};

struct TreeConstruction {
  RootedSpanningTree tree;
  DepictionFunction depiction;
  std::vector<TraceStep> trace;
};

// Builds T_a by repeatedly taking the lexicographically maximal admissible pair.
TreeConstruction monomial_to_tree(const SimpleGraph& g, std::span<const int> a);
std::vector<int> tree_to_monomial(const SimpleGraph& g, const RootedSpanningTree& t);

struct TreeOrientation {
  Orientation orientation;
  bool flagged = false;                 // no edge {i,j} with p(i_r) < p(j) < p(i)
  std::vector<int> linear_extension;    // f(v) = n + 1 - p(v)
  bool extension_valid = false;         // f respects every oriented edge
};

TreeOrientation tree_to_orientation(const SimpleGraph& g, const RootedSpanningTree& t);
RootedSpanningTree ao_to_tree(const SimpleGraph& g, const Orientation& o);

// All spanning trees of G_r in lexicographic order of parent vectors.
std::vector<RootedSpanningTree> enumerate_rooted_spanning_trees(const SimpleGraph& g);

// Set partition of {0, ..., size-1} as a block-index array; block 0 holds 0 and
// the remaining blocks are numbered by their smallest element.
class NCPartition {
public:
  NCPartition() = default;
  explicit NCPartition(std::vector<int> block_of);
  static NCPartition singletons(int size);
  static NCPartition from_blocks(int size, const std::vector<std::vector<int>>& blocks);

  int ground_size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const;
  int block_of(int x) const { return block_of_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& block_indices() const { return block_of_; }
  std::vector<std::vector<int>> blocks() const;
  bool is_noncrossing() const;
  // Merges the blocks of x and y.
  NCPartition merge(int x, int y) const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
  friend auto operator<=>(const NCPartition&, const NCPartition&) = default;

private:
  std::vector<int> block_of_;
};

struct NCChain {
  std::vector<NCPartition> partitions;  // pi_0, ..., pi_n over {0..n}
  friend bool operator==(const NCChain&, const NCChain&) = default;
  friend auto operator<=>(const NCChain&, const NCChain&) = default;
};

void validate_chain(const NCChain& c);

struct DepictedTree {
  RootedSpanningTree tree;
  DepictionFunction depiction;
};

DepictedTree chain_to_tree(const NCChain& c);
NCChain tree_to_chain(const RootedSpanningTree& t);

std::vector<NCChain> enumerate_nc_maximal_chains(int n);
Integer count_nc_maximal_chains(int n);

// Non-crossing partitions of {0, ..., size-1}.
std::vector<NCPartition> enumerate_noncrossing_partitions(int size);

struct ForestIdentity {
  Integer lhs;  // (n+1)^(n-1)
  Integer rhs;  // sum over NC([n]) of n!/prod |B|!
  std::size_t partitions = 0;
};

ForestIdentity forest_identity(int n);

}  // namespace aoforge
