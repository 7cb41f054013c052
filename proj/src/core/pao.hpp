#pragma once

#include "core/graph.hpp"
#include "core/orientation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace aoforge {

// Family of subsets of 1..n stored as a bitset over all 2^n subsets.
class IdealFamily {
public:
  explicit IdealFamily(int n = 0);

  int ground_size() const { return n_; }
  void insert(VertexSet s);
  bool contains(VertexSet s) const;
  bool is_subset_of(const IdealFamily& other) const;
  std::size_t size() const;
  // Members sorted by cardinality, then by mask.
  std::vector<VertexSet> sets() const;

  bool closed_under_union_and_intersection() const;
  // Lengths of the shortest and longest maximal chains from the smallest to the
  // largest member; equal when the family is graded.
  std::pair<int, int> maximal_chain_lengths() const;

  friend bool operator==(const IdealFamily&, const IdealFamily&) = default;

private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

// Set partition of a vertex set into blocks that induce connected subgraphs.
// Blocks are ordered by their smallest vertex.
class ConnectedPartition {
public:
  ConnectedPartition() = default;
  ConnectedPartition(const SimpleGraph& g, std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  VertexSet support() const;
  // Index of the block containing v, or -1.
  int block_of(int v) const;

  friend bool operator==(const ConnectedPartition&, const ConnectedPartition&) = default;
  friend auto operator<=>(const ConnectedPartition&, const ConnectedPartition&) = default;

private:
  std::vector<VertexSet> blocks_;
};

// Partial acyclic orientation of G[support]: a connected partition together with
// an acyclic orientation of its quotient graph, stored as arcs between block
// indices. Vertex labels are those of the ambient graph.
struct Pao {
  ConnectedPartition partition;
  std::vector<std::pair<int, int>> arcs;  // sorted (from_block, to_block)

  const std::vector<VertexSet>& blocks() const { return partition.blocks(); }
  std::size_t block_count() const { return partition.block_count(); }
  VertexSet support() const { return partition.support(); }
  int dim() const { return support().size() - static_cast<int>(block_count()); }
  // preds[b] = bit mask of blocks with an arc into block b.
  std::vector<std::uint32_t> block_predecessors() const;

  friend bool operator==(const Pao&, const Pao&) = default;
  friend auto operator<=>(const Pao&, const Pao&) = default;
};

// Every PAO of G[within] in canonical order; within defaults to all vertices.
std::vector<Pao> enumerate_paos(const SimpleGraph& g);
std::vector<Pao> enumerate_paos(const SimpleGraph& g, VertexSet within);

// Checks the PAO invariants against g; throws InvalidArgument on failure.
void validate_pao(const SimpleGraph& g, const Pao& p);

// Unions of down-closed block sets, as subsets of 1..n with n = g.vertex_count().
IdealFamily order_ideal_family(const SimpleGraph& g, const Pao& p);

// Degree statistics of the edge-level orientation of G[support]; entries for
// vertices outside the support are zero.
std::vector<int> pao_in_degrees(const SimpleGraph& g, const Pao& p);
std::vector<int> pao_out_degrees(const SimpleGraph& g, const Pao& p);
std::vector<int> pao_no_out_degrees(const SimpleGraph& g, const Pao& p);

// Edge-level orientation of a PAO whose support is all of G.
Orientation edge_orientation(const SimpleGraph& g, const Pao& p);
// The PAO with singleton blocks corresponding to an acyclic orientation.
Pao pao_from_orientation(const SimpleGraph& g, const Orientation& o);

// "{1,2},{3}|1>3": blocks, then arcs named by block minima.
std::string encode(const Pao& p);

}  // namespace aoforge
