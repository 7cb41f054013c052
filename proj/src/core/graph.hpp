#pragma once

#include "core/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace aoforge {

struct Edge {
  int u;  // u < v
  int v;
  friend constexpr bool operator==(Edge, Edge) = default;
  friend constexpr auto operator<=>(Edge, Edge) = default;
};

// Undirected simple graph on the vertices 1..n. Edges are kept sorted, and an
// edge's position in that order is its index everywhere else in the library.
class SimpleGraph {
public:
  static constexpr int kMaxVertices = VertexSet::kCapacity - 1;

  SimpleGraph() = default;
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
  int degree(int v) const { return neighbors(v).size(); }
  std::vector<int> degrees() const;
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  std::optional<std::size_t> edge_index(int u, int v) const;

  // |E(G[sigma])|
  int edges_within(VertexSet sigma) const;
  // Number of neighbours of v inside sigma.
  int degree_in(int v, VertexSet sigma) const { return (neighbors(v) & sigma).size(); }
  // Number of neighbours of v outside sigma.
  int degree_out(int v, VertexSet sigma) const { return (neighbors(v) - sigma).size(); }

  bool is_connected() const { return is_connected_within(vertices()); }
  // Whether G[sigma] is connected; the empty set counts as disconnected.
  bool is_connected_within(VertexSet sigma) const;
  std::vector<VertexSet> components() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<int> to_parent;  // to_parent[i-1] is the label in G of vertex i
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet sigma);

// G_r: adds the root n+1 adjacent to every vertex.
SimpleGraph rooted_extension(const SimpleGraph& g);

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph star_graph(int n);  // centre 1
SimpleGraph edgeless_graph(int n);
SimpleGraph grid_graph(int rows, int cols);

}  // namespace aoforge
