#include "core/graph.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <string>

namespace aoforge {

namespace {

std::string pair_text(int a, int b) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

}  // namespace

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 1) throw InvalidArgument("graph must have at least one vertex, got n=" + std::to_string(n));
  if (n > kMaxVertices) {
    throw InvalidArgument("graph has " + std::to_string(n) + " vertices; at most " +
                          std::to_string(kMaxVertices) + " are supported");
  }
  adjacency_.assign(static_cast<std::size_t>(n), VertexSet());
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw InvalidArgument("edge " + pair_text(a, b) + " has an endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) throw InvalidArgument("edge " + pair_text(a, b) + " is a loop");
    if (adjacent(a, b)) throw InvalidArgument("edge " + pair_text(a, b) + " is a duplicate");
    adjacency_[static_cast<std::size_t>(a - 1)].insert(b);
    adjacency_[static_cast<std::size_t>(b - 1)].insert(a);
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int v = 1; v <= n_; ++v) out.push_back(degree(v));
  return out;
}

std::optional<std::size_t> SimpleGraph::edge_index(int u, int v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

int SimpleGraph::edges_within(VertexSet sigma) const {
  int twice = 0;
  sigma.for_each([&](int v) { twice += degree_in(v, sigma); });
  return twice / 2;
}

bool SimpleGraph::is_connected_within(VertexSet sigma) const {
  if (sigma.empty()) return false;
  VertexSet seen = VertexSet::single(sigma.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next = next | (neighbors(v) & sigma); });
    frontier = next - seen;
    seen = seen | frontier;
  }
  return seen == sigma;
}

std::vector<VertexSet> SimpleGraph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = vertices();
  while (!left.empty()) {
    VertexSet seen = VertexSet::single(left.min());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next = next | neighbors(v); });
      frontier = next - seen;
      seen = seen | frontier;
    }
    out.push_back(seen);
    left = left - seen;
  }
  return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet sigma) {
  if (sigma.empty()) throw InvalidArgument("induced_subgraph: vertex set is empty");
  if (!sigma.is_subset_of(g.vertices())) {
    throw InvalidArgument("induced_subgraph: " + sigma.to_string() + " is not a subset of 1.." +
                          std::to_string(g.vertex_count()));
  }
  InducedSubgraph out;
  out.to_parent = sigma.elements();
  std::vector<int> to_child(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    to_child[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i) + 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) {
    if (sigma.contains(e.u) && sigma.contains(e.v)) {
      edges.emplace_back(to_child[static_cast<std::size_t>(e.u)], to_child[static_cast<std::size_t>(e.v)]);
    }
  }
  out.graph = SimpleGraph(sigma.size(), edges);
  return out;
}

SimpleGraph rooted_extension(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (int v = 1; v <= n; ++v) edges.emplace_back(v, n + 1);
  return SimpleGraph(n + 1, edges);
}

SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return SimpleGraph(n, edges);
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle_graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return SimpleGraph(n, edges);
}

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph star_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return SimpleGraph(n, edges);
}

SimpleGraph edgeless_graph(int n) { return SimpleGraph(n, {}); }

SimpleGraph grid_graph(int rows, int cols) {
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return SimpleGraph(rows * cols, edges);
}

}  // namespace aoforge
