#pragma once

#include "core/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aoforge {

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

inline constexpr std::uint64_t kCorpusSeed = 20240607;

// Connected graphs with 2..n_max vertices: paths, cycles, complete graphs,
// stars, then seeded random connected graphs, without repeated edge sets.
std::vector<NamedGraph> connected_corpus(int n_max, std::uint64_t seed = kCorpusSeed);

// Graphs with at most 10 vertices used for bootstrap percolation.
std::vector<NamedGraph> percolation_corpus();

// Every connected labelled graph on [n] (n <= 6).
std::vector<SimpleGraph> all_connected_graphs(int n);

SimpleGraph petersen_graph();

// Graph named as P<n>, C<n>, K<n>, S<n>, E<n>, grid<r>x<c> or petersen.
SimpleGraph named_graph(const std::string& name);

// Connected graph on [n] from a random spanning tree plus `extra` random edges.
SimpleGraph random_connected_graph(int n, int extra, std::uint64_t seed);

}  // namespace aoforge
