#pragma once

#include "core/graph.hpp"
#include "core/orientation.hpp"
#include "support/oracles.hpp"

#include <vector>

namespace testing_support {

inline oracle::Edges edges_of(const aoforge::SimpleGraph& g) {
  oracle::Edges out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline aoforge::SimpleGraph graph_of(int n, const oracle::Edges& edges) { return aoforge::SimpleGraph(n, edges); }

inline std::vector<int> directions(const aoforge::Orientation& o) {
  std::vector<int> dir;
  for (auto s : o.states()) dir.push_back(s == aoforge::EdgeState::Forward ? 1 : -1);
  return dir;
}

}  // namespace testing_support
