#pragma once

#include "core/graph.hpp"
#include "core/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aoforge {

// State of edge {u,v} with u < v.
enum class EdgeState : std::uint8_t {
  Forward,     // (u,v): u -> v
  Backward,    // (v,u): v -> u
  Unoriented,  // the edge itself
};

// Assignment of an EdgeState to every edge of a graph, indexed like
// SimpleGraph::edges(). The graph is passed alongside rather than stored.
class Orientation {
public:
  Orientation() = default;
  explicit Orientation(std::vector<EdgeState> states) : states_(std::move(states)) {}

  static Orientation trivial(const SimpleGraph& g);
  // u -> v whenever label[u-1] < label[v-1].
  static Orientation from_labelling(const SimpleGraph& g, std::span<const int> label);

  std::size_t size() const { return states_.size(); }
  EdgeState state(std::size_t edge) const { return states_[edge]; }
  void set(std::size_t edge, EdgeState s) { states_[edge] = s; }
  const std::vector<EdgeState>& states() const { return states_; }
  bool is_complete() const;

  // Orients edge {a,b} as a -> b.
  void orient(const SimpleGraph& g, int a, int b);
  // Tail and head of an oriented edge.
  std::pair<int, int> arc(const SimpleGraph& g, std::size_t edge) const;

  // Two bits per edge; usable as a hash key while size() <= 32.
  std::uint64_t pack() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;

private:
  std::vector<EdgeState> states_;
};

void check_orientation(const SimpleGraph& g, const Orientation& o);

std::vector<int> in_degrees(const SimpleGraph& g, const Orientation& o);
std::vector<int> out_degrees(const SimpleGraph& g, const Orientation& o);
// Incoming arcs plus unoriented incident edges.
std::vector<int> no_out_degrees(const SimpleGraph& g, const Orientation& o);

// Direct predecessors: preds[v-1] = { u : u -> v }.
std::vector<VertexSet> predecessor_sets(const SimpleGraph& g, const Orientation& o);
// Strict upper sets: above[v-1] = { w : v <_O w }.
std::vector<VertexSet> strict_upper_sets(const SimpleGraph& g, const Orientation& o);

// Kahn peeling over the oriented arcs; nullopt when a directed cycle exists.
std::optional<std::vector<int>> topological_order(const SimpleGraph& g, const Orientation& o);
bool is_acyclic(const SimpleGraph& g, const Orientation& o);

// "1->2,2-3,4->3" with root label n+1 printed as r when root_label is set.
std::string encode(const SimpleGraph& g, const Orientation& o, bool root_label = false);

// All complete acyclic orientations in canonical order.
std::vector<Orientation> enumerate_acyclic_orientations(const SimpleGraph& g);

struct AcyclicOrientationRecord {
  Orientation orientation;
  std::vector<int> in_degree;
  std::vector<int> out_degree;
};
std::vector<AcyclicOrientationRecord> acyclic_orientation_census(const SimpleGraph& g);

// |chi_G(-1)| by deletion-contraction.
Integer count_acyclic_orientations(const SimpleGraph& g);

// Number of order-preserving bijections V -> 1..n.
Integer linear_extension_count(const SimpleGraph& g, const Orientation& o);

struct SubmodularityReport {
  Rational f_sigma, f_rho, f_meet, f_join;
  bool inequality_holds = false;
  bool equality = false;
  bool differences_nonadjacent = false;
  bool equality_iff_nonadjacent = false;
};

// F(s) = a + b|s| + c|E(G[s])| on sigma, rho, their meet and join.
SubmodularityReport submodularity_check(const SimpleGraph& g, const Rational& a, const Rational& b,
                                        const Rational& c, VertexSet sigma, VertexSet rho);

}  // namespace aoforge
