#pragma once

#include "core/graph.hpp"
#include "core/orientation.hpp"
#include "core/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace aoforge {

enum class ChainKind { CS, ELR, SL, CR, IR };

std::string to_string(ChainKind kind);
ChainKind parse_chain_kind(const std::string& text);

// Bijective labelling of vertices 1..m with values 1..m; values[v-1] = f(v).
struct Labelling {
  std::vector<int> values;
  friend bool operator==(const Labelling&, const Labelling&) = default;
  friend auto operator<=>(const Labelling&, const Labelling&) = default;
};

void check_labelling(const Labelling& f, int size);
std::string encode(const Labelling& f);

// CS/CR/IR states are orientations of G; ELR states are labellings of G and SL
// states are labellings of G_r.
using ChainState = std::variant<Orientation, Labelling>;

// mt19937_64 seeded through std::seed_seq{seed low, seed high, stream low,
// stream high}; both are fully specified by the C++ standard, so a seed fixes the
// stream on every conforming platform. Indices use the high half of a 64x64-bit
// product, which needs exactly one draw per choice.
class ChainRng {
public:
  explicit ChainRng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next() { return engine_(); }
  std::size_t index(std::size_t bound);

private:
  std::mt19937_64 engine_;
};

// Labelling form of the card-shuffling move: v takes the top label n.
Labelling card_shuffle_move(const Labelling& f, int v);
// Orientation form: every edge at v is pointed into v.
Orientation card_shuffle_move(const SimpleGraph& g, const Orientation& o, int v);
// Swaps the labels on the endpoints of an edge.
Labelling edge_label_swap(const SimpleGraph& g, const Labelling& f, std::size_t edge);
// Moves label n+1 from its holder to the neighbour `target` in G_r.
Labelling slide_move(const SimpleGraph& rooted, const Labelling& f, int target);

// Edges whose arc is a cover relation of the induced poset.
std::vector<std::size_t> cover_edges(const SimpleGraph& g, const Orientation& o);
Orientation reverse_edge(const Orientation& o, std::size_t edge);
// Reverses every arc x -> y with u <= x < y <= v, where u -> v is the chosen edge.
Orientation interval_reversal(const SimpleGraph& g, const Orientation& o, std::size_t edge);

struct IntervalReversalReport {
  std::size_t pairs_checked = 0;
  std::size_t not_acyclic = 0;
  std::size_t not_involution = 0;
  std::size_t edge_collisions = 0;  // distinct edges giving the same result
  bool holds() const { return not_acyclic == 0 && not_involution == 0 && edge_collisions == 0; }
};

// Checks acyclicity, the involution property and edge-injectivity of
// interval_reversal over every acyclic orientation and edge of g.
IntervalReversalReport interval_reversal_check(const SimpleGraph& g);

ChainState step(ChainKind kind, const SimpleGraph& g, const ChainState& state, ChainRng& rng);

struct FlipGraph {
  std::vector<Orientation> states;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;

  bool connected() const;
  bool bipartite() const;
  // Common degree, or nullopt when the graph is not regular.
  std::optional<std::size_t> regular_degree() const;
  bool contains_edges_of(const FlipGraph& other) const;
};

FlipGraph build_flip_graph(const SimpleGraph& g, ChainKind kind);

struct TransitionMatrix {
  std::vector<std::string> states;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;  // sparse, sorted by column

  std::size_t size() const { return states.size(); }
  Rational at(std::size_t i, std::size_t j) const;
  bool row_stochastic() const;
  // Every state reaches every other state.
  bool irreducible() const;
  // pi * P
  std::vector<Rational> left_multiply(const std::vector<Rational>& pi) const;
};

inline constexpr std::size_t kMaxChainStates = 20000;

TransitionMatrix exact_transition_matrix(const SimpleGraph& g, ChainKind kind);

// Unique solution of pi P = pi with sum 1, by exact elimination.
std::vector<Rational> solve_stationary(const TransitionMatrix& p);

struct StationaryReport {
  ChainKind kind = ChainKind::CS;
  std::vector<std::string> states;   // acyclic orientations of G
  std::vector<Rational> computed;    // law derived from the chain
  std::vector<Rational> expected;    // closed form
  std::size_t chain_states = 0;
  bool irreducible = false;
  bool stationary_equation_holds = false;
  bool matches = false;
  Rational normalization;            // CR: 1 / sum |Cov(O)|
  std::optional<bool> labelling_graph_regular;
  std::optional<bool> labelling_graph_bipartite;
};

StationaryReport stationary_verify(const SimpleGraph& g, ChainKind kind);

struct SimulationResult {
  ChainKind kind = ChainKind::CS;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::vector<std::string> states;   // orientations visited, canonical order
  std::vector<std::uint64_t> counts;
  std::vector<double> frequencies;
  // SL only: visits to S_r keyed by the restriction to G.
  std::vector<std::string> conditional_states;
  std::vector<std::uint64_t> conditional_counts;
  std::vector<double> conditional_frequencies;
  std::uint64_t s_r_visits = 0;
};

SimulationResult simulate(const SimpleGraph& g, ChainKind kind, std::uint64_t seed, std::uint64_t steps,
                          std::uint64_t burn_in);

}  // namespace aoforge
