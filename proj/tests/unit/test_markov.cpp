#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/markov.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace aoforge;
using testing_support::directions;
using testing_support::edges_of;

namespace {

using oracle::arc;
using oracle::cover_count;
using oracle::Dir;
using oracle::reachability;

// Checks pi P = pi for an independently built kernel on acyclic orientations.
template <class Kernel>
bool stationary(const std::vector<Dir>& states, const std::vector<Rational>& pi, Kernel&& kernel) {
  std::map<Dir, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
  std::vector<Rational> next(states.size(), 0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& [target, prob] : kernel(states[i])) next[index.at(target)] += pi[i] * prob;
  }
  return next == pi;
}

std::vector<SimpleGraph> stationary_graphs() {
  std::vector<SimpleGraph> out;
  for (int n = 2; n <= 4; ++n) {
    for (auto& g : all_connected_graphs(n)) out.push_back(std::move(g));
  }
  out.push_back(path_graph(5));
  return out;
}

}  // namespace

TEST(ChainRng, DeterministicAndBounded) {
  ChainRng a(42, 1), b(42, 1), c(42, 2);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    auto x = a.next();
    ASSERT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
  for (int i = 0; i < 1000; ++i) ASSERT_LT(a.index(7), 7U);
}

TEST(Moves, Examples) {
  SimpleGraph p2 = path_graph(2);
  int up[] = {1, 2};
  Orientation o = Orientation::from_labelling(p2, up);
  EXPECT_EQ(encode(p2, card_shuffle_move(p2, o, 1)), "2->1");
  SimpleGraph p3 = path_graph(3);
  int chain[] = {1, 2, 3};
  Orientation line = Orientation::from_labelling(p3, chain);
  auto covers = cover_edges(p3, line);
  EXPECT_EQ(covers.size(), 2U);
  for (auto e : covers) EXPECT_TRUE(is_acyclic(p3, reverse_edge(line, e)));
  SimpleGraph k3 = complete_graph(3);
  Orientation t = Orientation::from_labelling(k3, chain);
  EXPECT_EQ(encode(k3, interval_reversal(k3, t, 1)), "2->1,3->1,3->2");
  EXPECT_EQ(card_shuffle_move(Labelling{{1, 2, 3}}, 1).values, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(edge_label_swap(p3, Labelling{{1, 2, 3}}, 1).values, (std::vector<int>{1, 3, 2}));
}

TEST(Moves, InvalidStatesRejected) {
  SimpleGraph k3 = complete_graph(3);
  Orientation cyc = Orientation::trivial(k3);
  cyc.orient(k3, 1, 2);
  cyc.orient(k3, 2, 3);
  cyc.orient(k3, 3, 1);
  ChainRng rng(1);
  EXPECT_THROW(step(ChainKind::IR, k3, cyc, rng), InvalidArgument);
  EXPECT_THROW(step(ChainKind::ELR, k3, Labelling{{1, 1, 2}}, rng), InvalidArgument);
  int chain[] = {1, 2, 3};
  EXPECT_THROW(interval_reversal(k3, Orientation::from_labelling(k3, chain), 3), InvalidArgument);
}

TEST(Moves, CoversAndIntervalReversalMatchOracle) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& edges : oracle::all_graphs(n)) {
      SimpleGraph g(n, edges);
      for (const auto& o : enumerate_acyclic_orientations(g)) {
        Dir dir = directions(o);
        ASSERT_EQ(cover_edges(g, o).size(), cover_count(n, edges, dir));
        for (std::size_t e = 0; e < edges.size(); ++e) {
          ASSERT_EQ(directions(interval_reversal(g, o, e)), oracle::interval_reversal(n, edges, dir, e));
        }
        for (int v = 1; v <= n; ++v) ASSERT_EQ(directions(card_shuffle_move(g, o, v)), oracle::card_shuffle(edges, dir, v));
      }
    }
  }
}

TEST(IntervalReversal, IsAcyclicInvolutionUpToFourAndC4) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& edges : oracle::all_graphs(n)) {
      auto r = interval_reversal_check(SimpleGraph(n, edges));
      ASSERT_TRUE(r.holds());
    }
  }
  auto c4 = interval_reversal_check(cycle_graph(4));
  EXPECT_EQ(c4.pairs_checked, 56U);
  EXPECT_TRUE(c4.holds());
}

TEST(FlipGraph, Examples) {
  auto ir = build_flip_graph(cycle_graph(4), ChainKind::IR);
  EXPECT_EQ(ir.states.size(), 14U);
  EXPECT_EQ(ir.regular_degree(), 4U);
  EXPECT_TRUE(ir.connected());
  auto cr = build_flip_graph(cycle_graph(4), ChainKind::CR);
  EXPECT_EQ(cr.states.size(), 14U);
  EXPECT_EQ(cr.edges.size(), 24U);
  EXPECT_TRUE(cr.bipartite());
  EXPECT_TRUE(ir.contains_edges_of(cr));
  for (auto kind : {ChainKind::CR, ChainKind::IR}) {
    auto p2 = build_flip_graph(path_graph(2), kind);
    EXPECT_EQ(p2.states.size(), 2U);
    EXPECT_EQ(p2.edges.size(), 1U);
  }
  EXPECT_THROW(build_flip_graph(edgeless_graph(3), ChainKind::CR), InvalidArgument);
  EXPECT_THROW(build_flip_graph(cycle_graph(4), ChainKind::CS), InvalidArgument);
}

TEST(FlipGraph, PropertiesOnAllConnectedGraphs) {
  for (const auto& g : stationary_graphs()) {
    auto ir = build_flip_graph(g, ChainKind::IR);
    auto cr = build_flip_graph(g, ChainKind::CR);
    ASSERT_EQ(ir.regular_degree(), g.edge_count());
    ASSERT_TRUE(ir.connected());
    ASSERT_TRUE(cr.connected());
    ASSERT_TRUE(cr.bipartite());
    ASSERT_TRUE(ir.contains_edges_of(cr));
  }
}

TEST(TransitionMatrix, Examples) {
  auto cs = exact_transition_matrix(path_graph(2), ChainKind::CS);
  ASSERT_EQ(cs.size(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(cs.at(i, j), Rational(1, 2));
  }
  auto ir = exact_transition_matrix(path_graph(2), ChainKind::IR);
  EXPECT_EQ(ir.at(0, 0), 0);
  EXPECT_EQ(ir.at(0, 1), 1);
  EXPECT_EQ(ir.at(1, 0), 1);
  auto cr = exact_transition_matrix(complete_graph(3), ChainKind::CR);
  EXPECT_EQ(cr.size(), 6U);
  EXPECT_TRUE(cr.row_stochastic());
  auto sl = exact_transition_matrix(path_graph(3), ChainKind::SL);
  EXPECT_EQ(sl.size(), 24U);
  EXPECT_TRUE(sl.row_stochastic());
  EXPECT_THROW(exact_transition_matrix(path_graph(8), ChainKind::ELR), ResourceLimit);
}

TEST(Stationary, Examples) {
  auto cs = stationary_verify(path_graph(3), ChainKind::CS);
  EXPECT_TRUE(cs.matches);
  std::multiset<Rational> law(cs.computed.begin(), cs.computed.end());
  EXPECT_EQ(law, (std::multiset<Rational>{Rational(1, 6), Rational(1, 6), Rational(1, 3), Rational(1, 3)}));
  auto ir = stationary_verify(cycle_graph(4), ChainKind::IR);
  EXPECT_EQ(ir.computed, std::vector<Rational>(14, Rational(1, 14)));
  auto cr = stationary_verify(complete_graph(3), ChainKind::CR);
  EXPECT_EQ(cr.computed, std::vector<Rational>(6, Rational(1, 6)));
  EXPECT_EQ(cr.normalization, Rational(1, 12));
}

TEST(Stationary, AllKindsOnSmallGraphs) {
  for (const auto& g : stationary_graphs()) {
    for (auto kind : {ChainKind::CS, ChainKind::ELR, ChainKind::SL, ChainKind::CR, ChainKind::IR}) {
      auto r = stationary_verify(g, kind);
      ASSERT_TRUE(r.irreducible || kind == ChainKind::ELR || kind == ChainKind::SL) << to_string(kind);
      ASSERT_TRUE(r.stationary_equation_holds) << to_string(kind);
      ASSERT_TRUE(r.matches) << to_string(kind);
      if (kind == ChainKind::ELR) {
        ASSERT_EQ(r.labelling_graph_regular, true);
        ASSERT_EQ(r.labelling_graph_bipartite, true);
      }
    }
  }
}

TEST(Stationary, ClosedFormsSatisfyIndependentKernels) {
  for (const auto& g : stationary_graphs()) {
    int n = g.vertex_count();
    auto edges = edges_of(g);
    auto aos = oracle::acyclic_orientations(n, edges);
    std::vector<Dir> states(aos.begin(), aos.end());
    std::vector<Rational> cs, cr, ir;
    Rational total_covers = 0;
    mpz_class fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& dir : states) {
      oracle::Edges arcs;
      for (std::size_t e = 0; e < edges.size(); ++e) arcs.push_back(arc(edges, dir, e));
      cs.emplace_back(oracle::linear_extensions(n, arcs), fact);
      cs.back().canonicalize();
      auto c = static_cast<long>(cover_count(n, edges, dir));
      cr.emplace_back(c);
      total_covers += c;
      ir.emplace_back(1, static_cast<long>(states.size()));
      ir.back().canonicalize();
    }
    for (auto& x : cr) x /= total_covers;
    ASSERT_TRUE(stationary(states, cs, [&](const Dir& d) {
      std::vector<std::pair<Dir, Rational>> out;
      for (int v = 1; v <= n; ++v) out.emplace_back(oracle::card_shuffle(edges, d, v), Rational(1, n));
      return out;
    }));
    ASSERT_TRUE(stationary(states, ir, [&](const Dir& d) {
      std::vector<std::pair<Dir, Rational>> out;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        out.emplace_back(oracle::interval_reversal(n, edges, d, e), Rational(1, static_cast<long>(edges.size())));
      }
      return out;
    }));
    ASSERT_TRUE(stationary(states, cr, [&](const Dir& d) {
      std::vector<std::pair<Dir, Rational>> out;
      auto covers = static_cast<long>(cover_count(n, edges, d));
      for (std::size_t e = 0; e < edges.size(); ++e) {
        Dir flipped = d;
        flipped[e] = -flipped[e];
        auto [u, v] = arc(edges, d, e);
        oracle::Edges rest;
        Dir rest_dir;
        for (std::size_t f = 0; f < edges.size(); ++f) {
          if (f != e) {
            rest.push_back(edges[f]);
            rest_dir.push_back(d[f]);
          }
        }
        if (reachability(n, rest, rest_dir)[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
        out.emplace_back(flipped, Rational(1, covers));
      }
      return out;
    }));
  }
}

TEST(Stationary, RejectsUnsupportedGraphs) {
  EXPECT_THROW(stationary_verify(edgeless_graph(2), ChainKind::CR), InvalidArgument);
  EXPECT_THROW(stationary_verify(edgeless_graph(2), ChainKind::IR), InvalidArgument);
  EXPECT_THROW(stationary_verify(SimpleGraph(4, {{1, 2}, {3, 4}}), ChainKind::ELR), InvalidArgument);
  EXPECT_THROW(stationary_verify(SimpleGraph(4, {{1, 2}, {3, 4}}), ChainKind::SL), InvalidArgument);
  EXPECT_NO_THROW(stationary_verify(edgeless_graph(2), ChainKind::CS));
}

TEST(Simulate, DeterministicForFixedSeed) {
  auto a = simulate(cycle_graph(4), ChainKind::CR, 7, 20000, 100);
  auto b = simulate(cycle_graph(4), ChainKind::CR, 7, 20000, 100);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.frequencies, b.frequencies);
  auto c = simulate(cycle_graph(4), ChainKind::CR, 8, 20000, 100);
  EXPECT_NE(a.counts, c.counts);
}

TEST(Simulate, FrequenciesApproachExactLaws) {
  auto ir = simulate(cycle_graph(4), ChainKind::IR, 42, 1000000, 0);
  ASSERT_EQ(ir.frequencies.size(), 14U);
  for (double f : ir.frequencies) EXPECT_NEAR(f, 1.0 / 14.0, 0.01);
  auto cs = simulate(path_graph(3), ChainKind::CS, 42, 1000000, 1000);
  auto exact = stationary_verify(path_graph(3), ChainKind::CS);
  ASSERT_EQ(cs.states, exact.states);
  for (std::size_t i = 0; i < cs.frequencies.size(); ++i) EXPECT_NEAR(cs.frequencies[i], exact.expected[i].get_d(), 0.01);
}

TEST(Simulate, SlidingLabelReportsConditionalLaw) {
  auto sl = simulate(path_graph(3), ChainKind::SL, 3, 400000, 1000);
  auto exact = stationary_verify(path_graph(3), ChainKind::SL);
  EXPECT_GT(sl.s_r_visits, 0U);
  ASSERT_EQ(sl.conditional_states, exact.states);
  for (std::size_t i = 0; i < exact.expected.size(); ++i) {
    EXPECT_NEAR(sl.conditional_frequencies[i], exact.expected[i].get_d(), 0.02);
  }
}
