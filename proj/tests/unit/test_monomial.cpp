#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/monomial.hpp"
#include "core/orientation.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace aoforge;
using testing_support::edges_of;

namespace {

MonomialIdeal ideal_of(int n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return minimize(n, ms);
}

std::vector<std::vector<int>> exponents(const MonomialIdeal& ideal) {
  std::vector<std::vector<int>> out;
  for (const auto& m : ideal.generators()) out.push_back(m.exponents());
  return out;
}

std::vector<int> plus(std::vector<int> v, int k) {
  for (int& x : v) x += k;
  return v;
}

}  // namespace

TEST(Minimize, Examples) {
  EXPECT_EQ(exponents(ideal_of(2, {{1, 0}, {1, 1}})), (std::vector<std::vector<int>>{{1, 0}}));
  EXPECT_EQ(ideal_T(path_graph(3)).generator_count(), 6U);
  EXPECT_TRUE(minimize(3, {}).is_zero());
}

TEST(Contains, Examples) {
  MonomialIdeal t = ideal_T(path_graph(2));
  EXPECT_TRUE(t.contains(Monomial({1, 2})));
  EXPECT_FALSE(t.contains(Monomial({0, 1})));
  MonomialIdeal zero(2);
  EXPECT_FALSE(zero.contains(Monomial({5, 5})));
  EXPECT_THROW(t.contains(Monomial({1, 1, 1})), InvalidArgument);
}

TEST(Contains, MonotoneUnderMultiplication) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  for (const auto& [name, g] : connected_corpus(5)) {
    for (const MonomialIdeal& ideal : {ideal_A(g), ideal_T(g)}) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> a(static_cast<std::size_t>(g.vertex_count()));
        for (int& x : a) x = e(rng);
        Monomial m(a);
        if (!ideal.contains(m)) continue;
        for (int i = 1; i <= g.vertex_count(); ++i) ASSERT_TRUE(ideal.contains(m.times_variable(i))) << name;
      }
    }
  }
}

TEST(IdealA, Examples) {
  EXPECT_EQ(exponents(ideal_A(path_graph(2))), (std::vector<std::vector<int>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(exponents(ideal_A(path_graph(3))),
            (std::vector<std::vector<int>>{{1, 2, 2}, {1, 3, 1}, {2, 1, 2}, {2, 2, 1}}));
  auto k3 = ideal_A(complete_graph(3));
  ASSERT_EQ(k3.generator_count(), 6U);
  for (const auto& m : k3.generators()) {
    auto e = m.exponents();
    std::sort(e.begin(), e.end());
    EXPECT_EQ(e, (std::vector<int>{1, 2, 3}));
  }
}

TEST(IdealT, Examples) {
  EXPECT_EQ(exponents(ideal_T(path_graph(2))), (std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}}));
  std::set<std::vector<int>> p3;
  for (const auto& e : exponents(ideal_T(path_graph(3)))) p3.insert(e);
  EXPECT_EQ(p3, (std::set<std::vector<int>>{{2, 0, 0}, {0, 3, 0}, {0, 0, 2}, {1, 2, 0}, {0, 2, 1}, {1, 1, 1}}));
  EXPECT_TRUE(ideal_T(complete_graph(4)).contains(Monomial({1, 1, 1, 1})));
  EXPECT_EQ(tree_generator(complete_graph(4), VertexSet{1, 2, 3, 4}), Monomial({1, 1, 1, 1}));
}

TEST(Ideals, MembershipMatchesOracles) {
  for (const auto& [name, g] : connected_corpus(4)) {
    int n = g.vertex_count();
    auto edges = edges_of(g);
    MonomialIdeal a = ideal_A(g), t = ideal_T(g);
    ASSERT_EQ(Integer(static_cast<unsigned long>(a.generator_count())), count_acyclic_orientations(g)) << name;
    oracle::box(shifted_degrees(g, 2), [&](const std::vector<int>& b) {
      ASSERT_EQ(a.contains(Monomial(b)), oracle::in_A(n, edges, b)) << name;
      ASSERT_EQ(t.contains(Monomial(b)), oracle::in_T(n, edges, b)) << name;
    });
  }
}

TEST(AlexanderDual, Examples) {
  int a[] = {2, 2};
  EXPECT_EQ(alexander_dual(ideal_A(path_graph(2)), a), ideal_T(path_graph(2)));
  EXPECT_EQ(alexander_dual(ideal_T(path_graph(2)), a), ideal_A(path_graph(2)));
  int one[] = {1};
  EXPECT_EQ(alexander_dual(ideal_of(1, {{1}}), one), ideal_of(1, {{1}}));
  int small[] = {1, 1};
  EXPECT_THROW(alexander_dual(ideal_A(path_graph(2)), small), InvalidArgument);
}

TEST(AlexanderDual, BoxComplementOracleAndInvolution) {
  for (const auto& [name, g] : connected_corpus(5)) {
    auto a = shifted_degrees(g, 1);
    for (const MonomialIdeal& ideal : {ideal_A(g), ideal_T(g)}) {
      MonomialIdeal dual = alexander_dual(ideal, a);
      oracle::box(a, [&](const std::vector<int>& b) {
        std::vector<int> rest(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) rest[i] = a[i] - b[i];
        ASSERT_EQ(dual.contains(Monomial(b)), !ideal.contains(Monomial(rest))) << name;
      });
      ASSERT_EQ(alexander_dual(dual, a), ideal) << name;
    }
  }
}

TEST(IrreducibleDecomposition, HoldsOnExamplesAndCorpus) {
  for (const auto& g : {path_graph(2), path_graph(3), complete_graph(3)}) {
    auto r = irreducible_decomposition_check(g);
    EXPECT_TRUE(r.a_holds);
    EXPECT_TRUE(r.t_holds);
  }
  for (const auto& [name, g] : connected_corpus(5)) {
    auto r = irreducible_decomposition_check(g);
    ASSERT_TRUE(r.a_holds && r.t_holds) << name;
  }
}

TEST(IrreducibleDecomposition, IntersectionAgreesWithMembershipOracle) {
  SimpleGraph g = cycle_graph(4);
  auto edges = edges_of(g);
  MonomialIdeal inter(4);
  bool first = true;
  for (const auto& dir : oracle::acyclic_orientations(4, edges)) {
    auto part = MonomialIdeal::irreducible(plus(oracle::out_degrees(4, edges, dir), 1));
    inter = first ? part : inter.intersect(part);
    first = false;
  }
  EXPECT_EQ(inter, ideal_T(g));
}

TEST(StandardMonomials, Examples) {
  auto p2 = standard_monomials(ideal_T(path_graph(2)), shifted_degrees(path_graph(2), 0));
  EXPECT_TRUE(p2.exhaustive);
  EXPECT_EQ(p2.monomials.size(), 3U);
  EXPECT_EQ(standard_monomials(ideal_T(path_graph(3)), shifted_degrees(path_graph(3), 0)).monomials.size(), 8U);
  EXPECT_EQ(standard_monomials(ideal_T(complete_graph(3)), shifted_degrees(complete_graph(3), 0)).monomials.size(),
            16U);
  int tiny[] = {0, 0};
  EXPECT_FALSE(standard_monomials(ideal_T(path_graph(2)), tiny).exhaustive);
}

TEST(StandardMonomials, CountEqualsMatrixTreeUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : all_connected_graphs(n)) {
      if (n == 6 && g.edge_count() > 8) continue;
      auto s = standard_monomials(ideal_T(g), shifted_degrees(g, 0));
      ASSERT_TRUE(s.exhaustive);
      ASSERT_EQ(mpz_class(static_cast<unsigned long>(s.monomials.size())),
                oracle::rooted_spanning_trees(n, edges_of(g)));
    }
  }
}

TEST(MaximalStandardMonomials, EqualOutDegreeVectors) {
  EXPECT_EQ(maximal_standard_monomials(ideal_T(path_graph(2)), shifted_degrees(path_graph(2), 0)),
            (std::vector<Monomial>{Monomial({0, 1}), Monomial({1, 0})}));
  for (const auto& [name, g] : connected_corpus(5)) {
    auto edges = edges_of(g);
    std::set<std::vector<int>> expected;
    for (const auto& dir : oracle::acyclic_orientations(g.vertex_count(), edges)) {
      expected.insert(oracle::out_degrees(g.vertex_count(), edges, dir));
    }
    std::set<std::vector<int>> got;
    for (const auto& m : maximal_standard_monomials(ideal_T(g), shifted_degrees(g, 0))) got.insert(m.exponents());
    ASSERT_EQ(got, expected) << name;
  }
}

TEST(Artinianized, GeneratorCounts) {
  EXPECT_EQ(exponents(artinianized_A(path_graph(2))),
            (std::vector<std::vector<int>>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
  EXPECT_EQ(artinianized_A(path_graph(3)).generator_count(), 7U);
  EXPECT_EQ(artinianized_A(complete_graph(3)).generator_count(), 9U);
}

TEST(Artinianized, SingleVertexCollapses) {
  // x1 divides x1^2, so the single-vertex graph has one generator instead of #AO + n = 2.
  auto g = path_graph(1);
  EXPECT_EQ(count_acyclic_orientations(g), 1);
  EXPECT_EQ(artinianized_A(g).generator_count(), 1U);
}
