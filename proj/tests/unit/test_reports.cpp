#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/reports.hpp"

#include <gtest/gtest.h>

using namespace aoforge;

TEST(Report, VerdictBookkeeping) {
  Report r;
  r.check("same", 1, 1);
  r.check("different", Json::array({1, 2}), Json::array({2, 1}));
  r.check_true("flag", true);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 1U);
  Report outer;
  outer.absorb(r, "inner.");
  ASSERT_EQ(outer.verdicts().size(), 3U);
  EXPECT_EQ(outer.verdicts()[1].name, "inner.different");
  Json j = r.to_json();
  EXPECT_TRUE(j.contains("results"));
  EXPECT_EQ(j["verdicts"].size(), 3U);
  EXPECT_EQ(j["verdicts"][1]["pass"], false);
}

TEST(Reports, DualityOnP2) {
  auto r = duality_report(path_graph(2));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results["T"]["generators"], Json::parse("[[0,2],[1,1],[2,0]]"));
  EXPECT_EQ(r.results["dual_of_A"], r.results["T"]);
}

TEST(Reports, RoundtripCountsOnK3) {
  auto r = nct_roundtrip_report(complete_graph(3));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results["spanning_trees"], 16);
  EXPECT_EQ(r.results["standard_monomials"], 16);
}

TEST(Reports, EveryGraphReportPassesOnSmallGraphs) {
  for (const auto& g : {path_graph(3), complete_graph(3), cycle_graph(4), star_graph(4)}) {
    EXPECT_TRUE(graph_report(g).passed());
    EXPECT_TRUE(paos_report(g).passed());
    EXPECT_TRUE(ideals_report(g).passed());
    for (auto kind : {ComplexKind::Z, ComplexKind::Y, ComplexKind::X}) EXPECT_TRUE(complex_report(g, kind).passed());
    EXPECT_TRUE(nct_orientations_report(g).passed());
    EXPECT_TRUE(interval_reversal_report(g).passed());
    for (auto kind : {ChainKind::CS, ChainKind::ELR, ChainKind::SL, ChainKind::CR, ChainKind::IR}) {
      EXPECT_TRUE(chain_verify_report(g, kind).passed());
    }
    EXPECT_TRUE(flip_graph_report(g, ChainKind::IR).passed());
    EXPECT_TRUE(flip_graph_report(g, ChainKind::CR).passed());
  }
}

TEST(Reports, NctDirections) {
  EXPECT_TRUE(nct_to_tree_report(path_graph(3), {0, 1, 1}).passed());
  EXPECT_THROW(nct_to_tree_report(path_graph(2), {1, 1}), InvalidArgument);
  EXPECT_TRUE(nct_to_monomial_report(path_graph(3), RootedSpanningTree(3, {4, 1, 2})).passed());
  EXPECT_TRUE(nct_chains_report(3).passed());
  EXPECT_TRUE(nct_forest_report(5).passed());
  EXPECT_TRUE(nct_chain_to_tree_report(enumerate_nc_maximal_chains(3).front()).passed());
}

TEST(Reports, SimulationAgainstTolerance) {
  auto r = chain_simulate_report(cycle_graph(4), ChainKind::IR, 42, 200000, 0, 0.02);
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.results["total_variation"].get<double>(), 0.02);
  auto strict = chain_simulate_report(cycle_graph(4), ChainKind::IR, 42, 100, 0, 1e-9);
  EXPECT_FALSE(strict.passed());
}

TEST(Reports, ExpectationAndPercolation) {
  EXPECT_TRUE(expected_ao_report(4, Rational(1, 3), true, 1).passed());
  PercolationQuery q;
  q.min_size = true;
  q.all_sets = true;
  q.closure = VertexSet{1, 3};
  auto r = percolation_report(path_graph(3), 2, q);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results["minimal_size"], 2);
}

TEST(Reports, VerifyAllSmall) {
  auto r = verify_all(3, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.verdicts().size(), 50U);
  EXPECT_EQ(verify_all(3, 2).to_json(), r.to_json());
  EXPECT_THROW(verify_all(9, 1), ResourceLimit);
}
