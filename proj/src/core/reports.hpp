#pragma once

#include "core/cell_complex.hpp"
#include "core/graph.hpp"
#include "core/markov.hpp"
#include "core/noncrossing.hpp"
#include "core/rational.hpp"
#include "core/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aoforge {

struct Verdict {
  std::string name;
  Json expected;
  Json actual;
  bool pass = false;
};

// Results payload plus the list of assertions evaluated while producing it.
class Report {
public:
  Json results = Json::object();

  void check(std::string name, Json expected, Json actual);
  void check_true(std::string name, bool ok);
  // Copies every verdict of `other`, prefixing its name.
  void absorb(const Report& other, const std::string& prefix);

  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  bool passed() const;
  std::size_t failures() const;
  // {"results": ..., "verdicts": [{"name", "expected", "actual", "pass"}]}
  Json to_json() const;

private:
  std::vector<Verdict> verdicts_;
};

Report graph_report(const SimpleGraph& g);
Report paos_report(const SimpleGraph& g);
Report complex_report(const SimpleGraph& g, ComplexKind kind);
Report ideals_report(const SimpleGraph& g);
Report duality_report(const SimpleGraph& g);

Report nct_roundtrip_report(const SimpleGraph& g);
Report nct_to_tree_report(const SimpleGraph& g, const std::vector<int>& a);
Report nct_to_monomial_report(const SimpleGraph& g, const RootedSpanningTree& t);
Report nct_orientations_report(const SimpleGraph& g);
Report nct_chains_report(int n);
Report nct_chain_to_tree_report(const NCChain& c);
Report nct_forest_report(int n);

Report chain_verify_report(const SimpleGraph& g, ChainKind kind);
// When tolerance is set, adds a verdict that the total-variation distance to the
// exact law is below it.
Report chain_simulate_report(const SimpleGraph& g, ChainKind kind, std::uint64_t seed, std::uint64_t steps,
                             std::uint64_t burn_in, std::optional<double> tolerance);
Report flip_graph_report(const SimpleGraph& g, ChainKind kind);
Report interval_reversal_report(const SimpleGraph& g);

Report expected_ao_report(int n, const Rational& p, bool oracle, int jobs);

struct PercolationQuery {
  bool min_size = false;
  bool all_sets = false;
  std::optional<VertexSet> closure;
};

Report percolation_report(const SimpleGraph& g, int k, const PercolationQuery& query);

// Every check above over the built-in corpus restricted to n <= n_max; graphs
// are processed by up to `jobs` worker threads and merged in corpus order.
Report verify_all(int n_max, int jobs);

}  // namespace aoforge
