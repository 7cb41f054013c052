// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "core/cell_complex.hpp"
#include "core/corpus.hpp"
#include "core/expectation.hpp"
#include "core/markov.hpp"
#include "core/monomial.hpp"
#include "core/noncrossing.hpp"
#include "core/percolation.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace aoforge;
using testing_support::directions;
using testing_support::edges_of;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::vector<NamedGraph> corpus5() { return connected_corpus(5); }

std::vector<SimpleGraph> all_connected_up_to(int n_max) {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= n_max; ++n) {
    for (auto& g : all_connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<int> plus(std::vector<int> v, int k) {
  for (int& x : v) x += k;
  return v;
}

long oracle_ao_count(const SimpleGraph& g) {
  return static_cast<long>(oracle::acyclic_orientations(g.vertex_count(), edges_of(g)).size());
}

Outcome duality() {
  Outcome o;
  auto corpus = corpus5();
  for (const auto& [name, g] : corpus) {
    int n = g.vertex_count();
    auto edges = edges_of(g);
    auto a = shifted_degrees(g, 1);
    MonomialIdeal ai = ideal_A(g), ti = ideal_T(g);
    MonomialIdeal dual_a = alexander_dual(ai, a), dual_t = alexander_dual(ti, a);
    o.require(dual_a == ti, name + ": dual(A) != T");
    o.require(dual_t == ai, name + ": dual(T) != A");
    // Both ideals have every generator inside the box [0, a], so box membership decides equality.
    bool oracle_ok = true;
    oracle::box(a, [&](const std::vector<int>& b) {
      Monomial m(b);
      oracle_ok = oracle_ok && dual_a.contains(m) == oracle::in_T(n, edges, b) &&
                  dual_t.contains(m) == oracle::in_A(n, edges, b);
    });
    o.require(oracle_ok, name + ": membership disagrees with the orientation/subset oracle");
  }
  o.require(corpus.size() >= 30, "corpus has fewer than 30 graphs");
  o.detail = std::to_string(corpus.size()) + " graphs, n <= 5";
  return o;
}

Outcome decompositions() {
  Outcome o;
  auto corpus = corpus5();
  for (const auto& [name, g] : corpus) {
    int n = g.vertex_count();
    auto edges = edges_of(g);
    auto report = irreducible_decomposition_check(g);
    o.require(report.a_holds && report.t_holds, name + ": library decomposition check failed");
    MonomialIdeal a_int(n), t_int(n);
    bool first = true;
    for (oracle::Mask s = 1; s < (oracle::Mask{1} << n); ++s) {
      if (!oracle::connected_subset(edges, s)) continue;
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (int v = 1; v <= n; ++v) {
        if (!oracle::in_mask(s, v)) continue;
        int inside = 0;
        for (auto [x, y] : edges) inside += (x == v && oracle::in_mask(s, y)) || (y == v && oracle::in_mask(s, x));
        e[static_cast<std::size_t>(v - 1)] = inside + 1;
      }
      auto part = MonomialIdeal::irreducible(e);
      a_int = first ? part : a_int.intersect(part);
      first = false;
    }
    first = true;
    for (const auto& dir : oracle::acyclic_orientations(n, edges)) {
      auto part = MonomialIdeal::irreducible(plus(oracle::out_degrees(n, edges, dir), 1));
      t_int = first ? part : t_int.intersect(part);
      first = false;
    }
    o.require(a_int == ideal_A(g), name + ": intersection over connected subsets != A");
    o.require(t_int == ideal_T(g), name + ": intersection over orientations != T");
  }
  o.detail = std::to_string(corpus.size()) + " graphs";
  return o;
}

Outcome cell_structure() {
  Outcome o;
  std::size_t paos = 0;
  for (const auto& [name, g] : corpus5()) {
    int n = g.vertex_count();
    auto edges = edges_of(g);
    for (const auto& p : enumerate_paos(g)) {
      auto t = zonotope_tightness(g, p);
      o.require(t.witness_feasible && t.matches_ideal_family && t.interior_point_strict,
                name + ": tightness mismatch for " + encode(p));
      ++paos;
    }
    auto v = vertex_coordinates_check(g);
    std::set<std::vector<int>> expected;
    for (const auto& dir : oracle::acyclic_orientations(n, edges)) expected.insert(plus(oracle::in_degrees(n, edges, dir), 1));
    std::set<std::vector<int>> got(v.vertices.begin(), v.vertices.end());
    o.require(v.bijection && v.witnesses_integral_indegree, name + ": 0-cell witnesses are not indeg+1");
    o.require(got == expected, name + ": 0-cell points differ from oracle indeg+1 vectors");
    o.require(euler_characteristic(build_Z(g)) == 1, name + ": Euler characteristic of Z is not 1");
  }
  o.detail = std::to_string(paos) + " PAOs";
  return o;
}

Outcome labels() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, g] : corpus5()) {
    for (auto kind : {ComplexKind::Z, ComplexKind::Y, ComplexKind::X}) {
      auto c = build_complex(g, kind);
      o.require(verify_label_lcm(c).empty(), name + " " + to_string(kind) + ": lcm violation");
      o.require(verify_minimality(c).empty(), name + " " + to_string(kind) + ": non-strict face label");
      checked += c.size();
    }
    auto d = dual_label_identity(g);
    o.require(d.violations.empty() && d.order_reversed, name + ": dual-label identity fails");
  }
  o.detail = std::to_string(checked) + " cells";
  return o;
}

Outcome betti() {
  Outcome o;
  for (const auto& [name, g] : corpus5()) {
    auto a = betti_counts(g, BettiIdeal::A);
    auto t = betti_counts(g, BettiIdeal::T);
    auto beta0 = [](const BettiReport& r) { return r.counts.empty() ? 0L : r.counts.front().second; };
    o.require(static_cast<std::size_t>(beta0(a)) == ideal_A(g).generator_count(), name + ": beta_0(A) != #gens");
    o.require(static_cast<std::size_t>(beta0(t)) == ideal_T(g).generator_count(), name + ": beta_0(T) != #gens");
    long artinian = oracle_ao_count(g) + g.vertex_count();
    auto y = build_Y(g);
    o.require(static_cast<long>(artinianized_A(g).generator_count()) == artinian, name + ": artinianization != #AO + n");
    o.require(y.f_vector().at(0) == artinian, name + ": Y 0-cells != #AO + n");
  }
  o.detail = "A, T and artinianization";
  return o;
}

Outcome bijections() {
  Outcome o;
  std::size_t monomials = 0, graphs = 0;
  for (const auto& g : all_connected_up_to(5)) {
    ++graphs;
    auto t_ideal = ideal_T(g);
    auto standard = standard_monomials(t_ideal, shifted_degrees(g, 0));
    auto trees = enumerate_rooted_spanning_trees(g);
    o.require(standard.exhaustive, "standard monomials escape the degree box");
    o.require(mpz_class(static_cast<unsigned long>(standard.monomials.size())) ==
                  oracle::rooted_spanning_trees(g.vertex_count(), edges_of(g)),
              "#standard monomials != matrix-tree count");
    o.require(standard.monomials.size() == trees.size(), "#standard monomials != #trees");
    for (const auto& m : standard.monomials) {
      o.require(tree_to_monomial(g, monomial_to_tree(g, m.exponents()).tree) == m.exponents(), "b(T_a) != a");
    }
    for (const auto& t : trees) o.require(monomial_to_tree(g, tree_to_monomial(g, t)).tree == t, "T_b(T) != T");
    monomials += standard.monomials.size();
  }
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(monomials) + " monomials";
  return o;
}

Outcome ao_correspondence() {
  Outcome o;
  std::size_t flagged_total = 0;
  for (const auto& g : all_connected_up_to(5)) {
    std::set<std::vector<int>> seen;
    for (const auto& t : enumerate_rooted_spanning_trees(g)) {
      auto r = tree_to_orientation(g, t);
      if (!r.flagged) continue;
      bool extension = r.orientation.is_complete();
      for (std::size_t e = 0; extension && e < g.edge_count(); ++e) {
        auto [a, b] = r.orientation.arc(g, e);
        extension = r.linear_extension[static_cast<std::size_t>(a - 1)] < r.linear_extension[static_cast<std::size_t>(b - 1)];
      }
      o.require(extension && r.extension_valid, "f = n+1-p is not a linear extension");
      seen.insert(directions(r.orientation));
    }
    auto expected = oracle::acyclic_orientations(g.vertex_count(), edges_of(g));
    o.require(seen == expected, "flagged trees do not biject with acyclic orientations");
    flagged_total += seen.size();
  }
  o.detail = std::to_string(flagged_total) + " flagged trees";
  return o;
}

Outcome nc_chains() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : enumerate_nc_maximal_chains(n)) o.require(tree_to_chain(chain_to_tree(c).tree) == c, "C_(T_C) != C");
    for (const auto& t : enumerate_rooted_spanning_trees(complete_graph(n))) {
      o.require(chain_to_tree(tree_to_chain(t)).tree == t, "T_(C_T) != T");
    }
  }
  for (int n = 1; n <= 5; ++n) {
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
    o.require(count_nc_maximal_chains(n) == expected, "chain count != (n+1)^(n-1) at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 6; ++n) {
    auto f = forest_identity(n);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
    o.require(f.lhs == f.rhs && f.lhs == expected, "forest identity fails at n=" + std::to_string(n));
  }
  o.detail = "roundtrips n<=4, counts n<=5, forests n<=6";
  return o;
}

Outcome markov() {
  Outcome o;
  std::vector<std::pair<std::string, SimpleGraph>> graphs = {{"P2", path_graph(2)},   {"P3", path_graph(3)},
                                                             {"K3", complete_graph(3)}, {"C4", cycle_graph(4)},
                                                             {"K4", complete_graph(4)}, {"P5", path_graph(5)}};
  for (const auto& [name, g] : graphs) {
    int n = g.vertex_count();
    auto edges = edges_of(g);
    std::map<std::string, oracle::Dir> by_code;
    for (const auto& ao : enumerate_acyclic_orientations(g)) by_code[encode(g, ao)] = directions(ao);
    mpz_class fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Rational total_covers = 0;
    for (const auto& [code, dir] : by_code) total_covers += static_cast<long>(oracle::cover_count(n, edges, dir));
    for (auto kind : {ChainKind::CS, ChainKind::ELR, ChainKind::SL, ChainKind::CR, ChainKind::IR}) {
      auto r = stationary_verify(g, kind);
      o.require(r.stationary_equation_holds && r.matches, name + " " + to_string(kind) + ": library law check failed");
      for (std::size_t i = 0; i < r.states.size(); ++i) {
        const auto& dir = by_code.at(r.states[i]);
        Rational law;
        if (kind == ChainKind::CR) {
          law = Rational(static_cast<long>(oracle::cover_count(n, edges, dir))) / total_covers;
        } else if (kind == ChainKind::IR) {
          law = Rational(1, static_cast<long>(by_code.size()));
        } else {
          oracle::Edges arcs;
          for (std::size_t e = 0; e < edges.size(); ++e) arcs.push_back(oracle::arc(edges, dir, e));
          law = Rational(oracle::linear_extensions(n, arcs)) / Rational(fact);
        }
        law.canonicalize();
        o.require(r.computed[i] == law, name + " " + to_string(kind) + ": law differs from oracle at " + r.states[i]);
      }
    }
  }
  auto flip = build_flip_graph(cycle_graph(4), ChainKind::IR);
  o.require(flip.states.size() == 14 && flip.regular_degree() == std::optional<std::size_t>(4),
            "C4 IR flip graph is not 4-regular on 14 vertices");
  auto sim = simulate(cycle_graph(4), ChainKind::IR, 42, 1000000, 0);
  double tv = 0;
  for (double f : sim.frequencies) tv += std::abs(f - 1.0 / 14.0);
  tv += static_cast<double>(14 - sim.frequencies.size()) / 14.0;
  tv /= 2;
  o.require(tv < 0.01, "C4 IR simulation total variation " + std::to_string(tv));
  std::ostringstream d;
  d << "6 graphs x 5 chains, C4 IR TV=" << tv;
  o.detail = d.str();
  return o;
}

Outcome interval_reversal_property() {
  Outcome o;
  std::size_t pairs = 0;
  std::vector<std::pair<int, oracle::Edges>> graphs;
  for (int n = 2; n <= 4; ++n) {
    for (auto& e : oracle::all_graphs(n)) graphs.emplace_back(n, e);
  }
  graphs.emplace_back(4, edges_of(cycle_graph(4)));
  for (const auto& [n, edges] : graphs) {
    SimpleGraph g(n, edges);
    auto r = interval_reversal_check(g);
    o.require(r.holds(), "interval reversal is not an injective acyclic involution");
    pairs += r.pairs_checked;
    auto aos = oracle::acyclic_orientations(n, edges);
    for (const auto& ao : enumerate_acyclic_orientations(g)) {
      auto dir = directions(ao);
      std::set<oracle::Dir> results;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto out = oracle::interval_reversal(n, edges, dir, e);
        o.require(directions(interval_reversal(g, ao, e)) == out, "library reversal differs from oracle");
        o.require(aos.count(out) == 1, "oracle reversal is cyclic");
        o.require(oracle::interval_reversal(n, edges, out, e) == dir, "oracle reversal is not an involution");
        results.insert(out);
      }
      o.require(results.size() == edges.size(), "two edges give the same reversal");
    }
  }
  o.detail = std::to_string(pairs) + " (O, e) pairs";
  return o;
}

Outcome expectation() {
  Outcome o;
  const std::vector<Rational> ps = {Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(9, 10)};
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : ps) {
      Rational formula = expected_ao_formula(n, p);
      o.require(formula == expected_ao_bruteforce(n, p), "formula != brute force");
      if (n <= 4) {
        Rational q = 1 - p, total = 0;
        int pairs = n * (n - 1) / 2;
        for (const auto& edges : oracle::all_graphs(n)) {
          Rational w = 1;
          for (int i = 0; i < pairs; ++i) w *= i < static_cast<int>(edges.size()) ? p : q;
          total += w * static_cast<long>(oracle::acyclic_orientations(n, edges).size());
        }
        o.require(formula == total, "formula != labelling oracle");
      }
      if (n == 2) o.require(formula == 1 + p, "n=2 value is not 1+p");
    }
  }
  o.detail = "n=1..5, 5 values of p";
  return o;
}

Outcome percolation() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& [name, g] : percolation_corpus()) {
    int n = g.vertex_count();
    auto edges = edges_of(g);
    oracle::Mask full = (oracle::Mask{1} << n) - 1;
    for (int k = 1; k <= 3; ++k) {
      PercolationInstance inst(g, k);
      std::set<oracle::Mask> brute;
      for (oracle::Mask a = 0; a <= full; ++a) {
        if (oracle::closure(n, edges, k, a) == full) brute.insert(a);
      }
      std::set<oracle::Mask> ideal;
      for (VertexSet s : percolating_sets(inst)) ideal.insert(s.mask());
      o.require(ideal == brute, name + " k=" + std::to_string(k) + ": ideal enumeration != closure");
      ++instances;
    }
  }
  o.require(minimal_percolating_size(PercolationInstance(path_graph(3), 2)) == 2, "P3/k=2 minimum is not 2");
  o.require(minimal_percolating_size(PercolationInstance(grid_graph(3, 3), 2)) == 3, "3x3 grid/k=2 minimum is not 3");
  o.detail = std::to_string(instances) + " (graph, k) instances";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Alexander duality", duality},
      {"Irreducible decompositions", decompositions},
      {"Cell-complex structure", cell_structure},
      {"Labels", labels},
      {"Betti counts", betti},
      {"Bijection suite", bijections},
      {"AO correspondence", ao_correspondence},
      {"NC chains", nc_chains},
      {"Markov chains", markov},
      {"Interval reversal", interval_reversal_property},
      {"Expectation formula", expectation},
      {"Percolation", percolation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu. %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                seconds);
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
