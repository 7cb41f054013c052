#include "core/reports.hpp"

#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/expectation.hpp"
#include "core/monomial.hpp"
#include "core/orientation.hpp"
#include "core/pao.hpp"
#include "core/percolation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace aoforge {

void Report::check(std::string name, Json expected, Json actual) {
  bool pass = expected == actual;
  verdicts_.push_back(Verdict{std::move(name), std::move(expected), std::move(actual), pass});
}

void Report::check_true(std::string name, bool ok) { check(std::move(name), true, ok); }

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const Verdict& v : other.verdicts_) verdicts_.push_back(Verdict{prefix + v.name, v.expected, v.actual, v.pass});
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return !v.pass; }));
}

Json Report::to_json() const {
  Json verdicts = Json::array();
  for (const Verdict& v : verdicts_) {
    verdicts.push_back(Json{{"name", v.name}, {"expected", v.expected}, {"actual", v.actual}, {"pass", v.pass}});
  }
  return Json{{"results", results}, {"verdicts", verdicts}};
}

namespace {

Json degree_vectors(const std::vector<std::vector<int>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

Json violations_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const Violation& x : v) out.push_back(Json{{"cell", x.cell}, {"detail", x.detail}});
  return out;
}

std::string fraction(std::size_t passed, std::size_t total) {
  return std::to_string(passed) + "/" + std::to_string(total);
}

std::set<std::vector<int>> generator_set(const MonomialIdeal& ideal) {
  std::set<std::vector<int>> out;
  for (const Monomial& m : ideal.generators()) out.insert(m.exponents());
  return out;
}

Json tree_with_depiction(const RootedSpanningTree& t, const DepictionFunction& p) {
  Json positions = Json::object();
  for (int v = 1; v <= t.root(); ++v) positions[v == t.root() ? std::string("r") : std::to_string(v)] = p(v);
  Json out = to_json(t);
  out["depiction"] = positions;
  return out;
}

}  // namespace

Report graph_report(const SimpleGraph& g) {
  Report r;
  r.results["graph"] = to_json(g);
  r.results["connected"] = g.is_connected();
  r.results["components"] = to_json(g.components());
  r.results["degrees"] = g.degrees();
  r.results["rooted_extension"] = to_json(rooted_extension(g));
  Integer count = count_acyclic_orientations(g);
  r.results["acyclic_orientation_count"] = to_string(count);
  std::vector<AcyclicOrientationRecord> census = acyclic_orientation_census(g);
  Json aos = Json::array();
  std::set<std::vector<int>> in_vectors, out_vectors;
  for (const AcyclicOrientationRecord& rec : census) {
    in_vectors.insert(rec.in_degree);
    out_vectors.insert(rec.out_degree);
    aos.push_back(Json{{"orientation", encode(g, rec.orientation)},
                       {"in_degree", rec.in_degree},
                       {"out_degree", rec.out_degree},
                       {"linear_extensions", to_string(linear_extension_count(g, rec.orientation))}});
  }
  r.results["acyclic_orientations"] = aos;
  r.check("enumeration matches deletion-contraction count", to_string(count), std::to_string(census.size()));
  r.check("distinct in-degree vectors", census.size(), in_vectors.size());
  r.check("distinct out-degree vectors", census.size(), out_vectors.size());
  return r;
}

Report paos_report(const SimpleGraph& g) {
  Report r;
  std::vector<Pao> paos = enumerate_paos(g);
  Json list = Json::array();
  std::set<std::vector<VertexSet>> families;
  std::size_t closed = 0, graded = 0, full_blocks = 0;
  std::map<int, long> by_dim;
  for (const Pao& p : paos) {
    IdealFamily j = order_ideal_family(g, p);
    std::vector<VertexSet> sets = j.sets();
    families.insert(sets);
    if (j.closed_under_union_and_intersection()) ++closed;
    auto [shortest, longest] = j.maximal_chain_lengths();
    if (shortest == longest && longest == static_cast<int>(p.block_count())) ++graded;
    if (static_cast<int>(p.block_count()) == g.vertex_count()) ++full_blocks;
    ++by_dim[p.dim()];
    Json entry = to_json(p);
    entry["ideal_family"] = to_json(sets);
    entry["no_out_degrees"] = pao_no_out_degrees(g, p);
    list.push_back(entry);
  }
  Json dims = Json::array();
  for (const auto& [d, c] : by_dim) dims.push_back({d, c});
  r.results["count"] = paos.size();
  r.results["by_dimension"] = dims;
  r.results["paos"] = list;
  r.check("ideal families are pairwise distinct", paos.size(), families.size());
  r.check("ideal families closed under union and intersection", paos.size(), closed);
  r.check("maximal chains have one step per block", paos.size(), graded);
  r.check("PAOs with singleton blocks equal acyclic orientations", to_string(count_acyclic_orientations(g)),
          std::to_string(full_blocks));
  return r;
}

Report complex_report(const SimpleGraph& g, ComplexKind kind) {
  Report r;
  CellComplex c = build_complex(g, kind);
  Json cells = Json::array();
  std::vector<std::vector<int>> zero_labels;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Cell& cell = c.cells()[i];
    Json covers = Json::array();
    for (std::size_t j : c.covers_below(i)) covers.push_back(c.cells()[j].id);
    cells.push_back(Json{{"id", cell.id}, {"dim", cell.dim}, {"label", cell.label}, {"covers", covers}});
    if (cell.dim == 0) zero_labels.push_back(cell.label);
  }
  long euler = euler_characteristic(c);
  r.results["kind"] = to_string(kind);
  r.results["f_vector"] = c.f_vector();
  r.results["euler_characteristic"] = euler;
  r.results["cells"] = cells;
  std::vector<Violation> lcm = verify_label_lcm(c);
  std::vector<Violation> minimality = verify_minimality(c);
  std::vector<Violation> dims = verify_dimension_order(c);
  r.results["lcm_violations"] = violations_json(lcm);
  r.results["minimality_violations"] = violations_json(minimality);
  r.check("label lcm violations", 0, lcm.size());
  r.check("non-strict face label pairs", 0, minimality.size());
  r.check("dimension order violations", 0, dims.size());
  std::sort(zero_labels.begin(), zero_labels.end());
  if (kind == ComplexKind::Z) {
    r.check("euler characteristic", 1, euler);
    std::size_t tight = 0, feasible = 0, strict = 0;
    std::vector<Pao> paos = enumerate_paos(g);
    for (const Pao& p : paos) {
      TightnessReport t = zonotope_tightness(g, p);
      if (t.matches_ideal_family) ++tight;
      if (t.witness_feasible) ++feasible;
      if (t.interior_point_strict) ++strict;
    }
    r.check("tight sets reproduce the ideal family", paos.size(), tight);
    r.check("tightness witnesses are feasible", paos.size(), feasible);
    r.check("interior point is strict", paos.size(), strict);
    VertexCoordinatesReport v = vertex_coordinates_check(g);
    r.results["vertices"] = degree_vectors(v.vertices);
    r.check_true("0-cells biject with acyclic orientations", v.bijection);
    r.check_true("0-cell witnesses equal indeg+1", v.witnesses_integral_indegree);
    r.check_true("vertex coordinate sums equal n+|E|", v.sums_constant);
  } else if (kind == ComplexKind::Y) {
    std::set<std::vector<int>> labels(zero_labels.begin(), zero_labels.end());
    r.check("0-cells equal acyclic orientations plus n",
            to_string(Integer(count_acyclic_orientations(g) + g.vertex_count())), std::to_string(zero_labels.size()));
    r.check_true("0-cell labels are the generators of the artinianized ideal", labels == generator_set(artinianized_A(g)));
  } else {
    std::vector<Monomial> monos;
    for (const auto& l : zero_labels) monos.emplace_back(l);
    r.check_true("minimized 0-cell labels are the generators of T_G",
                 minimize(g.vertex_count(), monos) == ideal_T(g));
    DualLabelReport d = dual_label_identity(g);
    r.results["dual_label_violations"] = violations_json(d.violations);
    r.results["dual_label_pairs_checked"] = d.pairs_checked;
    r.check("dual label identity violations", 0, d.violations.size());
    r.check_true("X order reverses the Y order on pair cells", d.order_reversed);
  }
  return r;
}

Report ideals_report(const SimpleGraph& g) {
  Report r;
  MonomialIdeal a = ideal_A(g);
  MonomialIdeal t = ideal_T(g);
  MonomialIdeal art = artinianized_A(g);
  Integer aos = count_acyclic_orientations(g);
  r.results["A"] = to_json(a);
  r.results["T"] = to_json(t);
  r.results["artinianized_A"] = to_json(art);
  r.check("generators of A_G equal acyclic orientations", to_string(aos), std::to_string(a.generator_count()));
  r.check("generators of T_G equal connected subsets", connected_subsets(g).size(), t.generator_count());
  r.check("generators of the artinianized ideal", to_string(Integer(aos + g.vertex_count())),
          std::to_string(art.generator_count()));
  DecompositionReport d = irreducible_decomposition_check(g);
  r.check_true("A_G equals the intersection over connected subsets", d.a_holds);
  r.check_true("T_G equals the intersection over acyclic orientations", d.t_holds);
  Json betti = Json::object();
  for (auto [which, name] : {std::pair{BettiIdeal::A, "A"}, std::pair{BettiIdeal::T, "T"}}) {
    BettiReport b = betti_counts(g, which);
    Json counts = Json::array();
    for (auto [i, c] : b.counts) counts.push_back({i, c});
    betti[name] = counts;
    r.check(std::string("beta_0 of ") + name + " equals its generator count", b.generator_count,
            b.counts.empty() ? 0L : b.counts.front().second);
  }
  r.results["betti"] = betti;
  std::vector<int> deg = g.degrees();
  StandardMonomials sm = standard_monomials(t, deg);
  r.results["standard_monomials_of_T"] = sm.monomials.size();
  r.check_true("standard monomials of T_G lie in the degree box", sm.exhaustive);
  std::set<std::vector<int>> maximal, outdeg;
  for (const Monomial& m : maximal_standard_monomials(t, deg)) maximal.insert(m.exponents());
  for (const Orientation& o : enumerate_acyclic_orientations(g)) outdeg.insert(out_degrees(g, o));
  r.check_true("maximal standard monomials of T_G are the out-degree vectors", maximal == outdeg);
  return r;
}

Report duality_report(const SimpleGraph& g) {
  Report r;
  MonomialIdeal a = ideal_A(g);
  MonomialIdeal t = ideal_T(g);
  std::vector<int> top = shifted_degrees(g, 1);
  MonomialIdeal dual_a = alexander_dual(a, top);
  MonomialIdeal dual_t = alexander_dual(t, top);
  r.results["a"] = top;
  r.results["A"] = to_json(a);
  r.results["T"] = to_json(t);
  r.results["dual_of_A"] = to_json(dual_a);
  r.results["dual_of_T"] = to_json(dual_t);
  r.check("dual of A_G equals T_G", to_json(t)["generators"], to_json(dual_a)["generators"]);
  r.check("dual of T_G equals A_G", to_json(a)["generators"], to_json(dual_t)["generators"]);
  return r;
}

Report nct_roundtrip_report(const SimpleGraph& g) {
  Report r;
  MonomialIdeal t = ideal_T(g);
  std::vector<int> deg = g.degrees();
  StandardMonomials sm = standard_monomials(t, deg);
  std::size_t monomial_ok = 0, canonical_ok = 0;
  for (const Monomial& m : sm.monomials) {
    TreeConstruction tc = monomial_to_tree(g, m.exponents());
    if (tree_to_monomial(g, tc.tree) == m.exponents()) ++monomial_ok;
    if (tc.depiction == canonical_depiction(tc.tree) && is_noncrossing(tc.tree, tc.depiction)) ++canonical_ok;
  }
  std::vector<RootedSpanningTree> trees = enumerate_rooted_spanning_trees(g);
  std::size_t tree_ok = 0, standard_ok = 0;
  for (const RootedSpanningTree& tree : trees) {
    std::vector<int> b = tree_to_monomial(g, tree);
    if (!t.contains(Monomial(b))) ++standard_ok;
    if (monomial_to_tree(g, b).tree == tree) ++tree_ok;
  }
  r.results["standard_monomials"] = sm.monomials.size();
  r.results["spanning_trees"] = trees.size();
  r.results["monomial_roundtrips"] = fraction(monomial_ok, sm.monomials.size());
  r.results["tree_roundtrips"] = fraction(tree_ok, trees.size());
  r.check_true("standard monomials lie in the degree box", sm.exhaustive);
  r.check("standard monomials equal spanning trees of G_r", trees.size(), sm.monomials.size());
  r.check("monomial -> tree -> monomial", fraction(sm.monomials.size(), sm.monomials.size()),
          fraction(monomial_ok, sm.monomials.size()));
  r.check("constructed depiction is canonical and non-crossing", sm.monomials.size(), canonical_ok);
  r.check("tree -> monomial -> tree", fraction(trees.size(), trees.size()), fraction(tree_ok, trees.size()));
  r.check("tree monomials are standard", trees.size(), standard_ok);
  return r;
}

Report nct_to_tree_report(const SimpleGraph& g, const std::vector<int>& a) {
  Report r;
  MonomialIdeal t = ideal_T(g);
  if (t.contains(Monomial(a))) throw InvalidArgument("monomial " + Monomial(a).to_string() + " lies in T_G");
  TreeConstruction tc = monomial_to_tree(g, a);
  Json trace = Json::array();
  for (const TraceStep& s : tc.trace) {
    Json admissible = Json::array();
    for (auto [k, j] : s.admissible) admissible.push_back({k, j});
    trace.push_back(Json{{"step", s.step},
                         {"vertex", s.vertex},
                         {"anchor", s.anchor},
                         {"parent", s.parent == tc.tree.root() ? Json("r") : Json(s.parent)},
                         {"admissible", admissible}});
  }
  r.results["monomial"] = a;
  r.results["tree"] = tree_with_depiction(tc.tree, tc.depiction);
  r.results["trace"] = trace;
  r.check_true("depiction is canonical", tc.depiction == canonical_depiction(tc.tree));
  r.check_true("depiction is non-crossing", is_noncrossing(tc.tree, tc.depiction));
  r.check("tree maps back to the monomial", a, tree_to_monomial(g, tc.tree));
  return r;
}

Report nct_to_monomial_report(const SimpleGraph& g, const RootedSpanningTree& tree) {
  Report r;
  validate_tree(g, tree);
  std::vector<int> b = tree_to_monomial(g, tree);
  DepictionFunction p = canonical_depiction(tree);
  r.results["tree"] = tree_with_depiction(tree, p);
  r.results["monomial"] = b;
  r.results["monomial_text"] = Monomial(b).to_string();
  r.check_true("monomial is standard for T_G", !ideal_T(g).contains(Monomial(b)));
  r.check("monomial maps back to the tree", to_json(tree), to_json(monomial_to_tree(g, b).tree));
  return r;
}

Report nct_orientations_report(const SimpleGraph& g) {
  Report r;
  std::vector<RootedSpanningTree> trees = enumerate_rooted_spanning_trees(g);
  std::set<Orientation> flagged_orientations;
  std::size_t flagged = 0, extensions_ok = 0, complete_ok = 0;
  Json list = Json::array();
  for (const RootedSpanningTree& t : trees) {
    TreeOrientation to = tree_to_orientation(g, t);
    if (!to.flagged) continue;
    ++flagged;
    if (to.extension_valid) ++extensions_ok;
    if (to.orientation.is_complete() && is_acyclic(g, to.orientation)) ++complete_ok;
    flagged_orientations.insert(to.orientation);
    list.push_back(Json{{"tree", to_json(t)}, {"orientation", encode(g, to.orientation)}, {"linear_extension", to.linear_extension}});
  }
  Integer aos = count_acyclic_orientations(g);
  std::size_t inverse_ok = 0;
  for (const Orientation& o : enumerate_acyclic_orientations(g)) {
    TreeOrientation back = tree_to_orientation(g, ao_to_tree(g, o));
    if (back.flagged && back.orientation == o) ++inverse_ok;
  }
  r.results["spanning_trees"] = trees.size();
  r.results["flagged_trees"] = flagged;
  r.results["acyclic_orientations"] = to_string(aos);
  r.results["flagged"] = list;
  r.check("flagged trees equal acyclic orientations", to_string(aos), std::to_string(flagged));
  r.check("flagged trees give distinct orientations", flagged, flagged_orientations.size());
  r.check("flagged orientations are complete and acyclic", flagged, complete_ok);
  r.check("n+1-p is a linear extension", flagged, extensions_ok);
  r.check("orientation -> tree -> orientation", to_string(aos), std::to_string(inverse_ok));
  return r;
}

Report nct_chains_report(int n) {
  Report r;
  std::vector<NCChain> chains = enumerate_nc_maximal_chains(n);
  std::size_t chain_ok = 0;
  std::set<RootedSpanningTree> trees;
  for (const NCChain& c : chains) {
    DepictedTree t = chain_to_tree(c);
    trees.insert(t.tree);
    if (tree_to_chain(t.tree) == c) ++chain_ok;
  }
  std::vector<RootedSpanningTree> all = enumerate_rooted_spanning_trees(complete_graph(n));
  std::size_t tree_ok = 0;
  for (const RootedSpanningTree& t : all) {
    if (chain_to_tree(tree_to_chain(t)).tree == t) ++tree_ok;
  }
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
  r.results["n"] = n;
  r.results["maximal_chains"] = chains.size();
  r.results["rooted_forests"] = all.size();
  r.check("maximal chains equal (n+1)^(n-1)", to_string(expected), std::to_string(chains.size()));
  r.check("memoized chain count", to_string(expected), to_string(count_nc_maximal_chains(n)));
  r.check("chain -> tree -> chain", fraction(chains.size(), chains.size()), fraction(chain_ok, chains.size()));
  r.check("chains give distinct trees", chains.size(), trees.size());
  r.check("tree -> chain -> tree", fraction(all.size(), all.size()), fraction(tree_ok, all.size()));
  return r;
}

Report nct_chain_to_tree_report(const NCChain& c) {
  Report r;
  DepictedTree t = chain_to_tree(c);
  r.results["chain"] = to_json(c);
  r.results["tree"] = tree_with_depiction(t.tree, t.depiction);
  r.check_true("depiction is canonical", t.depiction == canonical_depiction(t.tree));
  r.check("tree maps back to the chain", to_json(c), to_json(tree_to_chain(t.tree)));
  return r;
}

Report nct_forest_report(int n) {
  Report r;
  ForestIdentity f = forest_identity(n);
  r.results["n"] = n;
  r.results["lhs"] = to_string(f.lhs);
  r.results["rhs"] = to_string(f.rhs);
  r.results["noncrossing_partitions"] = f.partitions;
  r.check("forest identity", to_string(f.lhs), to_string(f.rhs));
  return r;
}

Report chain_verify_report(const SimpleGraph& g, ChainKind kind) {
  Report r;
  StationaryReport s = stationary_verify(g, kind);
  TransitionMatrix p = exact_transition_matrix(g, kind);
  Json law = Json::array();
  for (std::size_t i = 0; i < s.states.size(); ++i) {
    law.push_back(Json{{"orientation", s.states[i]}, {"computed", to_string(s.computed[i])}, {"expected", to_string(s.expected[i])}});
  }
  r.results["kind"] = to_string(kind);
  r.results["chain_states"] = s.chain_states;
  r.results["law"] = law;
  if (kind == ChainKind::CR) r.results["normalization"] = to_string(s.normalization);
  r.check_true("transition matrix is row-stochastic", p.row_stochastic());
  r.check_true("chain is irreducible", s.irreducible);
  r.check_true("stationary equation holds", s.stationary_equation_holds);
  r.check("stationary law matches the closed form", to_json(s.expected), to_json(s.computed));
  if (s.labelling_graph_regular) r.check_true("labelling graph is |E|-regular", *s.labelling_graph_regular);
  if (s.labelling_graph_bipartite) r.check_true("labelling graph is bipartite", *s.labelling_graph_bipartite);
  return r;
}

Report chain_simulate_report(const SimpleGraph& g, ChainKind kind, std::uint64_t seed, std::uint64_t steps,
                             std::uint64_t burn_in, std::optional<double> tolerance) {
  Report r;
  SimulationResult sim = simulate(g, kind, seed, steps, burn_in);
  auto table = [](const std::vector<std::string>& states, const std::vector<std::uint64_t>& counts,
                  const std::vector<double>& freqs) {
    Json out = Json::object();
    for (std::size_t i = 0; i < states.size(); ++i) out[states[i]] = Json{{"count", counts[i]}, {"frequency", freqs[i]}};
    return out;
  };
  r.results["kind"] = to_string(kind);
  r.results["seed"] = seed;
  r.results["steps"] = steps;
  r.results["burn_in"] = burn_in;
  r.results["frequencies"] = table(sim.states, sim.counts, sim.frequencies);
  if (kind == ChainKind::SL) {
    r.results["s_r_visits"] = sim.s_r_visits;
    r.results["conditional_frequencies"] = table(sim.conditional_states, sim.conditional_counts, sim.conditional_frequencies);
  }
  std::optional<double> tv;
  try {
    StationaryReport exact = stationary_verify(g, kind);
    const auto& states = kind == ChainKind::SL ? sim.conditional_states : sim.states;
    const auto& freqs = kind == ChainKind::SL ? sim.conditional_frequencies : sim.frequencies;
    std::map<std::string, double> diff;
    for (std::size_t i = 0; i < exact.states.size(); ++i) diff[exact.states[i]] = exact.expected[i].get_d();
    for (std::size_t i = 0; i < states.size(); ++i) diff[states[i]] -= freqs[i];
    double total = 0;
    for (const auto& entry : diff) total += std::abs(entry.second);
    tv = total / 2;
    r.results["total_variation"] = *tv;
  } catch (const ResourceLimit&) {
    r.results["total_variation"] = nullptr;
  }
  if (tolerance) {
    r.check_true("total variation below " + std::to_string(*tolerance), tv.has_value() && *tv < *tolerance);
  }
  return r;
}

Report flip_graph_report(const SimpleGraph& g, ChainKind kind) {
  Report r;
  FlipGraph f = build_flip_graph(g, kind);
  Json edges = Json::array();
  for (auto [a, b] : f.edges) edges.push_back({encode(g, f.states[a]), encode(g, f.states[b])});
  std::optional<std::size_t> degree = f.regular_degree();
  r.results["kind"] = to_string(kind);
  r.results["vertices"] = f.states.size();
  r.results["edge_count"] = f.edges.size();
  r.results["regular_degree"] = degree ? Json(*degree) : Json(nullptr);
  r.results["connected"] = f.connected();
  r.results["bipartite"] = f.bipartite();
  r.results["edges"] = edges;
  r.check("vertices equal acyclic orientations", to_string(count_acyclic_orientations(g)), std::to_string(f.states.size()));
  if (g.is_connected()) r.check_true("flip graph is connected", f.connected());
  if (kind == ChainKind::IR) {
    r.check("flip graph is |E|-regular", g.edge_count(), degree ? Json(*degree) : Json(nullptr));
    r.check_true("contains the cover-reversal graph", f.contains_edges_of(build_flip_graph(g, ChainKind::CR)));
  } else {
    r.check_true("flip graph is bipartite", f.bipartite());
  }
  return r;
}

Report interval_reversal_report(const SimpleGraph& g) {
  Report r;
  IntervalReversalReport ir = interval_reversal_check(g);
  r.results["pairs_checked"] = ir.pairs_checked;
  r.check("results that are not acyclic", 0, ir.not_acyclic);
  r.check("pairs where reversal is not an involution", 0, ir.not_involution);
  r.check("distinct edges with equal results", 0, ir.edge_collisions);
  return r;
}

Report expected_ao_report(int n, const Rational& p, bool oracle, int jobs) {
  Report r;
  Rational formula = expected_ao_formula(n, p);
  std::size_t parking = enumerate_parking_functions(n).size();
  Integer expected_parking;
  mpz_ui_pow_ui(expected_parking.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
  r.results["n"] = n;
  r.results["p"] = to_string(p);
  r.results["parking_functions"] = parking;
  r.results["formula"] = to_string(formula);
  r.check("parking functions equal (n+1)^(n-1)", to_string(expected_parking), std::to_string(parking));
  if (n == 2) r.check("closed form 1+p", to_string(Rational(1 + p)), to_string(formula));
  if (oracle) {
    Rational brute = expected_ao_bruteforce(n, p, jobs);
    r.results["bruteforce"] = to_string(brute);
    r.check("formula equals the sum over all graphs", to_string(brute), to_string(formula));
  }
  return r;
}

Report percolation_report(const SimpleGraph& g, int k, const PercolationQuery& query) {
  Report r;
  PercolationInstance inst(g, k);
  r.results["n"] = g.vertex_count();
  r.results["k"] = k;
  r.results["ideal"] = to_json(percolation_ideal(inst));
  if (query.closure) {
    VertexSet cl = closure(inst, *query.closure);
    r.results["initial"] = to_json(*query.closure);
    r.results["closure"] = to_json(cl);
    r.results["percolates"] = cl == g.vertices();
  }
  std::vector<VertexSet> by_ideal = percolating_sets(inst);
  std::vector<VertexSet> by_closure = percolating_sets_by_closure(inst);
  r.results["percolating_set_count"] = by_ideal.size();
  if (query.all_sets) r.results["percolating_sets"] = to_json(by_ideal);
  if (query.min_size || (!query.all_sets && !query.closure)) r.results["minimal_size"] = minimal_percolating_size(inst);
  r.check("ideal enumeration equals closure enumeration", to_json(by_closure), to_json(by_ideal));
  return r;
}

namespace {

Report graph_checks(const NamedGraph& ng, int n_max) {
  const SimpleGraph& g = ng.graph;
  int n = g.vertex_count();
  Report r;
  r.absorb(graph_report(g), "graph: ");
  r.absorb(paos_report(g), "paos: ");
  r.absorb(ideals_report(g), "ideals: ");
  r.absorb(duality_report(g), "duality: ");
  for (ComplexKind kind : {ComplexKind::Z, ComplexKind::Y, ComplexKind::X}) {
    r.absorb(complex_report(g, kind), "complex " + to_string(kind) + ": ");
  }
  r.absorb(nct_roundtrip_report(g), "nct roundtrip: ");
  r.absorb(nct_orientations_report(g), "nct orientations: ");
  if (g.edge_count() > 0) {
    if (n <= 4) r.absorb(interval_reversal_report(g), "interval reversal: ");
    if (n <= 4) {
      r.absorb(flip_graph_report(g, ChainKind::CR), "flip CR: ");
      r.absorb(flip_graph_report(g, ChainKind::IR), "flip IR: ");
    }
  }
  bool chains = n <= std::min(n_max, 4) || ng.name == "P5";
  if (chains) {
    for (ChainKind kind : {ChainKind::CS, ChainKind::ELR, ChainKind::SL, ChainKind::CR, ChainKind::IR}) {
      if (g.edge_count() == 0 && kind != ChainKind::CS && kind != ChainKind::SL) continue;
      r.absorb(chain_verify_report(g, kind), "chain " + to_string(kind) + ": ");
    }
  }
  return r;
}

}  // namespace

Report verify_all(int n_max, int jobs) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  std::vector<NamedGraph> corpus = connected_corpus(n_max);
  std::vector<Report> per_graph(corpus.size());
  std::vector<std::string> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        per_graph[i] = graph_checks(corpus[i], n_max);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int workers = std::clamp(jobs, 1, 64);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  Report r;
  Json graphs = Json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    graphs.push_back(Json{{"name", corpus[i].name}, {"graph", to_json(corpus[i].graph)}});
    if (!errors[i].empty()) {
      r.check(corpus[i].name + ": completed", "ok", errors[i]);
      continue;
    }
    r.absorb(per_graph[i], corpus[i].name + " / ");
  }
  if (n_max >= 5) {
    long small = std::count_if(corpus.begin(), corpus.end(), [](const NamedGraph& x) { return x.graph.vertex_count() <= 5; });
    r.check_true("corpus has at least 30 connected graphs with n <= 5", small >= 30);
  }
  if (n_max >= 4) {
    SimpleGraph c4 = cycle_graph(4);
    FlipGraph ir = build_flip_graph(c4, ChainKind::IR);
    r.check("C4 / IR flip graph vertices", 14, ir.states.size());
    r.check("C4 / IR flip graph degree", 4, ir.regular_degree() ? Json(*ir.regular_degree()) : Json(nullptr));
    r.check("C4 / CR flip graph edges", 24, build_flip_graph(c4, ChainKind::CR).edges.size());
    r.absorb(chain_simulate_report(c4, ChainKind::IR, 42, 1000000, 0, 0.01), "C4 / simulate IR: ");
  }
  for (int n = 1; n <= std::min(n_max, 4); ++n) r.absorb(nct_chains_report(n), "chains n=" + std::to_string(n) + ": ");
  for (int n = 1; n <= std::min(n_max, 5); ++n) {
    Integer expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
    r.check("chain count n=" + std::to_string(n), to_string(expected), to_string(count_nc_maximal_chains(n)));
  }
  for (int n = 1; n <= 6; ++n) r.absorb(nct_forest_report(n), "forest n=" + std::to_string(n) + ": ");
  for (int n = 1; n <= std::min(n_max, 5); ++n) {
    for (const char* p : {"1/10", "1/3", "1/2", "2/3", "9/10"}) {
      r.absorb(expected_ao_report(n, parse_rational(p), true, jobs), "expected-ao n=" + std::to_string(n) + " p=" + p + ": ");
    }
  }
  for (const NamedGraph& ng : percolation_corpus()) {
    for (int k = 1; k <= 3; ++k) {
      r.absorb(percolation_report(ng.graph, k, PercolationQuery{}), "percolation " + ng.name + " k=" + std::to_string(k) + ": ");
    }
  }
  r.check("percolation P3 k=2 minimal size", 2, minimal_percolating_size(PercolationInstance(path_graph(3), 2)));
  r.check("percolation grid3x3 k=2 minimal size", 3, minimal_percolating_size(PercolationInstance(grid_graph(3, 3), 2)));
  r.results["n_max"] = n_max;
  r.results["graphs"] = graphs;
  r.results["verdict_count"] = r.verdicts().size();
  r.results["failures"] = r.failures();
  return r;
}

}  // namespace aoforge
