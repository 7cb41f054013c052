#include "core/monomial.hpp"

#include "core/errors.hpp"
#include "core/orientation.hpp"

#include <algorithm>

namespace aoforge {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw InvalidArgument("monomial exponents must be non-negative");
  }
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exponents_.size() != other.exponents_.size()) {
    throw InvalidArgument("monomials in " + std::to_string(exponents_.size()) + " and " +
                          std::to_string(other.exponents_.size()) + " variables");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (exponents_.size() != other.exponents_.size()) throw InvalidArgument("lcm of monomials in different rings");
  std::vector<int> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::times_variable(int i) const {
  std::vector<int> out = exponents_;
  ++out[static_cast<std::size_t>(i - 1)];
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal minimize(int n, std::vector<Monomial> gens) {
  for (const Monomial& m : gens) {
    if (m.variable_count() != n) throw InvalidArgument("generator " + m.to_string() + " is not in " + std::to_string(n) + " variables");
  }
  // Sorting by degree first means a divisor always precedes its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out(n);
  for (Monomial& m : gens) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.gens_.push_back(std::move(m));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.variable_count() != n_) {
    throw InvalidArgument("monomial in " + std::to_string(m.variable_count()) + " variables tested against an ideal in " +
                          std::to_string(n_));
  }
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (n_ != other.n_) throw InvalidArgument("intersection of ideals in different rings");
  std::vector<Monomial> lcms;
  lcms.reserve(gens_.size() * other.gens_.size());
  for (const Monomial& a : gens_)
    for (const Monomial& b : other.gens_) lcms.push_back(a.lcm(b));
  return minimize(n_, std::move(lcms));
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  if (n_ != other.n_) throw InvalidArgument("sum of ideals in different rings");
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return minimize(n_, std::move(all));
}

MonomialIdeal MonomialIdeal::irreducible(std::span<const int> a) {
  int n = static_cast<int>(a.size());
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw InvalidArgument("negative exponent in irreducible ideal");
    if (a[i] == 0) continue;
    std::vector<int> e(a.size(), 0);
    e[i] = a[i];
    gens.emplace_back(std::move(e));
  }
  return minimize(n, std::move(gens));
}

namespace {

MonomialIdeal unit_ideal(int n) { return minimize(n, {Monomial::one(n)}); }

MonomialIdeal intersect_all(int n, const std::vector<std::vector<int>>& exponents) {
  MonomialIdeal acc = unit_ideal(n);
  for (const auto& a : exponents) acc = acc.intersect(MonomialIdeal::irreducible(a));
  return acc;
}

}  // namespace

MonomialIdeal alexander_dual(const MonomialIdeal& ideal, std::span<const int> a) {
  int n = ideal.variable_count();
  if (static_cast<int>(a.size()) != n) throw InvalidArgument("alexander_dual: exponent vector has the wrong length");
  Monomial top{std::vector<int>(a.begin(), a.end())};
  std::vector<std::vector<int>> components;
  for (const Monomial& b : ideal.generators()) {
    if (!b.divides(top)) {
      throw InvalidArgument("alexander_dual: generator " + b.to_string() + " does not divide " + top.to_string());
    }
    std::vector<int> c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[i] >= 1 ? a[i] + 1 - b[i] : 0;
    components.push_back(std::move(c));
  }
  return intersect_all(n, components);
}

std::vector<int> shifted_degrees(const SimpleGraph& g, int shift) {
  std::vector<int> out = g.degrees();
  for (int& d : out) d += shift;
  return out;
}

MonomialIdeal ideal_A(const SimpleGraph& g) {
  std::vector<Monomial> raw;
  for (const Orientation& o : enumerate_acyclic_orientations(g)) {
    std::vector<int> e = in_degrees(g, o);
    for (int& x : e) ++x;
    raw.emplace_back(std::move(e));
  }
  std::size_t raw_count = raw.size();
  MonomialIdeal out = minimize(g.vertex_count(), std::move(raw));
  if (out.generator_count() != raw_count) {
    throw InternalError("A_G is not minimally generated by the acyclic orientations: " + std::to_string(raw_count) +
                        " orientations, " + std::to_string(out.generator_count()) + " minimal generators");
  }
  return out;
}

std::vector<VertexSet> connected_subsets(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  auto full = VertexSet::range(g.vertex_count()).mask();
  for (VertexSet::Mask m = 1; m <= full; ++m) {
    if (g.is_connected_within(VertexSet(m))) out.emplace_back(m);
  }
  return out;
}

Monomial tree_generator(const SimpleGraph& g, VertexSet sigma) {
  std::vector<int> e(static_cast<std::size_t>(g.vertex_count()), 0);
  sigma.for_each([&](int v) { e[static_cast<std::size_t>(v - 1)] = g.degree_out(v, sigma) + 1; });
  return Monomial(std::move(e));
}

std::vector<int> connected_component_exponent(const SimpleGraph& g, VertexSet sigma) {
  std::vector<int> e(static_cast<std::size_t>(g.vertex_count()), 0);
  sigma.for_each([&](int v) { e[static_cast<std::size_t>(v - 1)] = g.degree_in(v, sigma) + 1; });
  return e;
}

MonomialIdeal ideal_T(const SimpleGraph& g) {
  std::vector<Monomial> raw;
  for (VertexSet sigma : connected_subsets(g)) raw.push_back(tree_generator(g, sigma));
  std::size_t raw_count = raw.size();
  MonomialIdeal out = minimize(g.vertex_count(), std::move(raw));
  if (out.generator_count() != raw_count) {
    throw InternalError("T_G is not minimally generated by the connected subsets: " + std::to_string(raw_count) +
                        " subsets, " + std::to_string(out.generator_count()) + " minimal generators");
  }
  return out;
}

MonomialIdeal artinianized_A(const SimpleGraph& g) {
  std::vector<Monomial> powers;
  std::vector<int> top = shifted_degrees(g, 2);
  for (std::size_t i = 0; i < top.size(); ++i) {
    std::vector<int> e(top.size(), 0);
    e[i] = top[i];
    powers.emplace_back(std::move(e));
  }
  return ideal_A(g).sum(minimize(g.vertex_count(), std::move(powers)));
}

DecompositionReport irreducible_decomposition_check(const SimpleGraph& g) {
  DecompositionReport r;
  int n = g.vertex_count();
  r.a_ideal = ideal_A(g);
  r.t_ideal = ideal_T(g);
  std::vector<std::vector<int>> a_components;
  for (VertexSet sigma : connected_subsets(g)) a_components.push_back(connected_component_exponent(g, sigma));
  r.a_intersection = intersect_all(n, a_components);
  std::vector<std::vector<int>> t_components;
  for (const Orientation& o : enumerate_acyclic_orientations(g)) {
    std::vector<int> e = out_degrees(g, o);
    for (int& x : e) ++x;
    t_components.push_back(std::move(e));
  }
  r.t_intersection = intersect_all(n, t_components);
  r.a_holds = r.a_ideal == r.a_intersection;
  r.t_holds = r.t_ideal == r.t_intersection;
  return r;
}

namespace {

template <class F>
void scan_box(std::span<const int> bound, F&& visit) {
  std::vector<int> b(bound.size(), 0);
  while (true) {
    visit(b);
    std::size_t i = 0;
    while (i < b.size() && b[i] == bound[i]) b[i++] = 0;
    if (i == b.size()) return;
    ++b[i];
  }
}

void check_bound(const MonomialIdeal& ideal, std::span<const int> bound) {
  if (static_cast<int>(bound.size()) != ideal.variable_count()) throw InvalidArgument("bounding box has the wrong length");
  for (int x : bound) {
    if (x < 0) throw InvalidArgument("bounding box has a negative side");
  }
}

}  // namespace

StandardMonomials standard_monomials(const MonomialIdeal& ideal, std::span<const int> bound) {
  check_bound(ideal, bound);
  StandardMonomials out;
  scan_box(bound, [&](const std::vector<int>& b) {
    Monomial m(b);
    if (!ideal.contains(m)) out.monomials.push_back(std::move(m));
  });
  std::sort(out.monomials.begin(), out.monomials.end());
  out.exhaustive = true;
  for (std::size_t i = 0; i < bound.size(); ++i) {
    std::vector<int> e(bound.size(), 0);
    e[i] = bound[i] + 1;
    out.exhaustive = out.exhaustive && ideal.contains(Monomial(std::move(e)));
  }
  return out;
}

std::vector<Monomial> maximal_standard_monomials(const MonomialIdeal& ideal, std::span<const int> bound) {
  std::vector<Monomial> out;
  for (const Monomial& m : standard_monomials(ideal, bound).monomials) {
    bool maximal = true;
    for (int i = 1; i <= m.variable_count() && maximal; ++i) maximal = ideal.contains(m.times_variable(i));
    if (maximal) out.push_back(m);
  }
  return out;
}

}  // namespace aoforge
