#pragma once

#include "core/graph.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace aoforge {

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int variable_count() const { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const { return exponents_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  int degree() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial times_variable(int i) const;  // i is 1-based

  // "x1*x2^2"; "1" for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<int> exponents_;
};

// Monomial ideal in n variables, kept as its sorted minimal generators. The
// ideal with no generators is the zero ideal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int n = 0) : n_(n) {}

  int variable_count() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  MonomialIdeal sum(const MonomialIdeal& other) const;

  // The irreducible ideal m^a = <x_i^{a_i} : a_i > 0>.
  static MonomialIdeal irreducible(std::span<const int> a);

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimize(int n, std::vector<Monomial> gens);
  int n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimize(int n, std::vector<Monomial> gens);

// Alexander dual with respect to a.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal, std::span<const int> a);

// Generated by x^{indeg(O)+1} over the acyclic orientations O of G.
MonomialIdeal ideal_A(const SimpleGraph& g);
// Generated by x^{degout_s + 1_s} over nonempty s with G[s] connected.
MonomialIdeal ideal_T(const SimpleGraph& g);
// A_G + m^{deg+2}.
MonomialIdeal artinianized_A(const SimpleGraph& g);

// Componentwise deg_G + shift.
std::vector<int> shifted_degrees(const SimpleGraph& g, int shift);

// x^{degout_s + 1_s} and the exponent vector of m^{degin_s + 1_s}.
Monomial tree_generator(const SimpleGraph& g, VertexSet sigma);
std::vector<int> connected_component_exponent(const SimpleGraph& g, VertexSet sigma);
std::vector<VertexSet> connected_subsets(const SimpleGraph& g);

struct DecompositionReport {
  MonomialIdeal a_ideal;
  MonomialIdeal a_intersection;
  MonomialIdeal t_ideal;
  MonomialIdeal t_intersection;
  bool a_holds = false;
  bool t_holds = false;
};

// A_G against the intersection over connected s, and T_G against the
// intersection over acyclic orientations.
DecompositionReport irreducible_decomposition_check(const SimpleGraph& g);

struct StandardMonomials {
  std::vector<Monomial> monomials;
  // True when every standard monomial of the ideal lies inside the box.
  bool exhaustive = false;
};

StandardMonomials standard_monomials(const MonomialIdeal& ideal, std::span<const int> bound);
// Standard monomials b in the box with b + e_i in the ideal for every i.
std::vector<Monomial> maximal_standard_monomials(const MonomialIdeal& ideal, std::span<const int> bound);

}  // namespace aoforge
