#pragma once

#include "core/graph.hpp"
#include "core/pao.hpp"
#include "core/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace aoforge {

enum class ComplexKind { Z, Y, X };

std::string to_string(ComplexKind kind);
ComplexKind parse_complex_kind(const std::string& text);

enum class CellType {
  Pao,     // a PAO of G (Z)
  Pair,    // (sigma, PAO of G[sigma]) (Y and X)
  Subset,  // nonempty proper subset of 1..n (Y)
};

struct Cell {
  CellType type = CellType::Pao;
  VertexSet sigma;  // support of the PAO, or the subset itself
  Pao pao;          // unused for subset cells
  int dim = 0;
  std::vector<int> label;
  std::string id;
};

// Finite cell poset with monomial labels. The face order is stored as its full
// strict transitive relation.
class CellComplex {
public:
  CellComplex(ComplexKind kind, int n, std::vector<Cell> cells, std::vector<std::vector<std::uint64_t>> below);

  ComplexKind kind() const { return kind_; }
  int variable_count() const { return n_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  // Whether cell i is a proper face of cell j.
  bool precedes(std::size_t i, std::size_t j) const { return (below_[j][i / 64] >> (i % 64)) & 1U; }
  std::vector<std::size_t> faces_below(std::size_t j) const;
  std::vector<std::size_t> covers_below(std::size_t j) const;
  std::vector<long> f_vector() const;
  // Index of the cell with the given id, or size() when absent.
  std::size_t find(const std::string& id) const;

private:
  ComplexKind kind_;
  int n_;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::uint64_t>> below_;
};

CellComplex build_Z(const SimpleGraph& g);
CellComplex build_Y(const SimpleGraph& g);
CellComplex build_X(const SimpleGraph& g);
CellComplex build_complex(const SimpleGraph& g, ComplexKind kind);

struct Violation {
  std::string cell;
  std::string detail;
};

// label(F) must equal the componentwise max over the 0-cells below F.
std::vector<Violation> verify_label_lcm(const CellComplex& c);
// label(F0) <= label(F1) componentwise and label(F0) != label(F1) whenever F0 < F1.
std::vector<Violation> verify_minimality(const CellComplex& c);
// Checks that dimension strictly increases along the face order.
std::vector<Violation> verify_dimension_order(const CellComplex& c);

long euler_characteristic(const CellComplex& c);

enum class BettiIdeal { A, T };

struct BettiReport {
  std::vector<std::pair<int, long>> counts;  // (i, beta_i)
  std::size_t generator_count = 0;           // minimal generators of the matching ideal
  bool matches_generators = false;
};

BettiReport betti_counts(const SimpleGraph& g, BettiIdeal which);

struct TightnessReport {
  std::vector<Rational> witness;
  std::vector<VertexSet> tight_sets;
  bool witness_feasible = false;   // every inequality sum_{s} y_i >= |s| + |E(G[s])| holds
  bool matches_ideal_family = false;
  bool interior_point_strict = false;
};

TightnessReport zonotope_tightness(const SimpleGraph& g, const Pao& p);

struct VertexCoordinatesReport {
  std::size_t zero_cells = 0;
  std::size_t acyclic_orientations = 0;
  bool bijection = false;
  bool witnesses_integral_indegree = false;
  bool sums_constant = false;
  std::vector<std::vector<int>> vertices;
};

VertexCoordinatesReport vertex_coordinates_check(const SimpleGraph& g);

struct DualLabelReport {
  std::size_t pairs_checked = 0;
  std::size_t order_pairs_checked = 0;
  std::vector<Violation> violations;
  bool order_reversed = false;
};

DualLabelReport dual_label_identity(const SimpleGraph& g);

}  // namespace aoforge
