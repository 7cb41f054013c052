#include "core/cell_complex.hpp"

#include "core/errors.hpp"
#include "core/limits.hpp"
#include "core/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace aoforge {

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Z: return "Z";
    case ComplexKind::Y: return "Y";
    case ComplexKind::X: return "X";
  }
  return "?";
}

ComplexKind parse_complex_kind(const std::string& text) {
  if (text == "Z" || text == "z") return ComplexKind::Z;
  if (text == "Y" || text == "y") return ComplexKind::Y;
  if (text == "X" || text == "x") return ComplexKind::X;
  throw InvalidArgument("unknown complex kind '" + text + "' (expected Z, Y or X)");
}

CellComplex::CellComplex(ComplexKind kind, int n, std::vector<Cell> cells,
                         std::vector<std::vector<std::uint64_t>> below)
    : kind_(kind), n_(n), cells_(std::move(cells)), below_(std::move(below)) {}

std::vector<std::size_t> CellComplex::faces_below(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < below_[j].size(); ++w) {
    for (std::uint64_t bits = below_[j][w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::size_t> CellComplex::covers_below(std::size_t j) const {
  std::vector<std::uint64_t> cover = below_[j];
  for (std::size_t k : faces_below(j)) {
    for (std::size_t w = 0; w < cover.size(); ++w) cover[w] &= ~below_[k][w];
  }
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < cover.size(); ++w) {
    for (std::uint64_t bits = cover[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<long> CellComplex::f_vector() const {
  std::vector<long> f;
  for (const Cell& c : cells_) {
    if (static_cast<std::size_t>(c.dim) >= f.size()) f.resize(static_cast<std::size_t>(c.dim) + 1, 0);
    ++f[static_cast<std::size_t>(c.dim)];
  }
  return f;
}

std::size_t CellComplex::find(const std::string& id) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].id == id) return i;
  }
  return cells_.size();
}

namespace {

void require_connected(const SimpleGraph& g, const char* what) {
  require_size(what, g.vertex_count(), 7);
  if (!g.is_connected()) throw InvalidArgument(std::string(what) + " requires a connected graph");
}

struct Draft {
  Cell cell;
  IdealFamily family;
};

bool draft_less(const Draft& a, const Draft& b) {
  if (a.cell.dim != b.cell.dim) return a.cell.dim < b.cell.dim;
  if (a.cell.type != b.cell.type) return a.cell.type > b.cell.type;  // subsets first
  if (a.cell.sigma != b.cell.sigma) return a.cell.sigma < b.cell.sigma;
  return a.cell.pao < b.cell.pao;
}

template <class Precedes>
CellComplex assemble(ComplexKind kind, int n, std::vector<Draft> drafts, Precedes&& precedes) {
  std::sort(drafts.begin(), drafts.end(), draft_less);
  std::size_t count = drafts.size();
  std::size_t words = (count + 63) / 64;
  std::vector<std::vector<std::uint64_t>> below(count, std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < count; ++i) {
      if (i != j && precedes(drafts[i], drafts[j])) below[j][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  std::vector<Cell> cells;
  cells.reserve(count);
  for (Draft& d : drafts) cells.push_back(std::move(d.cell));
  return CellComplex(kind, n, std::move(cells), std::move(below));
}

std::vector<int> plus_one(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

// All (sigma, PAO of G[sigma]) cells with dimension and label left unset.
std::vector<Draft> pair_drafts(const SimpleGraph& g) {
  std::vector<Draft> out;
  auto full = g.vertices().mask();
  for (VertexSet::Mask m = 1; m <= full; ++m) {
    VertexSet sigma(m);
    for (Pao& p : enumerate_paos(g, sigma)) {
      Draft d{Cell{}, order_ideal_family(g, p)};
      d.cell.type = CellType::Pair;
      d.cell.sigma = sigma;
      d.cell.id = "pair:" + encode(p);
      d.cell.pao = std::move(p);
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace

CellComplex build_Z(const SimpleGraph& g) {
  require_connected(g, "build_Z");
  int n = g.vertex_count();
  std::vector<Draft> drafts;
  for (Pao& p : enumerate_paos(g)) {
    Draft d{Cell{}, order_ideal_family(g, p)};
    d.cell.type = CellType::Pao;
    d.cell.sigma = g.vertices();
    d.cell.dim = n - static_cast<int>(p.block_count());
    d.cell.label = plus_one(pao_no_out_degrees(g, p));
    d.cell.id = encode(p);
    d.cell.pao = std::move(p);
    drafts.push_back(std::move(d));
  }
  return assemble(ComplexKind::Z, n, std::move(drafts),
                  [](const Draft& lo, const Draft& hi) { return hi.family.is_subset_of(lo.family); });
}

CellComplex build_Y(const SimpleGraph& g) {
  require_connected(g, "build_Y");
  int n = g.vertex_count();
  std::vector<int> top = shifted_degrees(g, 2);
  std::vector<Draft> drafts = pair_drafts(g);
  for (Draft& d : drafts) {
    std::vector<int> no_out = pao_no_out_degrees(g, d.cell.pao);
    d.cell.label.assign(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
      auto i = static_cast<std::size_t>(v - 1);
      d.cell.label[i] = d.cell.sigma.contains(v) ? no_out[i] + 1 : top[i];
    }
    d.cell.dim = (n - d.cell.sigma.size()) + d.cell.pao.dim();
  }
  auto full = g.vertices().mask();
  for (VertexSet::Mask m = 1; m < full; ++m) {
    VertexSet a(m);
    Draft d{Cell{}, IdealFamily(n)};
    d.cell.type = CellType::Subset;
    d.cell.sigma = a;
    d.cell.dim = a.size() - 1;
    d.cell.label.assign(static_cast<std::size_t>(n), 0);
    a.for_each([&](int v) { d.cell.label[static_cast<std::size_t>(v - 1)] = top[static_cast<std::size_t>(v - 1)]; });
    d.cell.id = "subset:" + a.to_string();
    drafts.push_back(std::move(d));
  }
  VertexSet all = g.vertices();
  return assemble(ComplexKind::Y, n, std::move(drafts), [all](const Draft& lo, const Draft& hi) {
    bool lo_subset = lo.cell.type == CellType::Subset;
    bool hi_subset = hi.cell.type == CellType::Subset;
    if (lo_subset && hi_subset) return lo.cell.sigma.is_subset_of(hi.cell.sigma);
    if (lo_subset) return lo.cell.sigma.is_subset_of(all - hi.cell.sigma);
    if (hi_subset) return false;
    return hi.family.is_subset_of(lo.family);
  });
}

CellComplex build_X(const SimpleGraph& g) {
  require_connected(g, "build_X");
  int n = g.vertex_count();
  std::vector<Draft> drafts = pair_drafts(g);
  for (Draft& d : drafts) {
    std::vector<int> out = pao_out_degrees(g, d.cell.pao);
    d.cell.label.assign(static_cast<std::size_t>(n), 0);
    d.cell.sigma.for_each([&](int v) {
      auto i = static_cast<std::size_t>(v - 1);
      d.cell.label[i] = out[i] + g.degree_out(v, d.cell.sigma) + 1;
    });
    d.cell.dim = d.cell.sigma.size() - 1 - d.cell.pao.dim();
  }
  return assemble(ComplexKind::X, n, std::move(drafts),
                  [](const Draft& lo, const Draft& hi) { return lo.family.is_subset_of(hi.family); });
}

CellComplex build_complex(const SimpleGraph& g, ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Z: return build_Z(g);
    case ComplexKind::Y: return build_Y(g);
    case ComplexKind::X: return build_X(g);
  }
  throw InvalidArgument("unknown complex kind");
}

namespace {

std::string vector_text(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<Violation> verify_label_lcm(const CellComplex& c) {
  std::vector<Violation> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Cell& cell = c.cells()[j];
    std::vector<int> lcm(static_cast<std::size_t>(c.variable_count()), 0);
    bool any_vertex = false;
    auto absorb = [&](const Cell& v) {
      any_vertex = true;
      for (std::size_t i = 0; i < lcm.size(); ++i) lcm[i] = std::max(lcm[i], v.label[i]);
    };
    if (cell.dim == 0) absorb(cell);
    for (std::size_t i : c.faces_below(j)) {
      if (c.cells()[i].dim == 0) absorb(c.cells()[i]);
    }
    if (!any_vertex) {
      out.push_back({cell.id, "no 0-cell lies below this cell"});
    } else if (lcm != cell.label) {
      out.push_back({cell.id, "label " + vector_text(cell.label) + " but lcm of vertices is " + vector_text(lcm)});
    }
  }
  return out;
}

std::vector<Violation> verify_minimality(const CellComplex& c) {
  std::vector<Violation> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::vector<int>& hi = c.cells()[j].label;
    for (std::size_t i : c.faces_below(j)) {
      const std::vector<int>& lo = c.cells()[i].label;
      bool below = true;
      for (std::size_t t = 0; t < lo.size(); ++t) below = below && lo[t] <= hi[t];
      if (!below || lo == hi) {
        out.push_back({c.cells()[j].id, "face " + c.cells()[i].id + " has label " + vector_text(lo) +
                                            (below ? " equal to " : " not below ") + vector_text(hi)});
      }
    }
  }
  return out;
}

std::vector<Violation> verify_dimension_order(const CellComplex& c) {
  std::vector<Violation> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t i : c.faces_below(j)) {
      if (c.cells()[i].dim >= c.cells()[j].dim) {
        out.push_back({c.cells()[j].id, "face " + c.cells()[i].id + " does not have smaller dimension"});
      }
    }
  }
  return out;
}

long euler_characteristic(const CellComplex& c) {
  long chi = 0;
  for (const Cell& cell : c.cells()) chi += cell.dim % 2 == 0 ? 1 : -1;
  return chi;
}

BettiReport betti_counts(const SimpleGraph& g, BettiIdeal which) {
  require_connected(g, "betti_counts");
  int n = g.vertex_count();
  std::map<int, long> counts;
  if (which == BettiIdeal::A) {
    for (const Pao& p : enumerate_paos(g)) ++counts[n - static_cast<int>(p.block_count())];
  } else {
    auto full = g.vertices().mask();
    for (VertexSet::Mask m = 1; m <= full; ++m) {
      for (const Pao& p : enumerate_paos(g, VertexSet(m))) ++counts[static_cast<int>(p.block_count()) - 1];
    }
  }
  BettiReport r;
  r.counts.assign(counts.begin(), counts.end());
  r.generator_count = which == BettiIdeal::A ? ideal_A(g).generator_count() : ideal_T(g).generator_count();
  r.matches_generators = !r.counts.empty() && r.counts.front().first == 0 &&
                         static_cast<std::size_t>(r.counts.front().second) == r.generator_count;
  return r;
}

TightnessReport zonotope_tightness(const SimpleGraph& g, const Pao& p) {
  require_connected(g, "zonotope_tightness");
  if (p.support() != g.vertices()) throw InvalidArgument("zonotope_tightness needs a PAO of the whole graph");
  validate_pao(g, p);
  int n = g.vertex_count();
  std::vector<int> in = pao_in_degrees(g, p);
  std::vector<int> no_out = pao_no_out_degrees(g, p);
  TightnessReport r;
  for (std::size_t i = 0; i < in.size(); ++i) {
    int unoriented = no_out[i] - in[i];
    r.witness.push_back(Rational(in[i]) + ratio(unoriented, 2) + 1);
  }
  IdealFamily tight(n);
  r.witness_feasible = true;
  r.interior_point_strict = true;
  auto full = g.vertices().mask();
  for (VertexSet::Mask m = 0; m <= full; ++m) {
    VertexSet s(m);
    Rational bound = s.size() + g.edges_within(s);
    Rational lhs = 0;
    Rational interior = 0;
    s.for_each([&](int v) {
      lhs += r.witness[static_cast<std::size_t>(v - 1)];
      interior += ratio(g.degree(v), 2) + 1;
    });
    if (lhs == bound) {
      tight.insert(s);
      r.tight_sets.push_back(s);
    }
    if (lhs < bound) r.witness_feasible = false;
    bool proper = m != 0 && m != full;
    if (proper && !(interior > bound)) r.interior_point_strict = false;
  }
  // Every point of the zonotope satisfies the full-set constraint with equality.
  if (!tight.contains(g.vertices())) r.witness_feasible = false;
  std::sort(r.tight_sets.begin(), r.tight_sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  r.matches_ideal_family = tight == order_ideal_family(g, p);
  return r;
}

VertexCoordinatesReport vertex_coordinates_check(const SimpleGraph& g) {
  CellComplex z = build_Z(g);
  std::vector<Orientation> aos = enumerate_acyclic_orientations(g);
  VertexCoordinatesReport r;
  r.acyclic_orientations = aos.size();
  r.witnesses_integral_indegree = true;
  r.sums_constant = true;
  std::vector<Orientation> seen;
  int expected_sum = g.vertex_count() + static_cast<int>(g.edge_count());
  for (const Cell& cell : z.cells()) {
    if (cell.dim != 0) continue;
    ++r.zero_cells;
    Orientation o = edge_orientation(g, cell.pao);
    seen.push_back(o);
    TightnessReport t = zonotope_tightness(g, cell.pao);
    std::vector<int> in = in_degrees(g, o);
    std::vector<int> point;
    int sum = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Rational& y = t.witness[i];
      if (y.get_den() != 1 || y != in[i] + 1) r.witnesses_integral_indegree = false;
      point.push_back(in[i] + 1);
      sum += in[i] + 1;
    }
    if (sum != expected_sum) r.sums_constant = false;
    r.vertices.push_back(std::move(point));
  }
  std::sort(seen.begin(), seen.end());
  r.bijection = seen == aos;
  std::sort(r.vertices.begin(), r.vertices.end());
  return r;
}

DualLabelReport dual_label_identity(const SimpleGraph& g) {
  CellComplex y = build_Y(g);
  CellComplex x = build_X(g);
  std::vector<int> top = shifted_degrees(g, 2);
  DualLabelReport r;
  std::vector<std::size_t> y_pairs;
  std::vector<std::size_t> x_pairs;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y.cells()[i].type != CellType::Pair) continue;
    std::size_t j = x.find(y.cells()[i].id);
    if (j == x.size()) {
      r.violations.push_back({y.cells()[i].id, "pair cell missing from X"});
      continue;
    }
    y_pairs.push_back(i);
    x_pairs.push_back(j);
    const Cell& cy = y.cells()[i];
    const Cell& cx = x.cells()[j];
    ++r.pairs_checked;
    for (int v = 1; v <= g.vertex_count(); ++v) {
      auto t = static_cast<std::size_t>(v - 1);
      bool ok = cy.sigma.contains(v) ? top[t] - cy.label[t] == cx.label[t]
                                     : cy.label[t] == top[t] && cx.label[t] == 0;
      if (!ok) {
        r.violations.push_back({cy.id, "coordinate " + std::to_string(v) + ": deg+2-l_y=" +
                                           std::to_string(top[t] - cy.label[t]) + ", l_x=" + std::to_string(cx.label[t])});
      }
    }
  }
  r.order_reversed = true;
  for (std::size_t a = 0; a < y_pairs.size(); ++a) {
    for (std::size_t b = 0; b < y_pairs.size(); ++b) {
      if (a == b) continue;
      ++r.order_pairs_checked;
      if (y.precedes(y_pairs[a], y_pairs[b]) != x.precedes(x_pairs[b], x_pairs[a])) r.order_reversed = false;
    }
  }
  return r;
}

}  // namespace aoforge
