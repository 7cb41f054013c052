#include "core/markov.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <span>

namespace aoforge {

std::string to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::CS: return "CS";
    case ChainKind::ELR: return "ELR";
    case ChainKind::SL: return "SL";
    case ChainKind::CR: return "CR";
    case ChainKind::IR: return "IR";
  }
  return "?";
}

ChainKind parse_chain_kind(const std::string& text) {
  for (ChainKind k : {ChainKind::CS, ChainKind::ELR, ChainKind::SL, ChainKind::CR, ChainKind::IR}) {
    if (text == to_string(k)) return k;
  }
  throw InvalidArgument("unknown chain kind '" + text + "' (expected CS, ELR, SL, CR or IR)");
}

void check_labelling(const Labelling& f, int size) {
  if (static_cast<int>(f.values.size()) != size) {
    throw InvalidArgument("labelling has " + std::to_string(f.values.size()) + " entries, expected " + std::to_string(size));
  }
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  for (int x : f.values) {
    if (x < 1 || x > size || seen[static_cast<std::size_t>(x)]) throw InvalidArgument("labelling is not a bijection onto 1.." + std::to_string(size));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

std::string encode(const Labelling& f) {
  std::string out = "f=";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(f.values[i]);
  }
  return out;
}

ChainRng::ChainRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::size_t ChainRng::index(std::size_t bound) {
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::size_t>((static_cast<Wide>(next()) * bound) >> 64);
}

Labelling card_shuffle_move(const Labelling& f, int v) {
  int n = static_cast<int>(f.values.size());
  int old = f.values[static_cast<std::size_t>(v - 1)];
  Labelling out = f;
  for (int& x : out.values) {
    if (x > old) --x;
  }
  out.values[static_cast<std::size_t>(v - 1)] = n;
  return out;
}

Orientation card_shuffle_move(const SimpleGraph& g, const Orientation& o, int v) {
  Orientation out = o;
  g.neighbors(v).for_each([&](int w) { out.orient(g, w, v); });
  return out;
}

Labelling edge_label_swap(const SimpleGraph& g, const Labelling& f, std::size_t edge) {
  if (edge >= g.edge_count()) throw InvalidArgument("edge index out of range");
  Labelling out = f;
  std::swap(out.values[static_cast<std::size_t>(g.edge(edge).u - 1)], out.values[static_cast<std::size_t>(g.edge(edge).v - 1)]);
  return out;
}

Labelling slide_move(const SimpleGraph& rooted, const Labelling& f, int target) {
  int top = rooted.vertex_count();
  auto holder = static_cast<std::size_t>(std::find(f.values.begin(), f.values.end(), top) - f.values.begin());
  if (!rooted.adjacent(static_cast<int>(holder) + 1, target)) throw InvalidArgument("slide target is not adjacent to the holder of n+1");
  Labelling out = f;
  std::swap(out.values[holder], out.values[static_cast<std::size_t>(target - 1)]);
  return out;
}

std::vector<std::size_t> cover_edges(const SimpleGraph& g, const Orientation& o) {
  std::vector<VertexSet> above = strict_upper_sets(g, o);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = o.arc(g, e);
    bool cover = true;
    (above[static_cast<std::size_t>(u - 1)] - VertexSet::single(v)).for_each([&](int w) {
      if (above[static_cast<std::size_t>(w - 1)].contains(v)) cover = false;
    });
    if (cover) out.push_back(e);
  }
  return out;
}

Orientation reverse_edge(const Orientation& o, std::size_t edge) {
  Orientation out = o;
  EdgeState s = o.state(edge);
  out.set(edge, s == EdgeState::Forward ? EdgeState::Backward : EdgeState::Forward);
  return out;
}

Orientation interval_reversal(const SimpleGraph& g, const Orientation& o, std::size_t edge) {
  if (edge >= g.edge_count()) throw InvalidArgument("interval_reversal: edge index " + std::to_string(edge) + " out of range");
  check_orientation(g, o);
  if (!o.is_complete()) throw InvalidArgument("interval_reversal needs every edge oriented");
  std::vector<VertexSet> above = strict_upper_sets(g, o);
  auto [u, v] = o.arc(g, edge);
  VertexSet interval = VertexSet::single(v);
  for (int x = 1; x <= g.vertex_count(); ++x) {
    if (above[static_cast<std::size_t>(x - 1)].contains(v)) interval.insert(x);
  }
  interval = interval & (above[static_cast<std::size_t>(u - 1)] | VertexSet::single(u));
  Orientation out = o;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (interval.contains(g.edge(e).u) && interval.contains(g.edge(e).v)) out = reverse_edge(out, e);
  }
  return out;
}

IntervalReversalReport interval_reversal_check(const SimpleGraph& g) {
  IntervalReversalReport r;
  for (const Orientation& o : enumerate_acyclic_orientations(g)) {
    std::set<Orientation> results;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      Orientation flipped = interval_reversal(g, o, e);
      ++r.pairs_checked;
      if (!is_acyclic(g, flipped)) {
        ++r.not_acyclic;
        continue;
      }
      if (interval_reversal(g, flipped, e) != o) ++r.not_involution;
      if (!results.insert(flipped).second) ++r.edge_collisions;
    }
  }
  return r;
}

namespace {

void require_edges(const SimpleGraph& g, ChainKind kind) {
  if (g.edge_count() == 0) throw InvalidArgument(to_string(kind) + " chain is undefined on a graph without edges");
}

void require_connected(const SimpleGraph& g, ChainKind kind) {
  if (!g.is_connected()) throw InvalidArgument(to_string(kind) + " chain requires a connected graph");
}

void check_kind_graph(const SimpleGraph& g, ChainKind kind) {
  switch (kind) {
    case ChainKind::CS: break;
    case ChainKind::ELR:
      require_connected(g, kind);
      require_edges(g, kind);
      break;
    case ChainKind::SL: require_connected(g, kind); break;
    case ChainKind::CR:
    case ChainKind::IR: require_edges(g, kind); break;
  }
}

int holder_of(const Labelling& f, int value) {
  return static_cast<int>(std::find(f.values.begin(), f.values.end(), value) - f.values.begin()) + 1;
}

// Unchecked single steps used by both step() and simulate().
Labelling raw_labelling_step(ChainKind kind, const SimpleGraph& g, const SimpleGraph& rooted,
                             const std::vector<std::vector<int>>& rooted_neighbors, const Labelling& f, ChainRng& rng) {
  switch (kind) {
    case ChainKind::CS: return card_shuffle_move(f, static_cast<int>(rng.index(f.values.size())) + 1);
    case ChainKind::ELR: return edge_label_swap(g, f, rng.index(g.edge_count()));
    case ChainKind::SL: {
      int holder = holder_of(f, rooted.vertex_count());
      const std::vector<int>& nbrs = rooted_neighbors[static_cast<std::size_t>(holder - 1)];
      Labelling out = f;
      std::swap(out.values[static_cast<std::size_t>(holder - 1)],
                out.values[static_cast<std::size_t>(nbrs[rng.index(nbrs.size())] - 1)]);
      return out;
    }
    default: throw InvalidArgument(to_string(kind) + " does not act on labellings");
  }
}

Orientation raw_orientation_step(ChainKind kind, const SimpleGraph& g, const Orientation& o, ChainRng& rng) {
  switch (kind) {
    case ChainKind::CS: return card_shuffle_move(g, o, static_cast<int>(rng.index(static_cast<std::size_t>(g.vertex_count()))) + 1);
    case ChainKind::CR: {
      std::vector<std::size_t> covers = cover_edges(g, o);
      return reverse_edge(o, covers[rng.index(covers.size())]);
    }
    case ChainKind::IR: return interval_reversal(g, o, rng.index(g.edge_count()));
    default: throw InvalidArgument(to_string(kind) + " does not act on orientations");
  }
}

std::vector<std::vector<int>> neighbor_lists(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= g.vertex_count(); ++v) out.push_back(g.neighbors(v).elements());
  return out;
}

}  // namespace

ChainState step(ChainKind kind, const SimpleGraph& g, const ChainState& state, ChainRng& rng) {
  check_kind_graph(g, kind);
  if (const auto* o = std::get_if<Orientation>(&state)) {
    if (kind == ChainKind::ELR || kind == ChainKind::SL) throw InvalidArgument(to_string(kind) + " states are labellings");
    check_orientation(g, *o);
    if (!o->is_complete() || !is_acyclic(g, *o)) throw InvalidArgument("chain state is not an acyclic orientation");
    return raw_orientation_step(kind, g, *o, rng);
  }
  const Labelling& f = std::get<Labelling>(state);
  if (kind == ChainKind::CR || kind == ChainKind::IR) throw InvalidArgument(to_string(kind) + " states are orientations");
  SimpleGraph rooted = rooted_extension(g);
  check_labelling(f, kind == ChainKind::SL ? rooted.vertex_count() : g.vertex_count());
  return raw_labelling_step(kind, g, rooted, neighbor_lists(rooted), f, rng);
}

bool FlipGraph::connected() const {
  if (states.empty()) return true;
  std::vector<bool> seen(states.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == states.size();
}

bool FlipGraph::bipartite() const {
  std::vector<int> colour(states.size(), -1);
  for (std::size_t start = 0; start < states.size(); ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : adjacency[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::size_t> FlipGraph::regular_degree() const {
  if (adjacency.empty()) return 0;
  std::size_t d = adjacency.front().size();
  for (const auto& row : adjacency) {
    if (row.size() != d) return std::nullopt;
  }
  return d;
}

bool FlipGraph::contains_edges_of(const FlipGraph& other) const {
  std::set<std::pair<Orientation, Orientation>> mine;
  for (auto [a, b] : edges) mine.emplace(std::min(states[a], states[b]), std::max(states[a], states[b]));
  for (auto [a, b] : other.edges) {
    const Orientation& x = other.states[a];
    const Orientation& y = other.states[b];
    if (!mine.count({std::min(x, y), std::max(x, y)})) return false;
  }
  return true;
}

FlipGraph build_flip_graph(const SimpleGraph& g, ChainKind kind) {
  if (kind != ChainKind::CR && kind != ChainKind::IR) throw InvalidArgument("flip graphs exist for CR and IR only");
  require_edges(g, kind);
  FlipGraph out;
  out.states = enumerate_acyclic_orientations(g);
  std::map<Orientation, std::size_t> index;
  for (std::size_t i = 0; i < out.states.size(); ++i) index.emplace(out.states[i], i);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    const Orientation& o = out.states[i];
    std::vector<Orientation> moves;
    if (kind == ChainKind::CR) {
      for (std::size_t e : cover_edges(g, o)) moves.push_back(reverse_edge(o, e));
    } else {
      for (std::size_t e = 0; e < g.edge_count(); ++e) moves.push_back(interval_reversal(g, o, e));
    }
    for (const Orientation& m : moves) {
      auto it = index.find(m);
      if (it == index.end()) throw InternalError(to_string(kind) + " move left the set of acyclic orientations");
      if (it->second != i) edges.emplace(std::min(i, it->second), std::max(i, it->second));
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  out.adjacency.assign(out.states.size(), {});
  for (auto [a, b] : out.edges) {
    out.adjacency[a].push_back(b);
    out.adjacency[b].push_back(a);
  }
  for (auto& row : out.adjacency) std::sort(row.begin(), row.end());
  return out;
}

Rational TransitionMatrix::at(std::size_t i, std::size_t j) const {
  for (const auto& [col, p] : rows[i]) {
    if (col == j) return p;
  }
  return 0;
}

bool TransitionMatrix::row_stochastic() const {
  for (const auto& row : rows) {
    Rational total = 0;
    for (const auto& entry : row) {
      if (entry.second < 0) return false;
      total += entry.second;
    }
    if (total != 1) return false;
  }
  return true;
}

bool TransitionMatrix::irreducible() const {
  std::size_t n = rows.size();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& entry : rows[i]) {
      if (entry.second > 0) reverse[entry.first].push_back(i);
    }
  }
  auto reach_all = [n](auto&& next) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      next(x, [&](std::size_t y) {
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          queue.push_back(y);
        }
      });
    }
    return count == n;
  };
  bool forward = reach_all([&](std::size_t x, auto&& visit) {
    for (const auto& entry : rows[x]) {
      if (entry.second > 0) visit(entry.first);
    }
  });
  bool backward = reach_all([&](std::size_t x, auto&& visit) {
    for (std::size_t y : reverse[x]) visit(y);
  });
  return forward && backward;
}

std::vector<Rational> TransitionMatrix::left_multiply(const std::vector<Rational>& pi) const {
  std::vector<Rational> out(rows.size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pi[i] == 0) continue;
    for (const auto& [j, p] : rows[i]) out[j] += pi[i] * p;
  }
  return out;
}

namespace {

template <class State>
class MatrixBuilder {
public:
  explicit MatrixBuilder(const std::vector<State>& states) {
    for (std::size_t i = 0; i < states.size(); ++i) index_.emplace(states[i], i);
    rows_.resize(states.size());
  }

  void add(std::size_t from, const State& to, const Rational& p) {
    auto it = index_.find(to);
    if (it == index_.end()) throw InternalError("transition leaves the state space");
    rows_[from][it->second] += p;
  }

  std::vector<std::vector<std::pair<std::size_t, Rational>>> take() {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> out;
    for (auto& row : rows_) out.emplace_back(row.begin(), row.end());
    return out;
  }

private:
  std::map<State, std::size_t> index_;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

std::vector<Labelling> all_labellings(int size) {
  std::vector<int> values(static_cast<std::size_t>(size));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Labelling> out;
  do {
    out.push_back(Labelling{values});
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

void require_state_count(const Integer& count, ChainKind kind) {
  if (count > static_cast<unsigned long>(kMaxChainStates)) {
    throw ResourceLimit(to_string(kind) + " state space has " + count.get_str() + " states; the exact matrix is limited to " +
                        std::to_string(kMaxChainStates));
  }
}

}  // namespace

TransitionMatrix exact_transition_matrix(const SimpleGraph& g, ChainKind kind) {
  check_kind_graph(g, kind);
  TransitionMatrix out;
  int n = g.vertex_count();
  if (kind == ChainKind::ELR || kind == ChainKind::SL) {
    SimpleGraph rooted = rooted_extension(g);
    int size = kind == ChainKind::SL ? n + 1 : n;
    require_state_count(factorial(static_cast<unsigned>(size)), kind);
    std::vector<Labelling> states = all_labellings(size);
    MatrixBuilder<Labelling> builder(states);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (kind == ChainKind::ELR) {
        Rational p(1, static_cast<unsigned long>(g.edge_count()));
        for (std::size_t e = 0; e < g.edge_count(); ++e) builder.add(i, edge_label_swap(g, states[i], e), p);
      } else {
        int holder = holder_of(states[i], size);
        VertexSet nbrs = rooted.neighbors(holder);
        Rational p(1, static_cast<unsigned long>(nbrs.size()));
        nbrs.for_each([&](int w) { builder.add(i, slide_move(rooted, states[i], w), p); });
      }
      out.states.push_back(encode(states[i]));
    }
    out.rows = builder.take();
    return out;
  }
  require_state_count(count_acyclic_orientations(g), kind);
  std::vector<Orientation> states = enumerate_acyclic_orientations(g);
  MatrixBuilder<Orientation> builder(states);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Orientation& o = states[i];
    if (kind == ChainKind::CS) {
      for (int v = 1; v <= n; ++v) builder.add(i, card_shuffle_move(g, o, v), Rational(1, static_cast<unsigned long>(n)));
    } else if (kind == ChainKind::CR) {
      std::vector<std::size_t> covers = cover_edges(g, o);
      for (std::size_t e : covers) builder.add(i, reverse_edge(o, e), Rational(1, static_cast<unsigned long>(covers.size())));
    } else {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        builder.add(i, interval_reversal(g, o, e), Rational(1, static_cast<unsigned long>(g.edge_count())));
      }
    }
    out.states.push_back(encode(g, o));
  }
  out.rows = builder.take();
  return out;
}

std::vector<Rational> solve_stationary(const TransitionMatrix& p) {
  std::size_t n = p.size();
  if (n == 0) return {};
  // Rows of (P^T - I), with the last equation replaced by sum(pi) = 1.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, prob] : p.rows[i]) a[j][i] += prob;
    a[i][i] -= 1;
  }
  for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1;
  a[n - 1][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalError("stationary system is singular: the chain is not irreducible");
    std::swap(a[pivot], a[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k <= n; ++k) a[col][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  std::vector<Rational> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n];
  return pi;
}

StationaryReport stationary_verify(const SimpleGraph& g, ChainKind kind) {
  StationaryReport r;
  r.kind = kind;
  int n = g.vertex_count();
  TransitionMatrix p = exact_transition_matrix(g, kind);
  r.chain_states = p.size();
  r.irreducible = p.irreducible();
  std::vector<Orientation> aos = enumerate_acyclic_orientations(g);
  std::map<Orientation, std::size_t> ao_index;
  for (std::size_t i = 0; i < aos.size(); ++i) {
    ao_index.emplace(aos[i], i);
    r.states.push_back(encode(g, aos[i]));
  }
  Rational n_factorial(factorial(static_cast<unsigned>(n)));
  auto linear_extension_law = [&]() {
    std::vector<Rational> law;
    for (const Orientation& o : aos) law.emplace_back(Rational(linear_extension_count(g, o)) / n_factorial);
    return law;
  };

  if (kind == ChainKind::CS || kind == ChainKind::CR || kind == ChainKind::IR) {
    r.computed = solve_stationary(p);
    r.stationary_equation_holds = p.left_multiply(r.computed) == r.computed;
    if (kind == ChainKind::CS) {
      r.expected = linear_extension_law();
    } else if (kind == ChainKind::CR) {
      long total = 0;
      std::vector<long> covers;
      for (const Orientation& o : aos) {
        covers.push_back(static_cast<long>(cover_edges(g, o).size()));
        total += covers.back();
      }
      r.normalization = Rational(1, total);
      for (long c : covers) r.expected.emplace_back(Rational(c) * r.normalization);
    } else {
      r.expected.assign(aos.size(), Rational(1, static_cast<unsigned long>(aos.size())));
    }
  } else {
    SimpleGraph rooted = rooted_extension(g);
    int size = kind == ChainKind::SL ? n + 1 : n;
    std::vector<Labelling> states = all_labellings(size);
    std::vector<Rational> pi;
    if (kind == ChainKind::ELR) {
      pi.assign(states.size(), Rational(1) / n_factorial);
    } else {
      long total = 0;
      for (const Labelling& f : states) total += rooted.degree(holder_of(f, size));
      for (const Labelling& f : states) pi.push_back(ratio(rooted.degree(holder_of(f, size)), total));
    }
    r.stationary_equation_holds = p.left_multiply(pi) == pi;
    r.computed.assign(aos.size(), Rational(0));
    Rational mass = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const Labelling& f = states[i];
      if (kind == ChainKind::SL && f.values.back() != size) continue;  // outside S_r
      std::span<const int> on_g(f.values.data(), static_cast<std::size_t>(n));
      r.computed[ao_index.at(Orientation::from_labelling(g, on_g))] += pi[i];
      mass += pi[i];
    }
    for (Rational& x : r.computed) x /= mass;
    r.expected = linear_extension_law();
    if (kind == ChainKind::ELR) {
      FlipGraph h;
      bool regular = true;
      h.states.resize(states.size());
      h.adjacency.resize(states.size());
      for (std::size_t i = 0; i < states.size(); ++i) {
        regular = regular && p.rows[i].size() == g.edge_count();
        for (const auto& entry : p.rows[i]) h.adjacency[i].push_back(entry.first);
      }
      r.labelling_graph_regular = regular;
      r.labelling_graph_bipartite = h.bipartite();
    }
  }
  Rational sum = std::accumulate(r.computed.begin(), r.computed.end(), Rational(0));
  r.matches = r.irreducible && r.stationary_equation_holds && sum == 1 && r.computed == r.expected;
  return r;
}

SimulationResult simulate(const SimpleGraph& g, ChainKind kind, std::uint64_t seed, std::uint64_t steps,
                          std::uint64_t burn_in) {
  if (steps == 0) throw InvalidArgument("simulate: steps must be positive");
  check_kind_graph(g, kind);
  SimulationResult out;
  out.kind = kind;
  out.seed = seed;
  out.steps = steps;
  out.burn_in = burn_in;
  ChainRng rng(seed, static_cast<std::uint64_t>(kind));
  int n = g.vertex_count();
  SimpleGraph rooted = rooted_extension(g);
  std::map<Orientation, std::uint64_t> counts;
  std::map<Orientation, std::uint64_t> conditional;
  const SimpleGraph& observed = kind == ChainKind::SL ? rooted : g;

  if (kind == ChainKind::CR || kind == ChainKind::IR) {
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    Orientation o = Orientation::from_labelling(g, identity);
    for (std::uint64_t t = 0; t < burn_in; ++t) o = raw_orientation_step(kind, g, o, rng);
    for (std::uint64_t t = 0; t < steps; ++t) {
      o = raw_orientation_step(kind, g, o, rng);
      ++counts[o];
    }
  } else {
    int size = kind == ChainKind::SL ? n + 1 : n;
    std::vector<std::vector<int>> rooted_neighbors = neighbor_lists(rooted);
    Labelling f;
    f.values.resize(static_cast<std::size_t>(size));
    std::iota(f.values.begin(), f.values.end(), 1);
    for (std::uint64_t t = 0; t < burn_in; ++t) f = raw_labelling_step(kind, g, rooted, rooted_neighbors, f, rng);
    for (std::uint64_t t = 0; t < steps; ++t) {
      f = raw_labelling_step(kind, g, rooted, rooted_neighbors, f, rng);
      ++counts[Orientation::from_labelling(observed, f.values)];
      if (kind == ChainKind::SL && f.values.back() == size) {
        ++out.s_r_visits;
        std::span<const int> on_g(f.values.data(), static_cast<std::size_t>(n));
        ++conditional[Orientation::from_labelling(g, on_g)];
      }
    }
  }
  for (const auto& [o, c] : counts) {
    out.states.push_back(encode(observed, o, kind == ChainKind::SL));
    out.counts.push_back(c);
    out.frequencies.push_back(static_cast<double>(c) / static_cast<double>(steps));
  }
  for (const auto& [o, c] : conditional) {
    out.conditional_states.push_back(encode(g, o));
    out.conditional_counts.push_back(c);
    out.conditional_frequencies.push_back(static_cast<double>(c) / static_cast<double>(out.s_r_visits));
  }
  return out;
}

}  // namespace aoforge
