#pragma once

// Brute-force reference implementations. None of these call into the library's
// algorithms; they work from raw vertex/edge lists.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;  // 1-based, u < v
using Mask = std::uint64_t;

inline bool in_mask(Mask m, int v) { return (m >> (v - 1)) & 1U; }

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Acyclic orientations as direction vectors (+1 for u->v, -1 for v->u), read off
// from all n! labellings.
inline std::set<std::vector<int>> acyclic_orientations(int n, const Edges& edges) {
  std::set<std::vector<int>> out;
  for (const auto& f : permutations(n)) {
    std::vector<int> dir;
    for (auto [u, v] : edges) dir.push_back(f[static_cast<std::size_t>(u - 1)] < f[static_cast<std::size_t>(v - 1)] ? 1 : -1);
    out.insert(dir);
  }
  return out;
}

inline std::vector<int> in_degrees(int n, const Edges& edges, const std::vector<int>& dir) {
  std::vector<int> in(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) ++in[static_cast<std::size_t>((dir[e] > 0 ? edges[e].second : edges[e].first) - 1)];
  return in;
}

inline std::vector<int> out_degrees(int n, const Edges& edges, const std::vector<int>& dir) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) ++out[static_cast<std::size_t>((dir[e] > 0 ? edges[e].first : edges[e].second) - 1)];
  return out;
}

// Connectivity of the subgraph induced on a nonempty mask, by repeated sweeps.
inline bool connected_subset(const Edges& edges, Mask s) {
  if (s == 0) return false;
  Mask reached = s & (~s + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [u, v] : edges) {
      if (!in_mask(s, u) || !in_mask(s, v)) continue;
      if (in_mask(reached, u) != in_mask(reached, v)) {
        reached |= Mask{1} << (u - 1);
        reached |= Mask{1} << (v - 1);
        grew = true;
      }
    }
  }
  return reached == s;
}

inline int degout(const Edges& edges, Mask s, int v) {
  int d = 0;
  for (auto [a, b] : edges) {
    if (a == v && !in_mask(s, b)) ++d;
    if (b == v && !in_mask(s, a)) ++d;
  }
  return d;
}

inline bool below(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// x^c in A_G: some acyclic orientation has indeg + 1 <= c.
inline bool in_A(int n, const Edges& edges, const std::vector<int>& c) {
  for (const auto& dir : acyclic_orientations(n, edges)) {
    std::vector<int> e = in_degrees(n, edges, dir);
    for (int& x : e) ++x;
    if (below(e, c)) return true;
  }
  return false;
}

// x^c in T_G: some connected s has degout_s + 1_s <= c.
inline bool in_T(int n, const Edges& edges, const std::vector<int>& c) {
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!connected_subset(edges, s)) continue;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
      if (in_mask(s, v)) e[static_cast<std::size_t>(v - 1)] = degout(edges, s, v) + 1;
    }
    if (below(e, c)) return true;
  }
  return false;
}

// Calls f on every vector 0 <= b <= bound.
template <class F>
void box(const std::vector<int>& bound, F&& f) {
  std::vector<int> b(bound.size(), 0);
  while (true) {
    f(b);
    std::size_t i = 0;
    while (i < b.size() && b[i] == bound[i]) b[i++] = 0;
    if (i == b.size()) return;
    ++b[i];
  }
}

// Number of PAOs counted over all 3^|E| assignments of forward/backward/unoriented.
inline std::size_t pao_count(int n, const Edges& edges) {
  std::size_t m = edges.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> state(m);
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      state[i] = static_cast<int>(c % 3);  // 0 unoriented, 1 u->v, 2 v->u
      c /= 3;
    }
    // Blocks: components of the unoriented edges.
    std::vector<int> block(static_cast<std::size_t>(n));
    std::iota(block.begin(), block.end(), 0);
    auto find = [&](int x) {
      while (block[static_cast<std::size_t>(x)] != x) x = block[static_cast<std::size_t>(x)];
      return x;
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (state[i] == 0) block[static_cast<std::size_t>(find(edges[i].first - 1))] = find(edges[i].second - 1);
    }
    bool ok = true;
    std::map<std::pair<int, int>, int> arcs;
    for (std::size_t i = 0; i < m && ok; ++i) {
      int a = find(edges[i].first - 1), b = find(edges[i].second - 1);
      if (state[i] == 0) continue;
      if (a == b) {
        ok = false;
        break;
      }
      std::pair<int, int> arc = state[i] == 1 ? std::pair{a, b} : std::pair{b, a};
      if (arcs.count({arc.second, arc.first})) ok = false;
      arcs[arc] = 1;
    }
    if (!ok) continue;
    // Quotient acyclicity by repeated source removal.
    std::set<int> alive;
    for (int v = 0; v < n; ++v) alive.insert(find(v));
    bool removed = true;
    while (removed && !alive.empty()) {
      removed = false;
      for (int x : alive) {
        bool source = true;
        for (const auto& [arc, unused] : arcs) {
          if (arc.second == x && alive.count(arc.first)) source = false;
        }
        if (source) {
          alive.erase(x);
          removed = true;
          break;
        }
      }
    }
    if (alive.empty()) ++count;
  }
  return count;
}

// det(L_G + I), the number of spanning trees of G_r, by exact elimination.
inline mpz_class rooted_spanning_trees(int n, const Edges& edges) {
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (auto [u, v] : edges) {
    auto a = static_cast<std::size_t>(u - 1), b = static_cast<std::size_t>(v - 1);
    m[a][a] += 1;
    m[b][b] += 1;
    m[a][b] -= 1;
    m[b][a] -= 1;
  }
  mpq_class det = 1;
  auto size = static_cast<std::size_t>(n);
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t p = c;
    while (p < size && m[p][c] == 0) ++p;
    if (p == size) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < size; ++r) {
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < size; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.get_num();
}

// Least fixed point of k-neighbour infection by full rescans.
inline Mask closure(int n, const Edges& edges, int k, Mask a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= n; ++v) {
      if (in_mask(a, v)) continue;
      int infected = 0;
      for (auto [x, y] : edges) {
        if (x == v && in_mask(a, y)) ++infected;
        if (y == v && in_mask(a, x)) ++infected;
      }
      if (infected >= k) {
        a |= Mask{1} << (v - 1);
        changed = true;
      }
    }
  }
  return a;
}

// Every bijection p of 1..n+1 onto 0..n with p(root) = 0 that increases away
// from the root, orders siblings i < j as p(i) > p(j), and has no crossing
// edges (j,i), (m,k) with p(i) < p(k) < p(j) < p(m). parent[v-1] is v's parent.
inline std::vector<std::vector<int>> valid_depictions(int n, const std::vector<int>& parent) {
  std::vector<std::vector<int>> out;
  for (const auto& perm : permutations(n)) {
    std::vector<int> p(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) p[static_cast<std::size_t>(v - 1)] = perm[static_cast<std::size_t>(v - 1)];
    p[static_cast<std::size_t>(n)] = 0;
    auto at = [&](int v) { return p[static_cast<std::size_t>(v - 1)]; };
    auto par = [&](int v) { return parent[static_cast<std::size_t>(v - 1)]; };
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      if (at(par(v)) >= at(v)) ok = false;
    }
    for (int i = 1; i <= n && ok; ++i) {
      for (int j = i + 1; j <= n && ok; ++j) {
        if (par(i) == par(j) && !(at(i) > at(j))) ok = false;
      }
    }
    for (int j = 1; j <= n && ok; ++j) {
      for (int m = 1; m <= n && ok; ++m) {
        int i = par(j), k = par(m);
        if (at(i) < at(k) && at(k) < at(j) && at(j) < at(m)) ok = false;
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

// Labellings 1..n respecting every arc (a, b) as f(a) < f(b).
inline long linear_extensions(int n, const Edges& arcs) {
  long count = 0;
  for (const auto& f : permutations(n)) {
    bool ok = true;
    for (auto [a, b] : arcs) ok = ok && f[static_cast<std::size_t>(a - 1)] < f[static_cast<std::size_t>(b - 1)];
    if (ok) ++count;
  }
  return count;
}

// Labelled graphs on [n] as edge lists, all 2^C(n,2) of them.
inline std::vector<Edges> all_graphs(int n) {
  Edges pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Edges> out;
  for (Mask m = 0; m < (Mask{1} << pairs.size()); ++m) {
    Edges e;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((m >> i) & 1U) e.push_back(pairs[i]);
    }
    out.push_back(e);
  }
  return out;
}

using Dir = std::vector<int>;

// reach[a][b]: a directed path a -> ... -> b of length >= 0 exists.
inline std::vector<std::vector<bool>> reachability(int n, const Edges& edges, const Dir& dir) {
  auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<bool>> r(size, std::vector<bool>(size, false));
  for (std::size_t v = 1; v < size; ++v) r[v][v] = true;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (dir[e] > 0) r[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    else r[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  for (std::size_t k = 1; k < size; ++k) {
    for (std::size_t i = 1; i < size; ++i) {
      for (std::size_t j = 1; j < size; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

inline std::pair<int, int> arc(const Edges& edges, const Dir& dir, std::size_t e) {
  return dir[e] > 0 ? edges[e] : std::pair{edges[e].second, edges[e].first};
}

// Arc u -> v is a cover when removing it leaves no other u ~> v path.
inline std::size_t cover_count(int n, const Edges& edges, const Dir& dir) {
  std::size_t count = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = arc(edges, dir, e);
    Edges rest;
    Dir rest_dir;
    for (std::size_t f = 0; f < edges.size(); ++f) {
      if (f == e) continue;
      rest.push_back(edges[f]);
      rest_dir.push_back(dir[f]);
    }
    if (!reachability(n, rest, rest_dir)[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) ++count;
  }
  return count;
}

inline Dir interval_reversal(int n, const Edges& edges, const Dir& dir, std::size_t e) {
  auto r = reachability(n, edges, dir);
  auto [u, v] = arc(edges, dir, e);
  auto inside = [&](int x) {
    return r[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] && r[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)];
  };
  Dir out = dir;
  for (std::size_t f = 0; f < edges.size(); ++f) {
    if (inside(edges[f].first) && inside(edges[f].second)) out[f] = -out[f];
  }
  return out;
}

inline Dir card_shuffle(const Edges& edges, const Dir& dir, int v) {
  Dir out = dir;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == v) out[e] = -1;
    if (edges[e].second == v) out[e] = 1;
  }
  return out;
}

}  // namespace oracle
