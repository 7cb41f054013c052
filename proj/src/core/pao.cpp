#include "core/pao.hpp"

#include "core/errors.hpp"
#include "core/limits.hpp"

#include <algorithm>
#include <functional>

namespace aoforge {

IdealFamily::IdealFamily(int n) : n_(n) {
  if (n < 0 || n > 24) throw ResourceLimit("IdealFamily supports ground sets of size at most 24");
  std::size_t words = ((std::size_t{1} << n) + 63) / 64;
  bits_.assign(words, 0);
}

void IdealFamily::insert(VertexSet s) {
  auto m = s.mask();
  bits_[m / 64] |= std::uint64_t{1} << (m % 64);
}

bool IdealFamily::contains(VertexSet s) const {
  auto m = s.mask();
  if (m >> n_) return false;
  return (bits_[m / 64] >> (m % 64)) & 1U;
}

bool IdealFamily::is_subset_of(const IdealFamily& other) const {
  if (n_ != other.n_) throw InvalidArgument("ideal families over different ground sets");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

std::size_t IdealFamily::size() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<VertexSet> IdealFamily::sets() const {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    for (std::uint64_t w = bits_[i]; w != 0; w &= w - 1) {
      out.emplace_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  return out;
}

bool IdealFamily::closed_under_union_and_intersection() const {
  std::vector<VertexSet> members = sets();
  for (VertexSet a : members) {
    for (VertexSet b : members) {
      if (!contains(a | b) || !contains(a & b)) return false;
    }
  }
  return true;
}

std::pair<int, int> IdealFamily::maximal_chain_lengths() const {
  std::vector<VertexSet> members = sets();
  if (members.empty()) return {0, 0};
  std::size_t k = members.size();
  std::vector<int> shortest(k, -1), longest(k, -1);
  shortest[0] = longest[0] = 0;
  for (std::size_t t = 1; t < k; ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      if (!(members[s].is_subset_of(members[t]) && members[s] != members[t])) continue;
      bool cover = true;
      for (std::size_t u = 0; u < k && cover; ++u) {
        if (u == s || u == t) continue;
        bool between = members[s].is_subset_of(members[u]) && members[u].is_subset_of(members[t]);
        cover = !between;
      }
      if (!cover || shortest[s] < 0) continue;
      shortest[t] = shortest[t] < 0 ? shortest[s] + 1 : std::min(shortest[t], shortest[s] + 1);
      longest[t] = std::max(longest[t], longest[s] + 1);
    }
  }
  return {shortest[k - 1], longest[k - 1]};
}

ConnectedPartition::ConnectedPartition(const SimpleGraph& g, std::vector<VertexSet> blocks)
    : blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
  VertexSet seen;
  for (VertexSet b : blocks_) {
    if (b.empty()) throw InvalidArgument("connected partition has an empty block");
    if (seen.intersects(b)) throw InvalidArgument("connected partition blocks overlap at " + (seen & b).to_string());
    if (!b.is_subset_of(g.vertices())) throw InvalidArgument("block " + b.to_string() + " leaves the vertex set");
    if (!g.is_connected_within(b)) throw InvalidArgument("block " + b.to_string() + " does not induce a connected subgraph");
    seen = seen | b;
  }
}

VertexSet ConnectedPartition::support() const {
  VertexSet s;
  for (VertexSet b : blocks_) s = s | b;
  return s;
}

int ConnectedPartition::block_of(int v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].contains(v)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::uint32_t> Pao::block_predecessors() const {
  std::vector<std::uint32_t> preds(block_count(), 0);
  for (auto [from, to] : arcs) preds[static_cast<std::size_t>(to)] |= std::uint32_t{1} << from;
  return preds;
}

namespace {

// Quotient graph of a partition of G[support]; vertex i+1 stands for block i.
SimpleGraph quotient_graph(const SimpleGraph& g, const std::vector<VertexSet>& blocks) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    VertexSet reach;
    blocks[i].for_each([&](int v) { reach = reach | g.neighbors(v); });
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (reach.intersects(blocks[j])) edges.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
  }
  return SimpleGraph(static_cast<int>(blocks.size()), edges);
}

}  // namespace

std::vector<Pao> enumerate_paos(const SimpleGraph& g) { return enumerate_paos(g, g.vertices()); }

std::vector<Pao> enumerate_paos(const SimpleGraph& g, VertexSet within) {
  require_size("enumerate_paos", g.vertex_count(), 16);
  if (within.empty()) throw InvalidArgument("enumerate_paos: empty vertex set");
  if (!within.is_subset_of(g.vertices())) throw InvalidArgument("enumerate_paos: vertex set leaves 1..n");
  std::vector<int> elems = within.elements();
  std::vector<int> rgs(elems.size(), 0);
  std::vector<Pao> out;

  // Restricted-growth strings: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
  std::function<void(std::size_t, int)> visit = [&](std::size_t i, int max_block) {
    if (i == elems.size()) {
      std::vector<VertexSet> blocks(static_cast<std::size_t>(max_block) + 1);
      for (std::size_t t = 0; t < elems.size(); ++t) blocks[static_cast<std::size_t>(rgs[t])].insert(elems[t]);
      for (VertexSet b : blocks) {
        if (!g.is_connected_within(b)) return;
      }
      SimpleGraph quotient = quotient_graph(g, blocks);
      ConnectedPartition partition(g, blocks);
      for (const Orientation& o : enumerate_acyclic_orientations(quotient)) {
        Pao p{partition, {}};
        for (std::size_t e = 0; e < quotient.edge_count(); ++e) {
          auto [tail, head] = o.arc(quotient, e);
          p.arcs.emplace_back(tail - 1, head - 1);
        }
        std::sort(p.arcs.begin(), p.arcs.end());
        out.push_back(std::move(p));
      }
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[i] = b;
      visit(i + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  visit(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void validate_pao(const SimpleGraph& g, const Pao& p) {
  ConnectedPartition check(g, p.blocks());
  SimpleGraph quotient = quotient_graph(g, p.blocks());
  if (quotient.edge_count() != p.arcs.size()) {
    throw InvalidArgument("PAO orients " + std::to_string(p.arcs.size()) + " quotient edges but the quotient has " +
                          std::to_string(quotient.edge_count()));
  }
  Orientation o = Orientation::trivial(quotient);
  for (auto [from, to] : p.arcs) {
    if (!quotient.adjacent(from + 1, to + 1)) throw InvalidArgument("PAO arc joins non-adjacent blocks");
    o.orient(quotient, from + 1, to + 1);
  }
  if (!o.is_complete()) throw InvalidArgument("PAO leaves a quotient edge unoriented");
  if (!is_acyclic(quotient, o)) throw InvalidArgument("PAO quotient orientation has a directed cycle");
}

IdealFamily order_ideal_family(const SimpleGraph& g, const Pao& p) {
  IdealFamily family(g.vertex_count());
  std::vector<std::uint32_t> preds = p.block_predecessors();
  auto k = static_cast<std::uint32_t>(p.block_count());
  for (std::uint32_t chosen = 0; chosen < (std::uint32_t{1} << k); ++chosen) {
    bool down_closed = true;
    VertexSet members;
    for (std::uint32_t b = 0; b < k && down_closed; ++b) {
      if (!((chosen >> b) & 1U)) continue;
      down_closed = (preds[b] & ~chosen) == 0;
      members = members | p.blocks()[b];
    }
    if (down_closed) family.insert(members);
  }
  return family;
}

namespace {

enum class DegreeKind { In, Out, NoOut };

std::vector<int> pao_degrees(const SimpleGraph& g, const Pao& p, DegreeKind kind) {
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  VertexSet support = p.support();
  std::vector<int> block(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    p.blocks()[b].for_each([&](int v) { block[static_cast<std::size_t>(v)] = static_cast<int>(b); });
  }
  std::vector<std::uint32_t> preds = p.block_predecessors();
  support.for_each([&](int v) {
    int bv = block[static_cast<std::size_t>(v)];
    int count = 0;
    (g.neighbors(v) & support).for_each([&](int w) {
      int bw = block[static_cast<std::size_t>(w)];
      bool incoming = bw != bv && ((preds[static_cast<std::size_t>(bv)] >> bw) & 1U);
      bool outgoing = bw != bv && !incoming;
      bool same = bw == bv;
      switch (kind) {
        case DegreeKind::In: count += incoming; break;
        case DegreeKind::Out: count += outgoing; break;
        case DegreeKind::NoOut: count += incoming || same; break;
      }
    });
    out[static_cast<std::size_t>(v - 1)] = count;
  });
  return out;
}

}  // namespace

std::vector<int> pao_in_degrees(const SimpleGraph& g, const Pao& p) { return pao_degrees(g, p, DegreeKind::In); }
std::vector<int> pao_out_degrees(const SimpleGraph& g, const Pao& p) { return pao_degrees(g, p, DegreeKind::Out); }
std::vector<int> pao_no_out_degrees(const SimpleGraph& g, const Pao& p) {
  return pao_degrees(g, p, DegreeKind::NoOut);
}

Orientation edge_orientation(const SimpleGraph& g, const Pao& p) {
  if (p.support() != g.vertices()) throw InvalidArgument("edge_orientation needs a PAO of the whole graph");
  Orientation o = Orientation::trivial(g);
  std::vector<std::uint32_t> preds = p.block_predecessors();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    int bu = p.partition.block_of(g.edge(e).u);
    int bv = p.partition.block_of(g.edge(e).v);
    if (bu == bv) continue;
    bool v_before_u = (preds[static_cast<std::size_t>(bu)] >> bv) & 1U;
    o.set(e, v_before_u ? EdgeState::Backward : EdgeState::Forward);
  }
  return o;
}

Pao pao_from_orientation(const SimpleGraph& g, const Orientation& o) {
  check_orientation(g, o);
  if (!o.is_complete() || !is_acyclic(g, o)) throw InvalidArgument("pao_from_orientation needs an acyclic orientation");
  std::vector<VertexSet> blocks;
  for (int v = 1; v <= g.vertex_count(); ++v) blocks.push_back(VertexSet::single(v));
  Pao p{ConnectedPartition(g, blocks), {}};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [tail, head] = o.arc(g, e);
    p.arcs.emplace_back(tail - 1, head - 1);
  }
  std::sort(p.arcs.begin(), p.arcs.end());
  return p;
}

std::string encode(const Pao& p) {
  std::string out;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b > 0) out += ',';
    out += p.blocks()[b].to_string();
  }
  out += '|';
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.blocks()[static_cast<std::size_t>(p.arcs[i].first)].min()) + ">" +
           std::to_string(p.blocks()[static_cast<std::size_t>(p.arcs[i].second)].min());
  }
  return out;
}

}  // namespace aoforge
