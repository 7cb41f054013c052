#include "core/corpus.hpp"

#include "core/errors.hpp"
#include "core/limits.hpp"

#include <algorithm>
#include <random>

namespace aoforge {

namespace {

void add_unique(std::vector<NamedGraph>& out, std::string name, SimpleGraph g) {
  for (const NamedGraph& x : out) {
    if (x.graph == g) return;
  }
  out.push_back(NamedGraph{std::move(name), std::move(g)});
}

}  // namespace

SimpleGraph random_connected_graph(int n, int extra, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("random graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) {
    int u = static_cast<int>(std::uniform_int_distribution<int>(1, v - 1)(rng));
    edges.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> missing;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (std::find(edges.begin(), edges.end(), std::pair{u, v}) == edges.end()) missing.emplace_back(u, v);
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  for (int i = 0; i < extra && i < static_cast<int>(missing.size()); ++i) edges.push_back(missing[static_cast<std::size_t>(i)]);
  return SimpleGraph(n, edges);
}

std::vector<NamedGraph> connected_corpus(int n_max, std::uint64_t seed) {
  if (n_max < 1) throw InvalidArgument("corpus size bound must be at least 1");
  require_size("connected_corpus", n_max, 8);
  std::vector<NamedGraph> out;
  for (int n = 2; n <= n_max; ++n) add_unique(out, "P" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= n_max; ++n) add_unique(out, "C" + std::to_string(n), cycle_graph(n));
  for (int n = 3; n <= n_max; ++n) add_unique(out, "K" + std::to_string(n), complete_graph(n));
  for (int n = 4; n <= n_max; ++n) add_unique(out, "S" + std::to_string(n), star_graph(n));
  std::mt19937_64 rng(seed);
  for (int n = 4; n <= n_max; ++n) {
    int max_extra = n * (n - 1) / 2 - (n - 1);
    for (int extra = 1; extra < max_extra; ++extra) {
      for (int copy = 0; copy < 4; ++copy) {
        add_unique(out, "R" + std::to_string(n) + "-" + std::to_string(extra) + "-" + std::to_string(copy),
                   random_connected_graph(n, extra, rng()));
      }
    }
  }
  return out;
}

SimpleGraph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i + 1, (i + 1) % 5 + 1);
    edges.emplace_back(i + 1, i + 6);
    edges.emplace_back(i + 6, (i + 2) % 5 + 6);
  }
  return SimpleGraph(10, edges);
}

SimpleGraph named_graph(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  auto number = [&](const std::string& text) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (text.empty() || used != text.size() || v < 1) throw InvalidArgument("unknown graph family '" + name + "'");
    return v;
  };
  if (name.rfind("grid", 0) == 0) {
    std::string dims = name.substr(4);
    std::size_t x = dims.find('x');
    if (x == std::string::npos) throw InvalidArgument("unknown graph family '" + name + "'");
    return grid_graph(number(dims.substr(0, x)), number(dims.substr(x + 1)));
  }
  if (name.size() < 2) throw InvalidArgument("unknown graph family '" + name + "'");
  int n = number(name.substr(1));
  switch (name[0]) {
    case 'P': return path_graph(n);
    case 'C': return cycle_graph(n);
    case 'K': return complete_graph(n);
    case 'S': return star_graph(n);
    case 'E': return edgeless_graph(n);
    default: throw InvalidArgument("unknown graph family '" + name + "'");
  }
}

std::vector<NamedGraph> percolation_corpus() {
  std::vector<NamedGraph> out;
  add_unique(out, "P3", path_graph(3));
  add_unique(out, "K3", complete_graph(3));
  add_unique(out, "C6", cycle_graph(6));
  add_unique(out, "K5", complete_graph(5));
  add_unique(out, "S7", star_graph(7));
  add_unique(out, "P8", path_graph(8));
  add_unique(out, "C10", cycle_graph(10));
  add_unique(out, "grid3x3", grid_graph(3, 3));
  add_unique(out, "grid2x5", grid_graph(2, 5));
  add_unique(out, "petersen", petersen_graph());
  add_unique(out, "E4", edgeless_graph(4));
  add_unique(out, "R8", random_connected_graph(8, 5, kCorpusSeed));
  add_unique(out, "R10", random_connected_graph(10, 8, kCorpusSeed + 1));
  return out;
}

std::vector<SimpleGraph> all_connected_graphs(int n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  require_size("all_connected_graphs", n, 6);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    SimpleGraph g(n, edges);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace aoforge
