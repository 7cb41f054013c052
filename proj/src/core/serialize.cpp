#include "core/serialize.hpp"

#include "core/errors.hpp"

#include <sstream>

namespace aoforge {

namespace {

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer, got " + j.dump());
  return j.get<int>();
}

int tree_vertex(const Json& j, int n) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "r") return n + 1;
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("tree vertex '" + s + "' is neither an integer nor r");
  }
  return as_int(j, "tree vertex");
}

}  // namespace

SimpleGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph JSON must be an object with \"n\" and \"edges\"");
  }
  int n = as_int(j.at("n"), "n");
  const Json& edges = j.at("edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge " + e.dump() + " must be a pair [i,j]");
    pairs.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  return SimpleGraph(n, pairs);
}

SimpleGraph parse_graph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Json to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

RootedSpanningTree tree_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("parent") || !j.at("parent").is_object()) {
    throw ParseError("tree JSON must be an object with a \"parent\" map");
  }
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  for (const auto& [key, value] : j.at("parent").items()) {
    int v = tree_vertex(Json(key), n);
    if (v < 1 || v > n) throw InvalidArgument("tree vertex " + key + " is outside 1.." + std::to_string(n));
    if (parent[static_cast<std::size_t>(v - 1)] != 0) throw InvalidArgument("vertex " + key + " has two parents");
    parent[static_cast<std::size_t>(v - 1)] = tree_vertex(value, n);
  }
  for (int v = 1; v <= n; ++v) {
    if (parent[static_cast<std::size_t>(v - 1)] == 0) throw InvalidArgument("vertex " + std::to_string(v) + " has no parent");
  }
  return RootedSpanningTree(n, parent);
}

Json to_json(const RootedSpanningTree& t) {
  Json parent = Json::object();
  for (int v = 1; v <= t.vertex_count(); ++v) {
    int p = t.parent(v);
    parent[std::to_string(v)] = p == t.root() ? std::string("r") : std::to_string(p);
  }
  return Json{{"parent", parent}};
}

NCChain chain_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("chain JSON must be a nonempty list of partitions");
  NCChain c;
  int size = -1;
  for (const Json& partition : j) {
    if (!partition.is_array()) throw ParseError("each chain entry must be a list of blocks");
    std::vector<std::vector<int>> blocks;
    int count = 0;
    for (const Json& block : partition) {
      if (!block.is_array()) throw ParseError("each block must be a list of integers");
      std::vector<int> b;
      for (const Json& x : block) b.push_back(as_int(x, "block element"));
      count += static_cast<int>(b.size());
      blocks.push_back(std::move(b));
    }
    if (size >= 0 && count != size) throw InvalidArgument("chain partitions have different ground sets");
    size = count;
    c.partitions.push_back(NCPartition::from_blocks(size, blocks));
  }
  validate_chain(c);
  return c;
}

Json to_json(const NCPartition& p) {
  Json out = Json::array();
  for (const auto& block : p.blocks()) out.push_back(block);
  return out;
}

Json to_json(const NCChain& c) {
  Json out = Json::array();
  for (const NCPartition& p : c.partitions) out.push_back(to_json(p));
  return out;
}

Json to_json(const Monomial& m) { return m.exponents(); }

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  Json text = Json::array();
  for (const Monomial& m : ideal.generators()) {
    gens.push_back(to_json(m));
    text.push_back(m.to_string());
  }
  return Json{{"variables", ideal.variable_count()}, {"generators", gens}, {"monomials", text}};
}

std::vector<int> exponents_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("exponent vector must be an array");
  std::vector<int> out;
  for (const Json& x : j) {
    int e = as_int(x, "exponent");
    if (e < 0) throw InvalidArgument("exponents must be nonnegative");
    out.push_back(e);
  }
  if (static_cast<int>(out.size()) != n) {
    throw InvalidArgument("exponent vector has " + std::to_string(out.size()) + " entries, expected " + std::to_string(n));
  }
  return out;
}

Json to_json(const SimpleGraph& g, const Orientation& o) {
  Json arcs = Json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (o.state(e) == EdgeState::Unoriented) continue;
    auto [a, b] = o.arc(g, e);
    arcs.push_back({a, b});
  }
  return Json{{"encoding", encode(g, o)}, {"arcs", arcs}};
}

Json to_json(const Pao& p) {
  Json blocks = Json::array();
  for (VertexSet b : p.blocks()) blocks.push_back(b.elements());
  Json arcs = Json::array();
  for (auto [a, b] : p.arcs) arcs.push_back({p.blocks()[static_cast<std::size_t>(a)].min(), p.blocks()[static_cast<std::size_t>(b)].min()});
  return Json{{"encoding", encode(p)}, {"blocks", blocks}, {"arcs", arcs}, {"dim", p.dim()}};
}

Json to_json(VertexSet s) { return s.elements(); }

Json to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(s.elements());
  return out;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& q : values) out.push_back(to_string(q));
  return out;
}

VertexSet parse_vertex_list(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (c != '{' && c != '}' && c != ' ') body += c;
  }
  VertexSet out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1 || v > VertexSet::kCapacity) throw InvalidArgument("invalid vertex '" + item + "'");
    out.insert(v);
  }
  return out;
}

}  // namespace aoforge
