#pragma once

#include "core/graph.hpp"
#include "core/monomial.hpp"
#include "core/noncrossing.hpp"
#include "core/orientation.hpp"
#include "core/pao.hpp"
#include "core/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace aoforge {

using Json = nlohmann::ordered_json;

// {"n": 3, "edges": [[1,2],[2,3]]}
SimpleGraph graph_from_json(const Json& j);
SimpleGraph parse_graph(const std::string& text);
Json to_json(const SimpleGraph& g);

// {"parent": {"1": "2", "2": "r"}}
RootedSpanningTree tree_from_json(const Json& j, int n);
Json to_json(const RootedSpanningTree& t);

// [[[0],[1],[2]], [[0,1],[2]], ...]; blocks are lists of elements of 0..n.
NCChain chain_from_json(const Json& j);
Json to_json(const NCChain& c);
Json to_json(const NCPartition& p);

Json to_json(const Monomial& m);
Json to_json(const MonomialIdeal& ideal);
std::vector<int> exponents_from_json(const Json& j, int n);

Json to_json(const SimpleGraph& g, const Orientation& o);
Json to_json(const Pao& p);
Json to_json(VertexSet s);
Json to_json(const std::vector<VertexSet>& sets);
Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& values);

// Parses "1,3" or "{1,3}" into a vertex set.
VertexSet parse_vertex_list(const std::string& text);

}  // namespace aoforge
