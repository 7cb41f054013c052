#include "aoforge/aoforge.h"

#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/monomial.hpp"
#include "core/reports.hpp"
#include "core/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct aof_graph {
  aoforge::SimpleGraph graph;
};

struct aof_ideal {
  aoforge::MonomialIdeal ideal;
};

namespace {

thread_local std::string last_error;

aof_status fail(aof_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
aof_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return AOF_OK;
  } catch (const aoforge::Error& e) {
    switch (e.kind()) {
      case aoforge::ErrorKind::InvalidArgument: return fail(AOF_ERR_INVALID_ARGUMENT, e.what());
      case aoforge::ErrorKind::ResourceLimit: return fail(AOF_ERR_RESOURCE_LIMIT, e.what());
      case aoforge::ErrorKind::Parse: return fail(AOF_ERR_PARSE, e.what());
      case aoforge::ErrorKind::Internal: return fail(AOF_ERR_INTERNAL, e.what());
    }
    return fail(AOF_ERR_INTERNAL, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(AOF_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AOF_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(AOF_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw aoforge::InvalidArgument(std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
aof_status emit_report(char** json, int* passed, F&& make) {
  return guarded([&] {
    require(json, "json");
    aoforge::Report r = make();
    *json = duplicate(r.to_json().dump());
    if (passed != nullptr) *passed = r.passed() ? 1 : 0;
  });
}

const aoforge::SimpleGraph& graph_of(const aof_graph* g) {
  require(g, "graph");
  return g->graph;
}

std::vector<int> int_vector(const int* values, std::size_t length) {
  if (length > 0) require(values, "exponent array");
  return std::vector<int>(values, values + length);
}

}  // namespace

extern "C" {

const char* aof_version(void) { return AOFORGE_VERSION; }

const char* aof_last_error(void) { return last_error.c_str(); }

void aof_string_free(char* s) { std::free(s); }

aof_status aof_graph_from_json(const char* json, aof_graph** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new aof_graph{aoforge::parse_graph(json)};
  });
}

aof_status aof_graph_from_edges(int n, const int* edges, size_t edge_count, aof_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count > 0) require(edges, "edges");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < edge_count; ++i) pairs.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new aof_graph{aoforge::SimpleGraph(n, pairs)};
  });
}

aof_status aof_graph_from_family(const char* name, aof_graph** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new aof_graph{aoforge::named_graph(name)};
  });
}

void aof_graph_free(aof_graph* g) { delete g; }

aof_status aof_graph_to_json(const aof_graph* g, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = duplicate(aoforge::to_json(graph_of(g)).dump());
  });
}

aof_status aof_graph_vertex_count(const aof_graph* g, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = graph_of(g).vertex_count();
  });
}

aof_status aof_graph_edge_count(const aof_graph* g, size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = graph_of(g).edge_count();
  });
}

aof_status aof_count_acyclic_orientations(const aof_graph* g, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = duplicate(aoforge::to_string(aoforge::count_acyclic_orientations(graph_of(g))));
  });
}

aof_status aof_report_graph(const aof_graph* g, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::graph_report(graph_of(g)); });
}

aof_status aof_report_paos(const aof_graph* g, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::paos_report(graph_of(g)); });
}

aof_status aof_report_complex(const aof_graph* g, const char* kind, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    require(kind, "kind");
    return aoforge::complex_report(graph_of(g), aoforge::parse_complex_kind(kind));
  });
}

aof_status aof_report_ideals(const aof_graph* g, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::ideals_report(graph_of(g)); });
}

aof_status aof_report_duality(const aof_graph* g, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::duality_report(graph_of(g)); });
}

aof_status aof_report_nct_roundtrip(const aof_graph* g, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::nct_roundtrip_report(graph_of(g)); });
}

aof_status aof_report_nct_to_tree(const aof_graph* g, const int* exponents, size_t length, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    const aoforge::SimpleGraph& graph = graph_of(g);
    if (length != static_cast<std::size_t>(graph.vertex_count())) {
      throw aoforge::InvalidArgument("monomial has " + std::to_string(length) + " exponents, expected " +
                                     std::to_string(graph.vertex_count()));
    }
    std::vector<int> a = int_vector(exponents, length);
    for (int x : a) {
      if (x < 0) throw aoforge::InvalidArgument("exponents must be nonnegative");
    }
    return aoforge::nct_to_tree_report(graph, a);
  });
}

aof_status aof_report_nct_to_monomial(const aof_graph* g, const char* tree_json, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    require(tree_json, "tree_json");
    const aoforge::SimpleGraph& graph = graph_of(g);
    aoforge::Json parsed = aoforge::Json::parse(tree_json);
    return aoforge::nct_to_monomial_report(graph, aoforge::tree_from_json(parsed, graph.vertex_count()));
  });
}

aof_status aof_report_nct_orientations(const aof_graph* g, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::nct_orientations_report(graph_of(g)); });
}

aof_status aof_report_nct_chains(int n, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::nct_chains_report(n); });
}

aof_status aof_report_nct_chain_to_tree(const char* chain_json, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    require(chain_json, "chain_json");
    return aoforge::nct_chain_to_tree_report(aoforge::chain_from_json(aoforge::Json::parse(chain_json)));
  });
}

aof_status aof_report_nct_forest(int n, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::nct_forest_report(n); });
}

aof_status aof_report_chain_verify(const aof_graph* g, const char* kind, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    require(kind, "kind");
    return aoforge::chain_verify_report(graph_of(g), aoforge::parse_chain_kind(kind));
  });
}

aof_status aof_report_chain_simulate(const aof_graph* g, const char* kind, uint64_t seed, uint64_t steps,
                                     uint64_t burn_in, double tolerance, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    require(kind, "kind");
    std::optional<double> tol;
    if (tolerance > 0) tol = tolerance;
    return aoforge::chain_simulate_report(graph_of(g), aoforge::parse_chain_kind(kind), seed, steps, burn_in, tol);
  });
}

aof_status aof_report_flip_graph(const aof_graph* g, const char* kind, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    require(kind, "kind");
    return aoforge::flip_graph_report(graph_of(g), aoforge::parse_chain_kind(kind));
  });
}

aof_status aof_report_interval_reversal(const aof_graph* g, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::interval_reversal_report(graph_of(g)); });
}

aof_status aof_report_expected_ao(int n, const char* p, int oracle, int jobs, char** json, int* passed) {
  return emit_report(json, passed, [&] {
    require(p, "p");
    return aoforge::expected_ao_report(n, aoforge::parse_rational(p), oracle != 0, jobs);
  });
}

aof_status aof_report_percolation(const aof_graph* g, int k, int min_size, int all_sets, const char* closure,
                                  char** json, int* passed) {
  return emit_report(json, passed, [&] {
    aoforge::PercolationQuery query;
    query.min_size = min_size != 0;
    query.all_sets = all_sets != 0;
    if (closure != nullptr) query.closure = aoforge::parse_vertex_list(closure);
    return aoforge::percolation_report(graph_of(g), k, query);
  });
}

aof_status aof_report_verify_all(int n_max, int jobs, char** json, int* passed) {
  return emit_report(json, passed, [&] { return aoforge::verify_all(n_max, jobs); });
}

aof_status aof_ideal_A(const aof_graph* g, aof_ideal** out) {
  return guarded([&] {
    require(out, "out");
    *out = new aof_ideal{aoforge::ideal_A(graph_of(g))};
  });
}

aof_status aof_ideal_T(const aof_graph* g, aof_ideal** out) {
  return guarded([&] {
    require(out, "out");
    *out = new aof_ideal{aoforge::ideal_T(graph_of(g))};
  });
}

aof_status aof_ideal_alexander_dual(const aof_ideal* ideal, const int* a, size_t length, aof_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = new aof_ideal{aoforge::alexander_dual(ideal->ideal, int_vector(a, length))};
  });
}

aof_status aof_ideal_variable_count(const aof_ideal* ideal, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = ideal->ideal.variable_count();
  });
}

aof_status aof_ideal_generator_count(const aof_ideal* ideal, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = ideal->ideal.generator_count();
  });
}

aof_status aof_ideal_generator(const aof_ideal* ideal, size_t index, int* exponents, size_t length) {
  return guarded([&] {
    require(ideal, "ideal");
    require(exponents, "exponents");
    if (index >= ideal->ideal.generator_count()) throw aoforge::InvalidArgument("generator index out of range");
    const std::vector<int>& e = ideal->ideal.generators()[index].exponents();
    if (length != e.size()) throw aoforge::InvalidArgument("exponent buffer has the wrong length");
    std::copy(e.begin(), e.end(), exponents);
  });
}

aof_status aof_ideal_contains(const aof_ideal* ideal, const int* exponents, size_t length, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = ideal->ideal.contains(aoforge::Monomial(int_vector(exponents, length))) ? 1 : 0;
  });
}

aof_status aof_ideal_equal(const aof_ideal* a, const aof_ideal* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->ideal == b->ideal ? 1 : 0;
  });
}

void aof_ideal_free(aof_ideal* ideal) { delete ideal; }

}  // extern "C"
