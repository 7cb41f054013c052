#ifndef AOFORGE_AOFORGE_H
#define AOFORGE_AOFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(AOFORGE_BUILDING_LIBRARY)
#define AOF_API __attribute__((visibility("default")))
#else
#define AOF_API
#endif

typedef enum aof_status {
  AOF_OK = 0,
  AOF_ERR_INVALID_ARGUMENT = 1,
  AOF_ERR_RESOURCE_LIMIT = 2,
  AOF_ERR_INTERNAL = 3,
  AOF_ERR_PARSE = 4
} aof_status;

typedef struct aof_graph aof_graph;
typedef struct aof_ideal aof_ideal;

/* Library version, e.g. "0.1.0". */
AOF_API const char* aof_version(void);

/* Message for the most recent failing call on this thread; "" after success. */
AOF_API const char* aof_last_error(void);

/* Releases a string returned through a char** out-parameter. */
AOF_API void aof_string_free(char* s);

/* Graphs use vertices 1..n. JSON form: {"n": 3, "edges": [[1,2],[2,3]]}. */
AOF_API aof_status aof_graph_from_json(const char* json, aof_graph** out);
/* edges holds 2*edge_count endpoints. */
AOF_API aof_status aof_graph_from_edges(int n, const int* edges, size_t edge_count, aof_graph** out);
/* Named family: P<n>, C<n>, K<n>, S<n> (star, centre 1), E<n> (edgeless),
   grid<r>x<c> or petersen. */
AOF_API aof_status aof_graph_from_family(const char* name, aof_graph** out);
AOF_API void aof_graph_free(aof_graph* g);
/* Writes the graph JSON to *out. */
AOF_API aof_status aof_graph_to_json(const aof_graph* g, char** out);
AOF_API aof_status aof_graph_vertex_count(const aof_graph* g, int* out);
AOF_API aof_status aof_graph_edge_count(const aof_graph* g, size_t* out);

/* Number of acyclic orientations as a decimal string. */
AOF_API aof_status aof_count_acyclic_orientations(const aof_graph* g, char** out);

/*
 * Report functions write a JSON document {"results": ..., "verdicts": [...]} to
 * *json and, when passed is not NULL, set *passed to 1 if every verdict holds.
 */
AOF_API aof_status aof_report_graph(const aof_graph* g, char** json, int* passed);
AOF_API aof_status aof_report_paos(const aof_graph* g, char** json, int* passed);
/* kind is "Z", "Y" or "X". */
AOF_API aof_status aof_report_complex(const aof_graph* g, const char* kind, char** json, int* passed);
AOF_API aof_status aof_report_ideals(const aof_graph* g, char** json, int* passed);
AOF_API aof_status aof_report_duality(const aof_graph* g, char** json, int* passed);

AOF_API aof_status aof_report_nct_roundtrip(const aof_graph* g, char** json, int* passed);
AOF_API aof_status aof_report_nct_to_tree(const aof_graph* g, const int* exponents, size_t length, char** json,
                                          int* passed);
/* tree_json: {"parent": {"1": "2", "2": "r"}}. */
AOF_API aof_status aof_report_nct_to_monomial(const aof_graph* g, const char* tree_json, char** json, int* passed);
AOF_API aof_status aof_report_nct_orientations(const aof_graph* g, char** json, int* passed);
AOF_API aof_status aof_report_nct_chains(int n, char** json, int* passed);
/* chain_json: list of partitions of {0..n}, each a list of blocks. */
AOF_API aof_status aof_report_nct_chain_to_tree(const char* chain_json, char** json, int* passed);
AOF_API aof_status aof_report_nct_forest(int n, char** json, int* passed);

/* kind is "CS", "ELR", "SL", "CR" or "IR". */
AOF_API aof_status aof_report_chain_verify(const aof_graph* g, const char* kind, char** json, int* passed);
/* A tolerance <= 0 disables the total-variation verdict. */
AOF_API aof_status aof_report_chain_simulate(const aof_graph* g, const char* kind, uint64_t seed, uint64_t steps,
                                             uint64_t burn_in, double tolerance, char** json, int* passed);
/* kind is "CR" or "IR". */
AOF_API aof_status aof_report_flip_graph(const aof_graph* g, const char* kind, char** json, int* passed);
AOF_API aof_status aof_report_interval_reversal(const aof_graph* g, char** json, int* passed);

/* p is a rational such as "1/3" or "0.25". */
AOF_API aof_status aof_report_expected_ao(int n, const char* p, int oracle, int jobs, char** json, int* passed);
/* closure may be NULL or a vertex list such as "1,3". */
AOF_API aof_status aof_report_percolation(const aof_graph* g, int k, int min_size, int all_sets, const char* closure,
                                          char** json, int* passed);
AOF_API aof_status aof_report_verify_all(int n_max, int jobs, char** json, int* passed);

/* Monomial ideals, stored by their minimal generators in lexicographic order. */
AOF_API aof_status aof_ideal_A(const aof_graph* g, aof_ideal** out);
AOF_API aof_status aof_ideal_T(const aof_graph* g, aof_ideal** out);
AOF_API aof_status aof_ideal_alexander_dual(const aof_ideal* ideal, const int* a, size_t length, aof_ideal** out);
AOF_API aof_status aof_ideal_variable_count(const aof_ideal* ideal, int* out);
AOF_API aof_status aof_ideal_generator_count(const aof_ideal* ideal, size_t* out);
/* Copies generator `index` into exponents, which must hold variable_count entries. */
AOF_API aof_status aof_ideal_generator(const aof_ideal* ideal, size_t index, int* exponents, size_t length);
AOF_API aof_status aof_ideal_contains(const aof_ideal* ideal, const int* exponents, size_t length, int* out);
AOF_API aof_status aof_ideal_equal(const aof_ideal* a, const aof_ideal* b, int* out);
AOF_API void aof_ideal_free(aof_ideal* ideal);

#ifdef __cplusplus
}
#endif

#endif
