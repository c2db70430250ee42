/*
 * C interface to the list-coloring laboratory.
 *
 * Graphs and list assignments are opaque handles. Every call that can fail
 * returns an mzk_status; on failure mzk_last_error() describes the problem
 * (per thread, valid until the next failing call). Strings returned through
 * `char**` are owned by the caller and released with mzk_string_free().
 *
 * Analyses also report an outcome through `int* outcome`:
 *   MZK_OUTCOME_POSITIVE  SAT, claims pass, witness confirmed, choosable
 *   MZK_OUTCOME_NEGATIVE  UNSAT, a claim fails, witness refuted, not choosable
 *   MZK_OUTCOME_EXHAUSTED a node budget ran out; no claim is made
 */
#ifndef MZK_H
#define MZK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MZK_BUILDING_LIBRARY)
#    define MZK_API __declspec(dllexport)
#  else
#    define MZK_API __declspec(dllimport)
#  endif
#else
#  define MZK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mzk_graph mzk_graph;
typedef struct mzk_lists mzk_lists;

typedef enum mzk_status {
    MZK_OK = 0,
    MZK_E_ARGUMENT = 1,
    MZK_E_PARSE = 2,
    MZK_E_GRAPH = 3,
    MZK_E_INTERNAL = 4
} mzk_status;

enum {
    MZK_OUTCOME_POSITIVE = 0,
    MZK_OUTCOME_NEGATIVE = 1,
    MZK_OUTCOME_EXHAUSTED = 3
};

typedef enum mzk_format {
    MZK_FORMAT_JSON = 0,
    MZK_FORMAT_DIMACS = 1,
    MZK_FORMAT_DOT = 2
} mzk_format;

MZK_API const char* mzk_version(void);
MZK_API const char* mzk_last_error(void);
MZK_API void mzk_string_free(char* s);

/* Graphs. Builtin names: "wheel", "gadget", "mirzakhani". */
MZK_API mzk_status mzk_graph_build(const char* name, mzk_graph** out);
MZK_API mzk_status mzk_graph_parse(const char* text, mzk_format format, mzk_graph** out);
MZK_API mzk_status mzk_graph_load(const char* path, mzk_graph** out);
MZK_API mzk_status mzk_graph_delete_vertices(const mzk_graph* g, const char* const* ids, size_t count,
                                             mzk_graph** out);
MZK_API mzk_status mzk_graph_write(const mzk_graph* g, mzk_format format, const mzk_lists* labels, char** out);
MZK_API size_t mzk_graph_order(const mzk_graph* g);
MZK_API size_t mzk_graph_size(const mzk_graph* g);
MZK_API void mzk_graph_free(mzk_graph* g);

/* List assignments. Builtin names: "canonical", "wheel". */
MZK_API mzk_status mzk_lists_build(const char* name, mzk_lists** out);
MZK_API mzk_status mzk_lists_uniform(const mzk_graph* g, const int* colors, size_t count, mzk_lists** out);
/* The lists of `lists` on the vertices of g; every vertex of g must be covered. */
MZK_API mzk_status mzk_lists_restrict(const mzk_lists* lists, const mzk_graph* g, mzk_lists** out);
MZK_API mzk_status mzk_lists_parse(const char* json, mzk_lists** out);
MZK_API mzk_status mzk_lists_load(const char* path, mzk_lists** out);
MZK_API mzk_status mzk_lists_write(const mzk_lists* lists, char** out);
MZK_API void mzk_lists_free(mzk_lists* lists);

/* Solving. */
MZK_API mzk_status mzk_solve(const mzk_graph* g, const mzk_lists* lists, uint64_t budget, char** json,
                             int* outcome);
MZK_API mzk_status mzk_count(const mzk_graph* g, const mzk_lists* lists, uint64_t budget, char** json,
                             int* outcome);
MZK_API mzk_status mzk_cnf(const mzk_graph* g, const mzk_lists* lists, char** dimacs);
MZK_API mzk_status mzk_chromatic(const mzk_graph* g, int upper_bound, uint64_t budget, char** json,
                                 int* outcome);
/* coloring_json: { "<vertexid>": color, ... } */
MZK_API mzk_status mzk_verify_coloring(const mzk_graph* g, const mzk_lists* lists, const char* coloring_json,
                                       char** json, int* outcome);

/* Choosability. */
MZK_API mzk_status mzk_verify_not_choosable(const mzk_graph* g, const mzk_lists* lists, int k, uint64_t budget,
                                            char** json, int* outcome);
MZK_API mzk_status mzk_choosability_exhaustive(const mzk_graph* g, int k, const int* pool, size_t pool_size,
                                               uint64_t budget, char** json, int* outcome);
MZK_API mzk_status mzk_random_probe(const mzk_graph* g, int k, uint64_t trials, uint64_t seed, const int* pool,
                                    size_t pool_size, uint64_t budget, const char* label, char** json,
                                    int* outcome);

/* Structural checks: "planarity", "hamilton", "matching", "bipartite". */
MZK_API mzk_status mzk_verify(const mzk_graph* g, const char* check, uint64_t budget, char** json, int* outcome);
/* Positive outcome when deleting `ids` leaves more than `count` components. */
MZK_API mzk_status mzk_cut_certificate(const mzk_graph* g, const char* const* ids, size_t count, char** json,
                                       int* outcome);

/* Proof replay. part: "theorem", "families", "section:<j>", "wheel:<vertexid>=<color>".
 * transcript may be NULL; it is filled for "theorem". */
MZK_API mzk_status mzk_prove(const char* part, uint64_t budget, char** json, char** transcript, int* outcome);

/* Audit of (g, lists); NULL handles select the built graph and canonical lists. */
MZK_API mzk_status mzk_audit(const mzk_graph* g, const mzk_lists* lists, uint64_t solve_budget,
                             uint64_t hamilton_budget, char** json, int* outcome);

#ifdef __cplusplus
}
#endif

#endif /* MZK_H */
