#ifndef BIPMATCH_BIPMATCH_H
#define BIPMATCH_BIPMATCH_H

/*
 * C interface to the bipartite matching library.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_free function. Strings returned through char** are
 * heap allocated and must be released with bm_string_free, int arrays with
 * bm_ints_free.
 *
 * Every call that can fail returns a bm_status. On failure the out
 * parameters are left untouched and bm_last_error() describes the problem
 * (per thread, valid until the next failing call on that thread).
 *
 * Boolean answers are reported as int 0/1.
 */

#include <stdint.h>

#if defined(BIPMATCH_BUILDING)
#define BM_API __attribute__((visibility("default")))
#else
#define BM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bm_status {
  BM_OK = 0,
  BM_ERR_PARSE = 1,             /* malformed text input */
  BM_ERR_INVALID_ARGUMENT = 2,  /* bad ids, wrong classes, null pointers */
  BM_ERR_PRECONDITION = 3,      /* no perfect matching, not a brace, ... */
  BM_ERR_CAPACITY = 4,          /* an exhaustive routine refused the input */
  BM_ERR_ANOMALY = 5,           /* an internal structural check failed */
  BM_ERR_IO = 6,
  BM_ERR_INTERNAL = 7
} bm_status;

typedef struct bm_graph bm_graph;
typedef struct bm_matching bm_matching;
typedef struct bm_digraph bm_digraph;
typedef struct bm_braces bm_braces;

BM_API const char* bm_last_error(void);
BM_API const char* bm_status_name(bm_status status);
BM_API void bm_string_free(char* s);
BM_API void bm_ints_free(int* p);

/* graphs: class 1 is [0, n1), class 2 is [n1, n1 + n2) */

BM_API bm_status bm_graph_parse(const char* text, bm_graph** out);
BM_API bm_status bm_graph_read_file(const char* path, bm_graph** out);
/* edges holds 2*m ids, u v u v ...; either endpoint order is accepted */
BM_API bm_status bm_graph_new(int n1, int n2, const int* edges, int m, bm_graph** out);
BM_API void bm_graph_free(bm_graph* g);
BM_API int bm_graph_n1(const bm_graph* g);
BM_API int bm_graph_n2(const bm_graph* g);
BM_API int bm_graph_edge_count(const bm_graph* g);
/* i-th edge in sorted order, class-1 endpoint first */
BM_API bm_status bm_graph_edge(const bm_graph* g, int i, int* u, int* v);
/* comment may be NULL; each of its lines becomes a "# " line */
BM_API bm_status bm_graph_serialize(const bm_graph* g, const char* comment, char** out);

/* name: c4 k33 cube heawood rotunda t10 moebius (k used by moebius only) */
BM_API bm_status bm_graph_generate(const char* name, int k, bm_graph** out);
BM_API bm_status bm_graph_random_matching_covered(int n, double density, uint32_t seed, bm_graph** out);
/* isomorphic up to swapping the colour classes */
BM_API bm_status bm_graph_isomorphic(const bm_graph* a, const bm_graph* b, int* out);

/* matchings */

BM_API bm_status bm_max_matching(const bm_graph* g, bm_matching** out);
/* BM_ERR_PRECONDITION when the graph has no perfect matching */
BM_API bm_status bm_perfect_matching(const bm_graph* g, bm_matching** out);
BM_API bm_status bm_matching_parse(const bm_graph* g, const char* text, bm_matching** out);
BM_API void bm_matching_free(bm_matching* m);
BM_API int bm_matching_size(const bm_matching* m);
BM_API bm_status bm_matching_edge(const bm_matching* m, int i, int* u, int* v);
BM_API bm_status bm_matching_serialize(const bm_matching* m, char** out);

BM_API bm_status bm_has_perfect_matching(const bm_graph* g, int* out);
BM_API bm_status bm_is_matching_covered(const bm_graph* g, int* out);
BM_API bm_status bm_is_extendible(const bm_graph* g, int k, int* out);

/* M-direction: node i is the i-th matching edge by class-1 endpoint */

BM_API bm_status bm_digraph_parse(const char* text, bm_digraph** out);
BM_API void bm_digraph_free(bm_digraph* d);
BM_API int bm_digraph_node_count(const bm_digraph* d);
BM_API int bm_digraph_arc_count(const bm_digraph* d);
BM_API bm_status bm_digraph_arc(const bm_digraph* d, int i, int* from, int* to);
BM_API bm_status bm_digraph_serialize(const bm_digraph* d, char** out);
BM_API bm_status bm_digraph_is_strongly_connected(const bm_digraph* d, int* out);

BM_API bm_status bm_m_direction(const bm_graph* g, const bm_matching* perfect, bm_digraph** out);
/* both outputs are required */
BM_API bm_status bm_from_digraph(const bm_digraph* d, bm_graph** graph, bm_matching** perfect);
BM_API bm_status bm_reach_internally_conformal(const bm_graph* g, const bm_matching* perfect, int a, int b,
                                               int* out);

/* tight cuts and braces */

BM_API bm_status bm_is_brace(const bm_graph* g, int* out);
/* *found = 0 for a brace; otherwise *shore (free with bm_ints_free) */
BM_API bm_status bm_find_tight_cut(const bm_graph* g, int* found, int** shore, int* size);
BM_API bm_status bm_verify_tight_cut(const bm_graph* g, const int* shore, int size, int* out);

/* seed == NULL: deterministic order; otherwise a random tight-cut order */
BM_API bm_status bm_brace_decomposition(const bm_graph* g, const uint32_t* seed, bm_braces** out);
BM_API void bm_braces_free(bm_braces* b);
BM_API int bm_braces_count(const bm_braces* b);
BM_API bm_status bm_braces_graph(const bm_braces* b, int i, bm_graph** out);
/* "id -> original" lines, contraction records as C:{..} */
BM_API bm_status bm_braces_provenance(const bm_braces* b, int i, char** out);

/* K3,3 matching minors */

BM_API bm_status bm_brace_contains_k33(const bm_graph* g, int* out);
BM_API bm_status bm_contains_k33(const bm_graph* g, int* out);

/* 2-MLP: a1, a2 in class 1, b1, b2 in class 2 */

/* trace may be NULL; otherwise one line per evaluated cover */
BM_API bm_status bm_solve_2mlp(const bm_graph* g, int a1, int a2, int b1, int b2, int* out, char** trace);

/* exhaustive oracles; refuse more than 20 vertices with BM_ERR_CAPACITY */

typedef enum bm_cross_kind { BM_CROSS_PLAIN = 0, BM_CROSS_STRONG = 1, BM_CROSS_CONFORMAL = 2 } bm_cross_kind;

/* witness may be NULL; when linked it receives the matching and both paths */
BM_API bm_status bm_oracle_2mlp(const bm_graph* g, int a1, int a2, int b1, int b2, int* out, char** witness);
BM_API bm_status bm_oracle_cross(const bm_graph* g, const int* cycle, int length, bm_cross_kind kind, int* out);
BM_API bm_status bm_oracle_contains_k33(const bm_graph* g, int* out);
BM_API bm_status bm_oracle_tight_cut(const bm_graph* g, const int* shore, int size, int* out);
BM_API bm_status bm_oracle_perfect_matching_count(const bm_graph* g, int64_t* out);

/* polynomial results against the oracles on one graph; one report line per
   check; *disagreements counts checks that disagree */
BM_API bm_status bm_crosscheck(const bm_graph* g, uint32_t seed, int orders, int max_mlp_vertices, char** report,
                               int* disagreements);

#ifdef __cplusplus
}
#endif

#endif
