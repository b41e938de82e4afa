#ifndef STC_STC_H
#define STC_STC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define STC_API __attribute__((visibility("default")))
#else
#define STC_API
#endif

typedef enum stc_status {
  STC_OK = 0,
  STC_ERR_INVALID_ARGUMENT = 1,
  STC_ERR_PARSE = 2,
  STC_ERR_INVALID_SHORE = 3,
  STC_ERR_NOT_A_TREE = 4,
  STC_ERR_DISCONNECTED = 5,
  STC_ERR_BUDGET_EXCEEDED = 6,
  STC_ERR_PRECONDITION = 7,
  STC_ERR_REFUSED = 8,
  STC_ERR_INTERNAL = 9
} stc_status;

typedef enum stc_verdict {
  STC_VERDICT_YES = 0,
  STC_VERDICT_PREIMAGE = 1,    /* a cactus node holds more than one vertex */
  STC_VERDICT_NO_ROOT = 2,     /* no vertex of weighted degree K */
  STC_VERDICT_ROOT_NOT_HUB = 3 /* the top cut has no hub at the root */
} stc_verdict;

typedef enum stc_reduction_kind { STC_REDUCTION_DEGREE3 = 3, STC_REDUCTION_DEGREE4 = 4 } stc_reduction_kind;

typedef struct stc_graph stc_graph;
typedef struct stc_tree stc_tree;
typedef struct stc_sat stc_sat;
typedef struct stc_reduction stc_reduction;

/* Message of the last failed call on this thread; never NULL. */
STC_API const char* stc_last_error(void);
/* Frees strings returned through char** out-parameters. */
STC_API void stc_string_free(char* s);

/* Graphs. Vertex ids are 0-based; edge ids are insertion positions. */
STC_API stc_status stc_graph_new(int vertex_count, stc_graph** out);
STC_API void stc_graph_free(stc_graph* g);
STC_API stc_status stc_graph_add_edge(stc_graph* g, int u, int v, int64_t w1, int64_t w2, int* edge_out);
STC_API int stc_graph_vertex_count(const stc_graph* g);
STC_API int stc_graph_edge_count(const stc_graph* g);
STC_API stc_status stc_graph_edge(const stc_graph* g, int e, int* u, int* v, int64_t* w1, int64_t* w2);
STC_API stc_status stc_graph_parse(const char* text, stc_graph** out);
STC_API stc_status stc_graph_serialize(const stc_graph* g, int with_labels, char** out);
/* Light-weight global min cut; 0 when disconnected. */
STC_API stc_status stc_graph_edge_connectivity(const stc_graph* g, int64_t* out);
STC_API stc_status stc_graph_generate(int n, int64_t k, uint64_t seed, stc_graph** out);

/* Spanning trees, always tied to the graph they were built for. */
STC_API stc_status stc_tree_new(const stc_graph* g, const int* edges, size_t count, stc_tree** out);
STC_API void stc_tree_free(stc_tree* t);
STC_API size_t stc_tree_edge_count(const stc_tree* t);
/* Copies up to cap ascending edge ids into edges. */
STC_API size_t stc_tree_edges(const stc_tree* t, int* edges, size_t cap);
STC_API stc_status stc_tree_parse(const char* text, const stc_graph* g, stc_tree** out);
STC_API stc_status stc_tree_serialize(const stc_graph* g, const stc_tree* t, char** out);
STC_API stc_status stc_tree_congestion(const stc_graph* g, const stc_tree* t, int64_t* out);
STC_API stc_status stc_tree_edge_congestion(const stc_graph* g, const stc_tree* t, int e, int64_t* out);

/* Exact search. max_nodes 0 keeps the default budget; jobs >= 1. */
STC_API stc_status stc_exact(const stc_graph* g, uint64_t max_nodes, int jobs, int64_t* value, stc_tree** witness);
/* found is 1 when a tree of congestion <= k exists; witness may be NULL. */
STC_API stc_status stc_exact_decide(const stc_graph* g, int64_t k, uint64_t max_nodes, int jobs, int* found,
                                    stc_tree** witness);

/* Is stc(G) equal to the edge connectivity K? Needs w1 == w2 on every edge.
   witness may be NULL; it is set only on a YES verdict. */
STC_API stc_status stc_decide(const stc_graph* g, stc_verdict* verdict, int64_t* k, stc_tree** witness);
STC_API const char* stc_verdict_name(stc_verdict v);
/* Text description of the min-cut cactus. */
STC_API stc_status stc_cactus(const stc_graph* g, char** out);

/* Gadgets. tree may be NULL. */
STC_API stc_status stc_gadget_flower(int l, int64_t k, stc_graph** out, stc_tree** tree);
STC_API stc_status stc_gadget_bottleneck(int w, stc_graph** out, stc_tree** tree, int* s, int* t);
STC_API stc_status stc_gadget_weight(int a, int b, stc_graph** out, int* s, int* t);
/* Replaces weighted edges by gadgets; paths != 0 splits parallel edges with midpoints. */
STC_API stc_status stc_expand(const stc_graph* g, int64_t k, int paths, stc_graph** out);

/* (M2P1N)-SAT formulas. Parsing validates the structure. */
STC_API stc_status stc_sat_parse(const char* text, stc_sat** out);
STC_API stc_status stc_sat_generate(int n, uint64_t seed, stc_sat** out);
STC_API stc_status stc_sat_serialize(const stc_sat* s, char** out);
STC_API void stc_sat_free(stc_sat* s);

/* Reductions. */
STC_API stc_status stc_reduce(const stc_sat* s, stc_reduction_kind kind, stc_reduction** out);
/* Rebuilds a reduction from its graph and label sidecar. */
STC_API stc_status stc_reduction_load(const stc_graph* g, const char* labels, stc_reduction** out);
STC_API void stc_reduction_free(stc_reduction* r);
STC_API int64_t stc_reduction_k(const stc_reduction* r);
/* The graph is owned by the reduction. */
STC_API const stc_graph* stc_reduction_graph(const stc_reduction* r);
STC_API stc_status stc_reduction_labels(const stc_reduction* r, char** out);
STC_API stc_status stc_reduction_assignment_to_tree(const stc_reduction* r, const char* assignment, stc_tree** out);
STC_API stc_status stc_reduction_tree_to_assignment(const stc_reduction* r, const stc_tree* t, char** out);
/* all_pass is 0 when a check fails or the audit was skipped. */
STC_API stc_status stc_reduction_audit(const stc_reduction* r, const stc_tree* t, int* all_pass, char** report);

#ifdef __cplusplus
}
#endif

#endif
