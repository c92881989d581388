/* C interface to the gic library: opaque graph handles, status codes, and
 * runs that return their report as a malloc'd string (text or JSON).
 *
 * Every function that can fail returns a gic_status; on failure a
 * human-readable message is available from gic_last_error() until the next
 * failing call on the same thread. Output strings are released with
 * gic_string_free().
 */
#ifndef GIC_H
#define GIC_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GIC_API
#if defined(_WIN32)
#define GIC_API __declspec(dllexport)
#else
#define GIC_API __attribute__((visibility("default")))
#endif
#endif

typedef struct gic_graph gic_graph;

typedef enum {
    GIC_OK = 0,
    GIC_ERR_PARSE = 2,   /* malformed input text */
    GIC_ERR_LIMIT = 3,   /* resource cap or time budget exceeded */
    GIC_ERR_INVALID = 4, /* bad arguments: unknown criterion/fixture/format, null handle */
} gic_status;

GIC_API const char* gic_version(void);
GIC_API const char* gic_last_error(void);
GIC_API void gic_string_free(char* s);

/* --- graph construction -------------------------------------------------- */

/* format: "edge-list", "distance-matrix", "adjacency-lists" or "auto". */
GIC_API gic_status gic_graph_from_text(const char* text, const char* format,
                                       gic_graph** out);
GIC_API gic_status gic_graph_from_fixture(const char* name, gic_graph** out);
GIC_API void gic_graph_free(gic_graph* g);

GIC_API int gic_graph_order(const gic_graph* g);
GIC_API long long gic_graph_edge_count(const gic_graph* g);

/* --- fixtures ------------------------------------------------------------ */

GIC_API int gic_fixture_exists(const char* name);
/* One "name<TAB>format<TAB>description" line per bundled graph (text mode). */
GIC_API gic_status gic_fixture_list(int as_json, char** out);

/* --- runs ---------------------------------------------------------------- */

/* Evaluate a criterion ("degree", "adj-degrees", "adj-charpoly",
 * "dist-charpoly") and report its canonical value. */
GIC_API gic_status gic_invariant(const gic_graph* g, const char* criterion,
                                 int as_json, char** out);

/* Criterion partition of the vertex set, optionally subdivided by the
 * induced/remaining neighborhood split, with the search-space factor. */
GIC_API gic_status gic_partition(const gic_graph* g, const char* criterion,
                                 int subdivide, int open_neighborhood,
                                 int as_json, char** out);

/* Backtrack-free verification run; reports the verdict, the witness and the
 * rejection log. */
GIC_API gic_status gic_verify(const gic_graph* g1, const gic_graph* g2,
                              const char* criterion, int as_json, char** out);

typedef struct {
    int open_neighborhood;      /* 0 = closed (default) */
    int no_prealign;            /* 1 = skip partition pre-alignment */
    int anchored_cap;           /* <= 0 -> default (12) */
    double time_budget_seconds; /* <= 0 -> unlimited */
} gic_match_options;

/* Backtracking isomorphism search; opts may be NULL for defaults. */
GIC_API gic_status gic_match(const gic_graph* g1, const gic_graph* g2,
                             const char* criterion, const gic_match_options* opts,
                             int as_json, char** out);

/* Brute-force engine. anchors is NULL or "u:v,u:v,..." pairs that the
 * isomorphism must extend. */
GIC_API gic_status gic_oracle_run(const gic_graph* g1, const gic_graph* g2,
                                  const char* anchors, int as_json, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GIC_H */
