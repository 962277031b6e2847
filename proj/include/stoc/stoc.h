#ifndef STOC_H
#define STOC_H

/* C interface to the storage-code toolkit.  Structured inputs and outputs
 * travel as JSON strings; handles are opaque and freed by their matching
 * free function.  Every returned char* is heap allocated and released with
 * stoc_string_free.  On failure the out parameters are untouched and
 * stoc_last_error() holds a thread-local message. */

#include <stddef.h>

#if defined(_WIN32)
#define STOC_API __declspec(dllexport)
#else
#define STOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stoc_status {
  STOC_OK = 0,
  STOC_EINVAL = 1,     /* invalid argument or state */
  STOC_EPARSE = 2,     /* malformed JSON or field */
  STOC_ECAP = 3,       /* instance exceeds a solver cap */
  STOC_EEMPTY = 4,     /* empty result where one was required */
  STOC_EINTERNAL = 5,  /* internal consistency failure */
  STOC_ENOMEM = 6
} stoc_status;

typedef struct stoc_graph stoc_graph;
typedef struct stoc_design stoc_design;
typedef struct stoc_family stoc_family;
typedef struct stoc_code stoc_code;
typedef struct stoc_tiling stoc_tiling;
typedef struct stoc_igraph stoc_igraph;

STOC_API const char* stoc_version(void);

/* Message for the most recent failing call on this thread. */
STOC_API const char* stoc_last_error(void);

STOC_API void stoc_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

/* {"n", "directed", "edges", ["labels"]} */
STOC_API stoc_status stoc_graph_from_json(const char* text, stoc_graph** out);
STOC_API stoc_status stoc_graph_to_json(const stoc_graph* g, char** out);

/* name: "cycle" | "path" | "complete" | "cube" | "torus"; n is the
 * parameter (ignored for "cube"). */
STOC_API stoc_status stoc_graph_builtin(const char* name, int n,
                                        stoc_graph** out);

/* Window over [side] or [side]^2 for a recovery set given as
 * {"kind": "interval"|"pair"|"l1"|"linf"|"rect"|"axial", ...} or raw
 * {"dim", "offsets"}.  The handle keeps the interior/boundary split. */
STOC_API stoc_status stoc_graph_window(const char* recovery_json, int side,
                                       stoc_graph** out);

/* {"n", "directed", "edges", "triangle_free", ["interior", "boundary"]} */
STOC_API stoc_status stoc_graph_info(const stoc_graph* g, char** out);

STOC_API void stoc_graph_free(stoc_graph* g);

/* ---- designs and partition families ------------------------------- */

STOC_API stoc_status stoc_design_affine(int q, stoc_design** out);
STOC_API stoc_status stoc_design_from_json(const char* text, stoc_design** out);
STOC_API stoc_status stoc_design_to_json(const stoc_design* d, char** out);

/* {"ok", ["reason"]} */
STOC_API stoc_status stoc_design_verify(const stoc_design* d, char** out);
STOC_API void stoc_design_free(stoc_design* d);

/* name: "2x3" | "3x5" */
STOC_API stoc_status stoc_family_builtin(const char* name, stoc_family** out);
STOC_API stoc_status stoc_family_from_design(const stoc_design* d,
                                             stoc_family** out);
STOC_API stoc_status stoc_family_from_json(const char* text, stoc_family** out);
STOC_API stoc_status stoc_family_to_json(const stoc_family* f, char** out);
STOC_API stoc_status stoc_family_verify(const stoc_family* f, char** out);
STOC_API void stoc_family_free(stoc_family* f);

/* ---- codes -------------------------------------------------------- */

/* Explicit {"q", "level", "n", "words"} or parity form {"q", "n",
 * "parity"}. */
STOC_API stoc_status stoc_code_from_json(const char* text, stoc_code** out);
STOC_API stoc_status stoc_code_to_json(const stoc_code* c, char** out);

/* {"ok", ["vertex", "word_x", "word_y"]}; scope_json is null for all
 * vertices or {"vertices": [...]} for a subset. */
STOC_API stoc_status stoc_code_verify(const stoc_code* c, const stoc_graph* g,
                                      const char* scope_json, char** out);

/* {"exact", "value", "approx"} */
STOC_API stoc_status stoc_code_rate(const stoc_code* c, char** out);
STOC_API stoc_status stoc_code_size(const stoc_code* c, char** out);
STOC_API void stoc_code_free(stoc_code* c);

/* ---- constructions ------------------------------------------------ */

/* Each builder also reports the rate its construction promises, as an
 * exact rational string. */
STOC_API stoc_status stoc_build_clique_partition(const stoc_graph* g,
                                                 const char* parts_json, int q,
                                                 stoc_code** out,
                                                 char** declared_rate);
STOC_API stoc_status stoc_build_edge_to_vertex(const stoc_graph* g, int q,
                                               stoc_code** out,
                                               char** declared_rate);
STOC_API stoc_status stoc_build_matching(const stoc_graph* g,
                                         const char* matching_json, int q,
                                         stoc_code** out, char** declared_rate);
STOC_API stoc_status stoc_build_gcd_scheme(int l, int r, int n, int q,
                                           stoc_code** out,
                                           char** declared_rate);

/* mode_json: null for full enumeration, {"seed", "count"} for a sample. */
STOC_API stoc_status stoc_build_tiling(const stoc_graph* window,
                                       const stoc_tiling* t, int q,
                                       const char* mode_json, stoc_code** out,
                                       char** declared_rate);
STOC_API stoc_status stoc_build_stacked(const stoc_code* seed, int side,
                                        const char* mode_json, stoc_code** out,
                                        char** declared_rate);

/* ---- tilings ------------------------------------------------------ */

/* kind: "l1" | "linf" | "rect"; params_json: [r] or [r, b]. */
STOC_API stoc_status stoc_tiling_lattice(const char* kind,
                                         const char* params_json, int side,
                                         stoc_tiling** out);
STOC_API stoc_status stoc_tiling_from_json(const char* text, stoc_tiling** out);
STOC_API stoc_status stoc_tiling_to_json(const stoc_tiling* t, char** out);

/* {"ok", ["reason"]}; the graph must be a window handle. */
STOC_API stoc_status stoc_tiling_validate(const stoc_tiling* t,
                                          const stoc_graph* window, char** out);
STOC_API void stoc_tiling_free(stoc_tiling* t);

/* ---- interleaving ------------------------------------------------- */

/* coloring_json: null for the greedy coloring, or {"colors", "color"}. */
STOC_API stoc_status stoc_igraph_build(const stoc_graph* base,
                                       const stoc_family* f,
                                       const char* coloring_json,
                                       stoc_igraph** out);
STOC_API stoc_status stoc_igraph_graph(const stoc_igraph* ig, stoc_graph** out);

/* {"s", "k", "colors", "n", "color", "color_to_matrix"} */
STOC_API stoc_status stoc_igraph_info(const stoc_igraph* ig, char** out);

/* tuple_json: seed word index per symbol, symbols in ascending order.
 * Returns {"digits": [...]} over the product vertices. */
STOC_API stoc_status stoc_interleave_tuple(const stoc_igraph* ig,
                                           const stoc_code* seed,
                                           const char* tuple_json, char** out);
STOC_API stoc_status stoc_interleave_code(const stoc_igraph* ig,
                                          const stoc_code* seed,
                                          const char* mode_json,
                                          stoc_code** out);
STOC_API void stoc_igraph_free(stoc_igraph* ig);

/* ---- bounds and certificates -------------------------------------- */

/* kind: "independence" | "mais" | "clique_cover" | "matching" |
 * "anticode" | "diff_avoiding" | "oracle".  options_json (nullable):
 * {"caps": {"independence", "mais", "cover", "b_avoiding_exact",
 * "oracle_words"}, "q": int (oracle), "diameter": int (anticode, with
 * "tiling_exists": bool), "recovery": {...}, "side": int
 * (diff_avoiding, which ignores the graph)}.  Returns a certificate
 * {"kind", "direction", "value", "raw", "witness", "flags"}. */
STOC_API stoc_status stoc_bound(const stoc_graph* g, const char* kind,
                                const char* options_json, char** out);

/* ok becomes 1 when the certificate witness still checks out against g. */
STOC_API stoc_status stoc_certificate_revalidate(const char* certificate_json,
                                                 const stoc_graph* g, int* ok);

/* lower_json / upper_json: arrays of certificates.  Returns {"lower",
 * "upper", "best_lower", "best_upper", "gap", "verdict"}. */
STOC_API stoc_status stoc_capacity_report(const char* lower_json,
                                          const char* upper_json, char** out);

/* kind as in stoc_bound ("independence" or "mais"); sides_json: [int...].
 * Returns {"entries": [{"side", "set_size", "value", "slack"}],
 * "limsup_estimate"}. */
STOC_API stoc_status stoc_window_series(const char* recovery_json,
                                        const char* kind,
                                        const char* sides_json, char** out);

/* Largest storage code by exhaustive search; also returns the oracle
 * certificate. */
STOC_API stoc_status stoc_oracle_max_code(const stoc_graph* g, int q,
                                          stoc_code** out,
                                          char** certificate_json);

/* Fractional cover relaxation.  Returns {"value", "grid_value", "total",
 * "tau", "max_support", "closure_includes_a", "gadget_count",
 * "var_count", "flags", "support"}. */
STOC_API stoc_status stoc_lp_bound(const stoc_graph* g, int tau,
                                   int max_support, int closure_includes_a,
                                   char** out);

/* ---- experiments -------------------------------------------------- */

/* [{"name", "summary"}...] */
STOC_API stoc_status stoc_experiment_list(char** out);

/* format: "json" | "csv" | "table".  ok becomes 1 when every checked row
 * passed. */
STOC_API stoc_status stoc_experiment_run(const char* name,
                                         unsigned long long seed,
                                         const char* format, char** out,
                                         int* ok);

#ifdef __cplusplus
}
#endif

#endif /* STOC_H */
