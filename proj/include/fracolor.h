/* fracolor: exact k-fold colorings of Schreier graphs from clopen local
 * rules, plus the supporting oracles (pruning, decorations, exact LP,
 * density heuristics).
 *
 * Conventions:
 *   - All structured data crosses the boundary as JSON (or edge-list) text.
 *   - Functions return FRC_OK on success; on failure the out-parameters are
 *     untouched and frc_last_error() describes the problem (thread-local).
 *   - Strings returned through char** are heap-allocated; release them with
 *     frc_string_free. Handles are released with their matching _free call.
 */

#ifndef FRACOLOR_H
#define FRACOLOR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frc_status {
    FRC_OK = 0,
    FRC_EINVAL = 1,        /* malformed argument */
    FRC_ECTX = 2,          /* group context mismatch */
    FRC_ECAP = 3,          /* enumeration / size cap exceeded */
    FRC_EPRECOND = 4,      /* documented precondition violated */
    FRC_EINCONSISTENT = 5, /* internal cross-check failed */
    FRC_EBUDGET = 6,       /* randomized retry budget exhausted */
    FRC_EPARSE = 7,        /* JSON or edge-list syntax error */
    FRC_EINTERNAL = 8
} frc_status;

typedef struct frc_rule frc_rule;         /* clopen set (window + patterns) */
typedef struct frc_instance frc_instance; /* partial group action on vertices */
typedef struct frc_graph frc_graph;       /* plain undirected graph */

/* Message for the most recent failure on this thread; never NULL. */
const char* frc_last_error(void);

void frc_string_free(char* s);
void frc_rule_free(frc_rule* r);
void frc_instance_free(frc_instance* s);
void frc_graph_free(frc_graph* g);

/* ---- clopen rules ---------------------------------------------------- */

/* {"ctx": ..., "window": [...] | "std", "patterns": ["0101...", ...]} */
frc_status frc_rule_parse(const char* json, frc_rule** out);
frc_status frc_rule_to_json(const frc_rule* r, char** out);

/* Exact pattern fraction |Phi| / 2^|D| as "p/q". */
frc_status frc_rule_density(const frc_rule* r, char** out);

/* f_json: window JSON (list of elements, or "std") in the rule's context. */
frc_status frc_rule_prune(const frc_rule* r, const char* f_json, frc_rule** out);

/* *independent gets 0/1; on violation *witness_json (optional, may be NULL)
 * gets {"sigma": ..., "window": [...], "assignment": "0101..."}. */
frc_status frc_rule_is_independent(const frc_rule* r, const char* f_json, int* independent,
                                   char** witness_json);

frc_status frc_rule_minimize(const frc_rule* r, frc_rule** out);

/* Local maximum-hash rule on the radius-r ball; always independent. */
frc_status frc_rule_hashmax(const char* ctx_json, const char* f_json, int radius,
                            frc_rule** out);

/* Monte Carlo membership frequency; report JSON with mean/std_error/samples. */
frc_status frc_rule_estimate_density(const frc_rule* r, long samples, uint64_t seed,
                                     char** report_json);

/* ---- instances and graphs -------------------------------------------- */

frc_status frc_instance_torus(int d, int m, frc_instance** out);
frc_status frc_instance_parse(const char* json, frc_instance** out);
/* Builds the free-group action defined by a decoration file's gen-maps. */
frc_status frc_instance_from_decoration(const char* decoration_json, frc_instance** out);
frc_status frc_instance_to_json(const frc_instance* s, char** out);

frc_status frc_graph_random_regular(int n_gens, int vertices, uint64_t seed, frc_graph** out);
/* "u v" per line, 0-indexed. */
frc_status frc_graph_from_edge_list(const char* text, frc_graph** out);
frc_status frc_graph_to_edge_list(const frc_graph* g, char** out);
/* Symmetrized orbit graph of the instance under the window F. */
frc_status frc_graph_of_instance(const frc_instance* s, const char* f_json, frc_graph** out);
frc_status frc_graph_cycle(int n, frc_graph** out);
frc_status frc_graph_complete(int n, frc_graph** out);
frc_status frc_graph_petersen(frc_graph** out);

/* Iterated local-minimum independent set; report JSON with the selected
 * vertices, density and the log(d)/d reference value when defined. */
frc_status frc_graph_multiround(const frc_graph* g, int rounds, uint64_t seed,
                                char** report_json);

/* ---- pipelines -------------------------------------------------------- */

/* options_json (all fields optional):
 *   {"prune": bool, "n_cap": int, "bit_cap": int, "compact_colors": bool,
 *    "allow_empty_f": bool}
 * report: {"ell", "k", "ratio", "ratio_decimal", "palette", "domain_size",
 *          "domain_fraction", "verified", "counterexample",
 *          "wrap_around_risk", "rule_density"} */
frc_status frc_synth(const frc_instance* s, const frc_rule* r, const char* f_json,
                     const char* options_json, char** report_json);

/* options_json: {"k_max": int, "vertex_cap": int}
 * report: {"chi_star", "chi_star_decimal", "alpha", "alpha_witness",
 *          "chi_k": [{"k", "ell"}], "vertex_transitive"} */
frc_status frc_oracle(const frc_graph* g, const char* options_json, char** report_json);

/* options_json: {"n_gens": int, "full": bool}
 * report: {"decoration": {...}, "certified_fraction", "certified_count",
 *          "full"} */
frc_status frc_decorate(const frc_graph* g, const char* options_json, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FRACOLOR_H */
