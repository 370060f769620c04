#ifndef QCRYSTAL_H
#define QCRYSTAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by every entry point.
 */
typedef enum QcStatus {
  /**
   * Success.
   */
  QcOk = 0,
  /**
   * A pointer argument was NULL or a string was not valid UTF-8.
   */
  QcNullArgument = 1,
  /**
   * Input could not be parsed (shape syntax, JSON, tableau validity).
   */
  QcInvalidInput = 2,
  /**
   * The requested object exists but the operation is undefined on it.
   */
  QcDomainError = 3,
  /**
   * A verification check failed (axiom violation, identity mismatch).
   */
  QcVerificationFailed = 4,
} QcStatus;

/**
 * Opaque crystal graph handle.
 */
typedef struct QcGraph QcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * is owned by the library and valid until the next qcrystal call on the
 * same thread.
 */
const char *qc_last_error(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 */
void qc_string_free(char *s);

/**
 * Frees a graph handle. NULL is ignored.
 */
void qc_graph_free(struct QcGraph *g);

/**
 * Builds the crystal on semistandard Young tableaux of the given shape
 * ("3,1"; empty string for the empty shape) with entries at most n.
 */
enum QcStatus qc_young_crystal(const char *shape, uintptr_t n, struct QcGraph **out);

/**
 * Builds the crystal on semistandard shifted tableaux of the given strict
 * shape; when queer is nonzero the 0-colored edges are included.
 */
enum QcStatus qc_shifted_crystal(const char *shape,
                                 uintptr_t n,
                                 int32_t queer,
                                 struct QcGraph **out);

/**
 * Parses a graph from its JSON serialization.
 */
enum QcStatus qc_graph_from_json(const char *json, struct QcGraph **out);

/**
 * Number of vertices of the graph.
 */
enum QcStatus qc_graph_vertex_count(const struct QcGraph *g, uintptr_t *out);

/**
 * Number of colored edges of the graph.
 */
enum QcStatus qc_graph_edge_count(const struct QcGraph *g, uintptr_t *out);

/**
 * Serializes the graph to JSON.
 */
enum QcStatus qc_graph_to_json(const struct QcGraph *g, char **out);

/**
 * Renders the graph in DOT format.
 */
enum QcStatus qc_graph_to_dot(const struct QcGraph *g, char **out);

/**
 * Runs the local axiom checks on the graph: the Stembridge axioms over
 * the nonzero colors, plus the queer axioms when queer is nonzero. The
 * report (always written on success paths) is a JSON object with fields
 * "passed" and "violations". Returns QcVerificationFailed when the graph
 * fails, with the report still written.
 */
enum QcStatus qc_graph_check_axioms(const struct QcGraph *g, int32_t queer, char **out_report);

/**
 * Schur polynomial s_shape(x_1..x_n) as polynomial JSON.
 */
enum QcStatus qc_schur(const char *shape, uintptr_t n, char **out);

/**
 * Schur P polynomial P_shape(x_1..x_n) as polynomial JSON.
 */
enum QcStatus qc_schur_p(const char *shape, uintptr_t n, char **out);

/**
 * Expansion of P_shape into Schur polynomials at n variables, as a JSON
 * array of {"shape": [..], "coef": "..."} records. The identity is
 * re-verified internally; a mismatch reports QcVerificationFailed.
 */
enum QcStatus qc_expand_schur_p(const char *shape, uintptr_t n, char **out);

/**
 * Expansion of P_gamma * P_delta back into Schur P polynomials, as a JSON
 * array of {"shape": [..], "coef": "..."} records. Nonnegativity and exact
 * reconstruction are verified; failure reports QcVerificationFailed.
 */
enum QcStatus qc_product_schur_p(const char *gamma, const char *delta, char **out);

/**
 * Rectifies a tableau given as JSON: accepts a shifted tableau (which is
 * first unfolded to its symmetric filling) or a partial filling, and
 * writes the resulting Young tableau as JSON.
 */
enum QcStatus qc_rectify(const char *json, char **out);

/**
 * Unfolds a shifted tableau (JSON) into its symmetric partial filling
 * (JSON with "kind":"partial").
 */
enum QcStatus qc_to_symmetric(const char *json, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCRYSTAL_H */
