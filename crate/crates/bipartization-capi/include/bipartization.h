#ifndef BIPARTIZATION_H
#define BIPARTIZATION_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of a C API call.
 */
typedef enum BzStatus {
  /**
   * The call succeeded.
   */
  BZ_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL or not valid UTF-8.
   */
  BZ_STATUS_NULL_ARGUMENT = 1,
  /**
   * The input was rejected (bad weighting, vertex out of range, ...).
   */
  BZ_STATUS_INVALID_INPUT = 2,
  /**
   * Textual input failed to parse.
   */
  BZ_STATUS_PARSE_ERROR = 3,
  /**
   * The instance exceeds a supported size limit.
   */
  BZ_STATUS_SIZE_LIMIT = 4,
  /**
   * The graph is not bipartite.
   */
  BZ_STATUS_NOT_BIPARTITE = 5,
  /**
   * The graph is not connected.
   */
  BZ_STATUS_DISCONNECTED = 6,
  /**
   * A precondition of the requested operation does not hold.
   */
  BZ_STATUS_PRECONDITION = 7,
  /**
   * The library panicked; the handle states are unspecified.
   */
  BZ_STATUS_INTERNAL = 8,
} BzStatus;

/**
 * Opaque handle to an undirected graph.
 */
typedef struct BzGraph BzGraph;

/**
 * Opaque handle to a clique weighting of a host graph.
 */
typedef struct BzWeighting BzWeighting;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message of the most recent error on this thread.
 *
 * The pointer stays valid until the next failing call on the same thread.
 * Never returns NULL; before any error it points at an empty string.
 */
const char *bz_last_error_message(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be freed twice.
 */
void bz_string_free(char *s);

/**
 * Parses a graph6 string into a new graph handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum BzStatus bz_graph_parse_graph6(const char *text, struct BzGraph **out);

/**
 * Parses an edge-list string (first line `n`, then `u v` lines) into a
 * new graph handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum BzStatus bz_graph_parse_edge_list(const char *text, struct BzGraph **out);

/**
 * Frees a graph handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and must not be freed twice.
 */
void bz_graph_free(struct BzGraph *g);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
uint64_t bz_graph_order(const struct BzGraph *g);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
uint64_t bz_graph_size(const struct BzGraph *g);

/**
 * Writes the graph in graph6 format into a newly allocated string.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum BzStatus bz_graph_to_graph6(const struct BzGraph *g, char **out);

/**
 * Parses a weighting over the cliques of `host`. Each line is
 * `v1,v2,...,vk : w` with `#` comments allowed.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string, `host` a live graph
 * handle, and `out` a valid pointer.
 */
enum BzStatus bz_weighting_parse(const char *text,
                                 const struct BzGraph *host,
                                 struct BzWeighting **out);

/**
 * Frees a weighting handle. NULL is ignored.
 *
 * # Safety
 * `f` must come from this library and must not be freed twice.
 */
void bz_weighting_free(struct BzWeighting *f);

/**
 * Builds the bipartite expansion of a weighted host graph and returns it
 * as a new graph handle. The host vertices keep their labels `0..n`; the
 * copy vertices follow in a deterministic order.
 *
 * # Safety
 * `f` must be a live weighting handle and `out` a valid pointer.
 */
enum BzStatus bz_bipartize(const struct BzWeighting *f, struct BzGraph **out);

/**
 * Recovers a host graph and weighting from a connected bipartite graph,
 * taking side `0` (A) or `1` (B) as the host vertex set. On success
 * `out_host` receives the host as an edge list and `out_weights` the
 * weighting, both as newly allocated strings.
 *
 * # Safety
 * `g` must be a live graph handle; `out_host` and `out_weights` must be
 * valid pointers.
 */
enum BzStatus bz_invert(const struct BzGraph *g,
                        uint32_t side,
                        char **out_host,
                        char **out_weights);

/**
 * Decides whether the expansion of the weighted host is a tree.
 * `*out_is_tree` receives 1 or 0; when 0, `bz_last_error_message`
 * describes the violated condition (the status is still `BZ_STATUS_OK`).
 *
 * # Safety
 * `f` must be a live weighting handle and `out_is_tree` a valid pointer.
 */
enum BzStatus bz_is_tree_bipartization(const struct BzWeighting *f, int32_t *out_is_tree);

/**
 * Computes the domination number. `out_members`, when non-NULL, receives
 * a newly allocated space-separated minimum dominating set.
 *
 * # Safety
 * `g` must be a live graph handle and `out_gamma` a valid pointer;
 * `out_members` must be NULL or a valid pointer.
 */
enum BzStatus bz_domination_number(const struct BzGraph *g,
                                   uint64_t *out_gamma,
                                   char **out_members);

/**
 * Computes the covering number (minimum vertex cover size).
 *
 * # Safety
 * `g` must be a live graph handle and `out_beta` a valid pointer.
 */
enum BzStatus bz_covering_number(const struct BzGraph *g, uint64_t *out_beta);

/**
 * Classifies a connected bipartite graph against the family of bipartite
 * graphs whose domination number equals the smaller side. `*out_in_family`
 * receives 1 or 0; `out_gamma` and `out_beta`, when non-NULL, receive the
 * domination and covering numbers.
 *
 * # Safety
 * `g` must be a live graph handle and `out_in_family` a valid pointer;
 * `out_gamma` and `out_beta` must each be NULL or a valid pointer.
 */
enum BzStatus bz_classify(const struct BzGraph *g,
                          int32_t *out_in_family,
                          uint64_t *out_gamma,
                          uint64_t *out_beta);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIPARTIZATION_H */
