#ifndef ISOSET_H
#define ISOSET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IsosetStatus {
  ISOSET_STATUS_OK = 0,
  /**
   * Null pointer or out-of-range argument.
   */
  ISOSET_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Malformed edge list or graph (self-loop, duplicate edge, ...).
   */
  ISOSET_STATUS_INVALID_GRAPH = 2,
  /**
   * Node budget exhausted.
   */
  ISOSET_STATUS_BUDGET = 3,
  /**
   * The graph does not meet the method's precondition.
   */
  ISOSET_STATUS_PRECONDITION = 4,
  /**
   * The rotation sweep stalled or violated an invariant.
   */
  ISOSET_STATUS_STALLED = 5,
  /**
   * A produced witness failed re-verification.
   */
  ISOSET_STATUS_VERIFICATION_FAILED = 6,
  /**
   * Exact search is limited to 128 vertices.
   */
  ISOSET_STATUS_TOO_LARGE = 7,
  ISOSET_STATUS_PANIC = 99,
} IsosetStatus;

/**
 * Opaque graph handle.
 */
typedef struct IsosetGraph IsosetGraph;

/**
 * A constructive bound: witness of `size` vertices within
 * `bound_num / bound_den`.
 */
typedef struct IsosetBound {
  size_t size;
  uint64_t bound_num;
  uint64_t bound_den;
} IsosetBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty if none. The
 * pointer stays valid until the next call on the same thread.
 */
const char *isoset_last_error(void);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` ids
 * `u0 v0 u1 v1 ...`.
 *
 * # Safety
 * `edges` must point to `2 * m` readable ids (may be null when `m == 0`);
 * `out` must be writable.
 */
enum IsosetStatus isoset_graph_new(size_t n,
                                   const size_t *edges,
                                   size_t m,
                                   struct IsosetGraph **out);

/**
 * Parses the `p <n> <m>` edge-list text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum IsosetStatus isoset_graph_parse(const char *text, struct IsosetGraph **out);

/**
 * # Safety
 * `g` must come from `isoset_graph_new`/`isoset_graph_parse` and not have
 * been freed. Null is ignored.
 */
void isoset_graph_free(struct IsosetGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t isoset_graph_n(const struct IsosetGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t isoset_graph_m(const struct IsosetGraph *g);

/**
 * Exact independent isolation number with its lexicographically least
 * witness. `budget == 0` selects the default of 10^8 nodes.
 *
 * # Safety
 * `g` must be a live handle; `value` writable; `witness` null or room for
 * `n` ids.
 */
enum IsosetStatus isoset_iota_independent(const struct IsosetGraph *g,
                                          uint64_t budget,
                                          size_t *value,
                                          size_t *witness);

/**
 * Writes whether the `len` ids in `ids` form an independent isolating set.
 *
 * # Safety
 * `g` must be a live handle; `ids` must hold `len` readable ids (may be
 * null when `len == 0`); `result` writable.
 */
enum IsosetStatus isoset_is_independent_isolating(const struct IsosetGraph *g,
                                                  const size_t *ids,
                                                  size_t len,
                                                  bool *result);

/**
 * Distance-mod-3 classes of a connected bipartite graph: `classes[v]` is
 * 0, 1 or 2.
 *
 * # Safety
 * `g` must be a live handle; `classes` must have room for `n` bytes.
 */
enum IsosetStatus isoset_bipartite_partition3(const struct IsosetGraph *g, uint8_t *classes);

/**
 * Rotation-sweep bound `(n+1)/3` for a connected 3-colorable graph.
 *
 * # Safety
 * `g` must be a live handle; `out` writable; `witness` null or room for
 * `n` ids.
 */
enum IsosetStatus isoset_tripartite_bound(const struct IsosetGraph *g,
                                          struct IsosetBound *out,
                                          size_t *witness);

/**
 * Grundy-coloring bound `(k+2)n/(2k+6)`.
 *
 * # Safety
 * `g` must be a live handle; `out` writable; `witness` null or room for
 * `n` ids.
 */
enum IsosetStatus isoset_k_colorable_bound(const struct IsosetGraph *g,
                                           struct IsosetBound *out,
                                           size_t *witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISOSET_H */
