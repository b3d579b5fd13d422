#ifndef HAMSETS_H
#define HAMSETS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_NULL_POINTER = 1,
  HS_STATUS_INVALID_UTF8 = 2,
  HS_STATUS_INVALID_WORD = 3,
  HS_STATUS_INVALID_ARGUMENT = 4,
  HS_STATUS_TOO_LARGE = 5,
  HS_STATUS_CROSS_CHECK_FAILED = 6,
  HS_STATUS_PANIC = 7,
} HsStatus;

/**
 * Opaque double occurrence word.
 */
typedef struct HsDow HsDow;

/**
 * Opaque assembly graph.
 */
typedef struct HsGraph HsGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a word in compact (`"1212"`) or token (`"1 2 1 2"`) form.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum HsStatus hs_dow_parse(const char *text, struct HsDow **out);

/**
 * Creates the tangled cord word on `n >= 1` letters.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_dow_tangled_cord(size_t n, struct HsDow **out);

/**
 * Releases a word. Null is ignored.
 *
 * # Safety
 * `word` must come from this library and not be used afterwards.
 */
void hs_dow_free(struct HsDow *word);

/**
 * Length of the word (`2n`), 0 for null.
 *
 * # Safety
 * `word` must be null or a live handle.
 */
size_t hs_dow_len(const struct HsDow *word);

/**
 * Number of distinct letters, 0 for null.
 *
 * # Safety
 * `word` must be null or a live handle.
 */
size_t hs_dow_order(const struct HsDow *word);

/**
 * Renders the word; free the result with [`hs_string_free`].
 *
 * # Safety
 * `word` must be a live handle and `out` a valid pointer.
 */
enum HsStatus hs_dow_render(const struct HsDow *word, char **out);

/**
 * The representative of the word's class under renaming and reversal.
 *
 * # Safety
 * `word` must be a live handle and `out` a valid pointer.
 */
enum HsStatus hs_dow_class_representative(const struct HsDow *word, struct HsDow **out);

/**
 * # Safety
 * `word` must be a live handle and `out` a valid pointer.
 */
enum HsStatus hs_dow_is_tangled_cord(const struct HsDow *word, bool *out);

/**
 * Builds the assembly graph of a word. The word handle stays owned by the
 * caller.
 *
 * # Safety
 * `word` must be a live handle and `out` a valid pointer.
 */
enum HsStatus hs_graph_build(const struct HsDow *word, struct HsGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void hs_graph_free(struct HsGraph *graph);

/**
 * Number of Hamiltonian sets of polygonal paths.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum HsStatus hs_graph_count_hamiltonian_sets(const struct HsGraph *graph, uint64_t *out);

/**
 * Graphviz rendering; free the result with [`hs_string_free`].
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum HsStatus hs_graph_export_dot(const struct HsGraph *graph, char **out);

/**
 * `F_{2n+1} - 1`, the largest possible count on `n` vertices.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_hamiltonian_bound(size_t n, uint64_t *out);

/**
 * Maximality report as JSON; free the result with [`hs_string_free`].
 *
 * # Safety
 * `word` must be a live handle and `out` a valid pointer.
 */
enum HsStatus hs_analyze_json(const struct HsDow *word, size_t cross_check_limit, char **out);

/**
 * Census summary for order `n` as JSON; free the result with
 * [`hs_string_free`]. `threads = 0` uses one thread per core.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_census_json(size_t n, size_t threads, bool allow_large, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `text` must come from this library and not be used afterwards.
 */
void hs_string_free(char *text);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *hs_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAMSETS_H */
