#ifndef RHL_H
#define RHL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum RhlStatus {
  RHL_STATUS_OK = 0,
  RHL_STATUS_NULL_POINTER = 1,
  RHL_STATUS_INVALID_ARGUMENT = 2,
  RHL_STATUS_PARSE_ERROR = 3,
  RHL_STATUS_BUFFER_TOO_SMALL = 4,
  RHL_STATUS_INCONCLUSIVE = 5,
  RHL_STATUS_PRECONDITION_FAILED = 6,
  RHL_STATUS_THEOREM_VIOLATION = 7,
  RHL_STATUS_REJECTED = 8,
  RHL_STATUS_PANIC = 9,
} RhlStatus;

typedef enum RhlTheorem {
  RHL_THEOREM_TIGHT = 0,
  RHL_THEOREM_LOOSE = 1,
  RHL_THEOREM_LOOSE_PLUS = 2,
  RHL_THEOREM_MP_TIGHT = 3,
  RHL_THEOREM_MP_MESSY = 4,
  RHL_THEOREM_MP_LOOSE = 5,
} RhlTheorem;

typedef enum RhlHostKind {
  RHL_HOST_KIND_COMPLETE = 0,
  /**
   * Balanced `K_{n,n,n}`.
   */
  RHL_HOST_KIND_TRIPARTITE = 1,
} RhlHostKind;

/**
 * Opaque coloring handle.
 */
typedef struct RhlColoring RhlColoring;

/**
 * Opaque pattern handle.
 */
typedef struct RhlPattern RhlPattern;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on this thread.
 */
const char *rhl_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void rhl_string_free(char *s);

/**
 * Parse the coloring text format.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum RhlStatus rhl_coloring_parse(const char *text, struct RhlColoring **out_handle);

/**
 * Build a named construction, e.g. `"tight-lb"` with `n = 9`. `n = 0`
 * selects the default size; `j_mask` bit `i` selects coordinate `i + 1`.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum RhlStatus rhl_coloring_build(const char *name,
                                  uint32_t n,
                                  uint8_t j_mask,
                                  struct RhlColoring **out_handle);

/**
 * # Safety
 * `c` must be null or a handle from this library, not yet freed.
 */
void rhl_coloring_free(struct RhlColoring *c);

/**
 * Number of distinct colors, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
uint32_t rhl_coloring_palette_size(const struct RhlColoring *c);

/**
 * Number of host edges, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t rhl_coloring_edge_count(const struct RhlColoring *c);

/**
 * Serialize to the text format; free the result with `rhl_string_free`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RhlStatus rhl_coloring_to_text(const struct RhlColoring *c, char **out_text);

/**
 * Catalog pattern by name (`"T"`, `"MESSY_M"`, `"M2"`, ...).
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum RhlStatus rhl_pattern_from_name(const char *name, struct RhlPattern **out_handle);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void rhl_pattern_free(struct RhlPattern *p);

/**
 * Look for a rainbow copy. On return `*found` tells whether one exists; if
 * so its vertex images are written to `vertices` (template order) and their
 * count to `*len`. `BufferTooSmall` leaves the needed size in `*len`.
 *
 * # Safety
 * Handles must be live; `found` and `len` writable; `vertices` valid for
 * `capacity` writes (may be null when `capacity` is 0).
 */
enum RhlStatus rhl_find_rainbow_copy(const struct RhlColoring *c,
                                     const struct RhlPattern *p,
                                     bool *found,
                                     uint32_t *vertices,
                                     size_t capacity,
                                     size_t *len);

/**
 * Certify against a structure theorem; the certificate JSON is written to
 * `*out_json` (free with `rhl_string_free`).
 *
 * # Safety
 * `c` must be a live handle; `out_json` writable.
 */
enum RhlStatus rhl_certify(const struct RhlColoring *c, enum RhlTheorem theorem, char **out_json);

/**
 * Check a certificate (JSON) against a coloring. `Rejected` means it
 * parsed but does not hold; the failing clause is in `rhl_last_error`.
 *
 * # Safety
 * `c` must be a live handle; `json` a nul-terminated string.
 */
enum RhlStatus rhl_verify_certificate(const struct RhlColoring *c, const char *json);

/**
 * Anti-Ramsey number of `p` on `K_n` or `K_{n,n,n}`. Zero limits mean
 * "no node limit" and "default time limit"; `threads = 0` uses all cores.
 *
 * # Safety
 * `p` must be a live handle; `value` writable.
 */
enum RhlStatus rhl_anti_ramsey(enum RhlHostKind host,
                               uint32_t n,
                               const struct RhlPattern *p,
                               uint64_t node_limit,
                               uint64_t time_limit_secs,
                               uint32_t threads,
                               uint32_t *value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RHL_H */
