#ifndef GSQ_H
#define GSQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; edit that file instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GsqStatus {
  GSQ_STATUS_OK = 0,
  GSQ_STATUS_NULL_POINTER = 1,
  GSQ_STATUS_INVALID_UTF8 = 2,
  GSQ_STATUS_PARSE_ERROR = 3,
  GSQ_STATUS_INVALID_ARGUMENT = 4,
  GSQ_STATUS_BUFFER_TOO_SMALL = 5,
  GSQ_STATUS_PANIC = 6,
} GsqStatus;

/**
 * A parsed presentation together with its rewriting system.
 */
typedef struct GsqSystem GsqSystem;

/**
 * Parses a presentation in the gsq text format.
 *
 * # Safety
 * `text_ptr` must be a NUL-terminated string; `out` must be writable.
 */
enum GsqStatus gsq_system_from_text(const char *text_ptr, struct GsqSystem **out);

/**
 * The Jimbo relations of `U_q⁺(A_n)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum GsqStatus gsq_system_builtin_uq_plus(size_t n, struct GsqSystem **out);

/**
 * # Safety
 * `sys` must come from this library and not be freed twice. Null is ignored.
 */
void gsq_system_free(struct GsqSystem *sys);

/**
 * Number of generators.
 *
 * # Safety
 * `sys` must be a live handle or null (which yields 0).
 */
size_t gsq_system_generator_count(const struct GsqSystem *sys);

/**
 * Number of relations after normalization.
 *
 * # Safety
 * `sys` must be a live handle or null (which yields 0).
 */
size_t gsq_system_relation_count(const struct GsqSystem *sys);

/**
 * Writes whether every composition reduces to zero.
 *
 * # Safety
 * `sys` must be a live handle; `out` must be writable.
 */
enum GsqStatus gsq_is_gs_basis(const struct GsqSystem *sys, bool *out);

/**
 * Reduces `poly` and returns the normal form as a new string.
 *
 * # Safety
 * `sys` must be a live handle, `poly` NUL-terminated, `out` writable.
 * Release the result with [`gsq_string_free`].
 */
enum GsqStatus gsq_normal_form(const struct GsqSystem *sys, const char *poly, char **out);

/**
 * Normal-word counts for weighted degrees `0..=cap` under the declared
 * weights, written to `counts`, which must hold `cap + 1` entries.
 *
 * # Safety
 * `sys` must be a live handle; `counts` must point to `len` writable slots.
 */
enum GsqStatus gsq_hilbert(const struct GsqSystem *sys, uint64_t cap, uint64_t *counts, size_t len);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void gsq_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *gsq_last_error(void);

#endif  /* GSQ_H */
