#ifndef GRFIX_H
#define GRFIX_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  GRFIX_STATUS_OK = 0,
  GRFIX_STATUS_NULL_POINTER = 1,
  GRFIX_STATUS_INVALID_ARGUMENT = 2,
  GRFIX_STATUS_PARSE = 3,
  GRFIX_STATUS_TIMEOUT = 4,
  GRFIX_STATUS_UNIT_IDEAL = 5,
  GRFIX_STATUS_INTERNAL = 6,
} GrfixStatus;

/**
 * A shuffle ideal: shuffle equations plus Plücker quadrics.
 */
typedef struct GrfixIdeal GrfixIdeal;

/**
 * One analyzed cell. `delta` and `gamma` are meaningful only when
 * `complete` is true.
 */
typedef struct {
  uint64_t sigma;
  int64_t delta;
  uint64_t gamma;
  bool complete;
} GrfixRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *grfix_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void grfix_string_free(char *s);

/**
 * Rank of the shuffle equations of `T_λ` on `Gr(l, n)`.
 *
 * # Safety
 * `parts` points to `len` values; `sigma` is writable.
 */
GrfixStatus grfix_shuffle_rank(const uint32_t *parts, size_t len, uint32_t l, uint64_t *sigma);

/**
 * `[σ, δ, γ]` for `T_λ` on `Gr(l, n)`. A non-positive budget is unlimited;
 * running out of budget returns `GRFIX_STATUS_OK` with `complete = false`.
 *
 * # Safety
 * `parts` points to `len` values; `record` is writable.
 */
GrfixStatus grfix_analyze(const uint32_t *parts,
                          size_t len,
                          uint32_t l,
                          double budget_seconds,
                          GrfixRecord *record);

/**
 * Builds the shuffle ideal of `T_λ` on `Gr(l, n)`.
 *
 * # Safety
 * `parts` points to `len` values; `ideal` is writable. The result must be
 * released with [`grfix_ideal_free`].
 */
GrfixStatus grfix_ideal_new(const uint32_t *parts, size_t len, uint32_t l, GrfixIdeal **ideal);

/**
 * # Safety
 * `ideal` must be null or a pointer from [`grfix_ideal_new`], not yet freed.
 */
void grfix_ideal_free(GrfixIdeal *ideal);

/**
 * Number of generators: shuffle basis followed by quadrics.
 *
 * # Safety
 * `ideal` comes from [`grfix_ideal_new`]; `count` is writable.
 */
GrfixStatus grfix_ideal_len(const GrfixIdeal *ideal, size_t *count);

/**
 * The ideal in text form: a `# ring p, n=<n>, l=<l>` header and one
 * generator per line. Free the string with [`grfix_string_free`].
 *
 * # Safety
 * `ideal` comes from [`grfix_ideal_new`]; `text` is writable.
 */
GrfixStatus grfix_ideal_to_string(const GrfixIdeal *ideal, char **text);

/**
 * Whether `poly` (text form, e.g. `p_{1,4,6,8}^2`) lies in the ideal.
 *
 * # Safety
 * `ideal` comes from [`grfix_ideal_new`]; `poly` is a NUL-terminated
 * string; `member` is writable.
 */
GrfixStatus grfix_ideal_member(const GrfixIdeal *ideal,
                               const char *poly,
                               double budget_seconds,
                               bool *member);

/**
 * Whether duality carries the shuffle span for `l` onto the one for `n - l`.
 *
 * # Safety
 * `parts` points to `len` values; `dual` is writable.
 */
GrfixStatus grfix_dual_check(const uint32_t *parts, size_t len, uint32_t l, bool *dual);

/**
 * Dimension of the Schubert variety `W_μ` for `λ = (r,…,r)` with `d` parts.
 *
 * # Safety
 * `mu` points to `len` values; `dim` is writable.
 */
GrfixStatus grfix_schubert_dim(uint32_t d,
                               uint32_t r,
                               const uint32_t *mu,
                               size_t len,
                               uint64_t *dim);

/**
 * Dimension of `Gr(l, dr)^T` for `λ = (r,…,r)` with `d` parts.
 *
 * # Safety
 * `dim` is writable.
 */
GrfixStatus grfix_grassfixed_dim(uint32_t d, uint32_t r, uint32_t l, uint64_t *dim);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRFIX_H */
