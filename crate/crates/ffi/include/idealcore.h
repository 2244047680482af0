#ifndef IDEALCORE_H
#define IDEALCORE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IcStatus {
  IC_STATUS_OK = 0,
  IC_STATUS_NULL_POINTER = 1,
  IC_STATUS_INVALID_UTF8 = 2,
  IC_STATUS_PARSE = 3,
  IC_STATUS_INVALID_ARGUMENT = 4,
  IC_STATUS_RING_MISMATCH = 5,
  IC_STATUS_NOT_A_REDUCTION = 6,
  IC_STATUS_UNKNOWN_FIXTURE = 7,
  IC_STATUS_COMPUTATION = 8,
  IC_STATUS_PANIC = 9,
} IcStatus;

/**
 * An ideal of an `IcRing`.
 */
typedef struct IcIdeal IcIdeal;

/**
 * A polynomial ring.
 */
typedef struct IcRing IcRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; valid until the next failing call.
 */
const char *ic_last_error(void);

/**
 * Create a ring from comma separated variables and a field (`"QQ"` or `"GF:p"`).
 *
 * # Safety
 * `vars` and `field` must be nul-terminated strings; `out` must be writable.
 */
enum IcStatus ic_ring_new(const char *vars, const char *field, struct IcRing **out);

/**
 * # Safety
 * `ring` must come from `ic_ring_new` and not be used afterwards. Null is ignored.
 */
void ic_ring_free(struct IcRing *ring);

/**
 * Parse an ideal from comma separated generators or an expression like `(x, y)^2`.
 *
 * # Safety
 * `ring` must be a live handle, `gens` a nul-terminated string, `out` writable.
 */
enum IcStatus ic_ideal_parse(const struct IcRing *ring, const char *gens, struct IcIdeal **out);

/**
 * # Safety
 * `ideal` must come from this library and not be used afterwards. Null is ignored.
 */
void ic_ideal_free(struct IcIdeal *ideal);

/**
 * Reduced Gröbner basis generators as `"(g1, g2, ...)"`; free with `ic_string_free`.
 *
 * # Safety
 * `ideal` must be a live handle; `out` writable.
 */
enum IcStatus ic_ideal_to_string(const struct IcIdeal *ideal, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void ic_string_free(char *s);

/**
 * # Safety
 * Handles must be live; `out` writable.
 */
enum IcStatus ic_ideal_equal(const struct IcIdeal *a, const struct IcIdeal *b, bool *out);

/**
 * Whether the polynomial `poly` lies in the ideal.
 *
 * # Safety
 * `ideal` must be live, `poly` a nul-terminated string, `out` writable.
 */
enum IcStatus ic_ideal_member(const struct IcIdeal *ideal, const char *poly, bool *out);

/**
 * `a + b`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum IcStatus ic_ideal_sum(const struct IcIdeal *a, const struct IcIdeal *b, struct IcIdeal **out);

/**
 * `a b`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum IcStatus ic_ideal_product(const struct IcIdeal *a,
                               const struct IcIdeal *b,
                               struct IcIdeal **out);

/**
 * `a ∩ b`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum IcStatus ic_ideal_intersect(const struct IcIdeal *a,
                                 const struct IcIdeal *b,
                                 struct IcIdeal **out);

/**
 * `a : b`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum IcStatus ic_ideal_colon(const struct IcIdeal *a,
                             const struct IcIdeal *b,
                             struct IcIdeal **out);

/**
 * `a^k`.
 *
 * # Safety
 * `a` must be live; `out` writable.
 */
enum IcStatus ic_ideal_power(const struct IcIdeal *a, uint32_t k, struct IcIdeal **out);

/**
 * Reduction number of `j` as a reduction of `i`; `IC_STATUS_NOT_A_REDUCTION` past `r_max`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum IcStatus ic_reduction_number(const struct IcIdeal *j,
                                  const struct IcIdeal *i,
                                  uint32_t r_max,
                                  uint32_t *out);

/**
 * # Safety
 * `i` must be live; `out` writable.
 */
enum IcStatus ic_analytic_spread(const struct IcIdeal *i, uint32_t *out);

/**
 * `core(I) = (J:I) I`; fails with `IC_STATUS_COMPUTATION` if `(J:I)I != (J:I)J`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum IcStatus ic_core_formula(const struct IcIdeal *i,
                              const struct IcIdeal *j,
                              uint32_t r_max,
                              struct IcIdeal **out);

/**
 * Intersection of sampled minimal reductions, stopped after `stabilization` samples
 * without change.
 *
 * # Safety
 * `i` must be live; `out` writable.
 */
enum IcStatus ic_core_montecarlo(const struct IcIdeal *i,
                                 uint64_t seed,
                                 size_t stabilization,
                                 struct IcIdeal **out);

/**
 * Run a built-in fixture; `out` receives whether every check passed.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` writable.
 */
enum IcStatus ic_run_fixture(const char *name, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IDEALCORE_H */
