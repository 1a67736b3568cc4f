#ifndef HIVECOMB_H
#define HIVECOMB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The nonzero values follow the command-line exit codes
 * where one applies.
 */
typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_INTERNAL = 1,
  HC_STATUS_INVALID_INPUT = 2,
  HC_STATUS_INFEASIBLE = 4,
  HC_STATUS_MALFORMED_DIAGRAM = 5,
  HC_STATUS_NULL_POINTER = 6,
  HC_STATUS_PANIC = 7,
} HcStatus;

/**
 * Opaque honeycomb.
 */
typedef struct HcHoneycomb HcHoneycomb;

/**
 * Opaque largest-lift report.
 */
typedef struct HcLiftReport HcLiftReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *hc_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hc_string_free(char *s);

/**
 * Number of lattice hives with boundary `(λ, μ, ν)`, each of length `n`.
 *
 * # Safety
 * The weight pointers must each point to `n` readable values.
 */
enum HcStatus hc_lr_count(size_t n,
                          const int64_t *lambda,
                          const int64_t *mu,
                          const int64_t *nu,
                          uint64_t *out);

/**
 * Number of Gelfand-Cetlin patterns with top row `λ`.
 *
 * # Safety
 * `lambda` must point to `n` readable values.
 */
enum HcStatus hc_gt_count(size_t n, const int64_t *lambda, uint64_t *out);

/**
 * Parses a honeycomb from JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum HcStatus hc_honeycomb_from_json(const char *json, struct HcHoneycomb **out);

/**
 * The honeycomb as JSON; free the result with [`hc_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_honeycomb_to_json(const struct HcHoneycomb *h, char **out);

/**
 * An SVG drawing of the honeycomb's diagram; rays stop `margin` units past
 * the furthest vertex.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_honeycomb_render_svg(const struct HcHoneycomb *h, double margin, char **out);

/**
 * Overlay of two honeycombs.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum HcStatus hc_overlay(const struct HcHoneycomb *a,
                         const struct HcHoneycomb *b,
                         struct HcHoneycomb **out);

/**
 * Overlaid tripods `(λ_{w(i)}, μ_{v(i)})`; `w` and `v` are 0-based
 * permutations of length `n`.
 *
 * # Safety
 * All arrays must hold `n` readable values; `out` must be writable.
 */
enum HcStatus hc_prv_witness(size_t n,
                             const int64_t *lambda,
                             const int64_t *mu,
                             const size_t *w,
                             const size_t *v,
                             struct HcHoneycomb **out);

/**
 * Frees a honeycomb handle.
 *
 * # Safety
 * `h` must be null or a live handle from this library.
 */
void hc_honeycomb_free(struct HcHoneycomb *h);

/**
 * Largest lift of `(λ, μ, ν)` with the weight function of `seed`.
 *
 * # Safety
 * The weight pointers must each point to `n` readable values; `out` must be
 * writable.
 */
enum HcStatus hc_largest_lift(size_t n,
                              const int64_t *lambda,
                              const int64_t *mu,
                              const int64_t *nu,
                              uint64_t seed,
                              struct HcLiftReport **out);

/**
 * Whether the lifted hive is integral; false for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
bool hc_lift_report_is_integral(const struct HcLiftReport *r);

/**
 * The report as JSON; free the result with [`hc_string_free`].
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_lift_report_to_json(const struct HcLiftReport *r, char **out);

/**
 * Frees a lift report handle.
 *
 * # Safety
 * `r` must be null or a live handle from this library.
 */
void hc_lift_report_free(struct HcLiftReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HIVECOMB_H */
