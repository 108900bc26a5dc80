#ifndef LCMBETTI_H
#define LCMBETTI_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Values are stable.
 */
typedef enum LbStatus {
  LB_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  LB_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  LB_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed ideal text or field name.
   */
  LB_STATUS_PARSE = 3,
  /**
   * Mathematically invalid request (bad field, undefined invariant, ...).
   */
  LB_STATUS_DOMAIN = 4,
  /**
   * A resource guard tripped.
   */
  LB_STATUS_RESOURCE = 5,
  /**
   * The output buffer is too small; the needed length was still written.
   */
  LB_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * Internal failure; the engine panicked.
   */
  LB_STATUS_INTERNAL = 7,
} LbStatus;

/**
 * Opaque Betti table over one field.
 */
typedef struct LbBettiTable LbBettiTable;

/**
 * Opaque monomial ideal.
 */
typedef struct LbIdeal LbIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *lb_last_error(void);

/**
 * Library version as a static string.
 */
const char *lb_version(void);

/**
 * Parses the plain-text ideal format.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum LbStatus lb_ideal_parse(const char *text, struct LbIdeal **out);

/**
 * Builds a named ideal (`rp2`, `kty`, `dunce_cap`, ...). `p` is the
 * construction parameter; pass 0 when there is none.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum LbStatus lb_ideal_construct(const char *name, uint32_t p, struct LbIdeal **out);

/**
 * Releases an ideal. NULL is ignored.
 *
 * # Safety
 * `ideal` must come from this library and not be freed twice.
 */
void lb_ideal_free(struct LbIdeal *ideal);

/**
 * Number of minimal generators; 0 for NULL.
 *
 * # Safety
 * `ideal` must be NULL or a live handle.
 */
size_t lb_ideal_num_generators(const struct LbIdeal *ideal);

/**
 * Minimal generators of `ideal^h` as a new handle.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum LbStatus lb_ideal_power(const struct LbIdeal *ideal, uint32_t h, struct LbIdeal **out);

/**
 * Canonical text of the ideal; release with [`lb_string_free`].
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum LbStatus lb_ideal_to_string(const struct LbIdeal *ideal, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void lb_string_free(char *s);

/**
 * Multigraded Betti table of `ideal` over `field` (`"Q"` or `"F<p>"`).
 *
 * # Safety
 * `ideal` must be a live handle, `field` a nul-terminated string and `out`
 * a valid pointer.
 */
enum LbStatus lb_betti_compute(const struct LbIdeal *ideal,
                               const char *field,
                               struct LbBettiTable **out);

/**
 * Releases a table. NULL is ignored.
 *
 * # Safety
 * `table` must come from this library and not be freed twice.
 */
void lb_betti_free(struct LbBettiTable *table);

/**
 * Copies the total Betti numbers `β_0, β_1, …` into `buf`. `len` receives
 * the full length even when `cap` is too small.
 *
 * # Safety
 * `table` must be a live handle, `len` valid, and `buf` valid for `cap`
 * writes (it may be NULL when `cap` is 0).
 */
enum LbStatus lb_betti_total(const struct LbBettiTable *table,
                             uint64_t *buf,
                             size_t cap,
                             size_t *len);

/**
 * Projective dimension of the ideal.
 *
 * # Safety
 * `table` must be a live handle and `out` a valid pointer.
 */
enum LbStatus lb_betti_pd(const struct LbBettiTable *table, size_t *out);

/**
 * Castelnuovo-Mumford regularity of the ideal.
 *
 * # Safety
 * `table` must be a live handle and `out` a valid pointer.
 */
enum LbStatus lb_betti_reg(const struct LbBettiTable *table, int64_t *out);

/**
 * JSON rendering of the table; release with [`lb_string_free`].
 *
 * # Safety
 * `table` must be a live handle and `out` a valid pointer.
 */
enum LbStatus lb_betti_to_json(const struct LbBettiTable *table, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCMBETTI_H */
