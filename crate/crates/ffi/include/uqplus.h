#ifndef UQPLUS_H
#define UQPLUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  UQ_STATUS_OK = 0,
  UQ_STATUS_NULL_POINTER = 1,
  UQ_STATUS_INVALID_UTF8 = 2,
  UQ_STATUS_PARSE = 3,
  UQ_STATUS_INVALID_INPUT = 4,
  UQ_STATUS_MISMATCH = 5,
  UQ_STATUS_RESOURCE = 6,
  UQ_STATUS_BUFFER_TOO_SMALL = 7,
  UQ_STATUS_PANIC = 8,
} UqStatus;

/**
 * A presented algebra (one of the built-ins).
 */
typedef struct UqAlgebra UqAlgebra;

/**
 * A diagonal braiding built from Cartan data.
 */
typedef struct UqBraiding UqBraiding;

/**
 * An element of a presented algebra, always in normal form.
 */
typedef struct UqElement UqElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *uq_version(void);

/**
 * Copy of the last error message on this thread, or NULL if there is none.
 * Release with `uq_string_free`.
 */
char *uq_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void uq_string_free(char *s);

/**
 * Looks up a built-in algebra by name (`b2`, `heisenberg`, `qtorus`, ...).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
UqStatus uq_algebra_builtin(const char *name, UqAlgebra **out);

/**
 * Number of generators.
 *
 * # Safety
 * `alg` must be NULL or a live handle.
 */
size_t uq_algebra_generator_count(const UqAlgebra *alg);

/**
 * # Safety
 * `alg` must be NULL or a handle from `uq_algebra_builtin` not yet freed.
 */
void uq_algebra_free(UqAlgebra *alg);

/**
 * Parses an expression and brings it to normal form.
 *
 * # Safety
 * `alg` must be a live handle, `text` NUL-terminated, `out` writable.
 */
UqStatus uq_element_parse(const UqAlgebra *alg, const char *text, UqElement **out);

/**
 * Product `a * b` in normal form.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
UqStatus uq_element_mul(const UqElement *a, const UqElement *b, UqElement **out);

/**
 * Sum `a + b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
UqStatus uq_element_add(const UqElement *a, const UqElement *b, UqElement **out);

/**
 * Canonical text of an element, e.g. `q^-2*e1*e2 - q^-2*e3`.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
UqStatus uq_element_to_string(const UqElement *e, char **out);

/**
 * Exact equality of normal forms.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
UqStatus uq_element_equal(const UqElement *a, const UqElement *b, bool *out);

/**
 * Whether the element commutes with every generator.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
UqStatus uq_element_is_central(const UqElement *e, bool *out);

/**
 * # Safety
 * `e` must be NULL or a handle from this library not yet freed.
 */
void uq_element_free(UqElement *e);

/**
 * Braiding `q_ij = q^{d_i a_ij}` from Cartan data in JSON, `{"C": [[..]], "d": [..]}`.
 *
 * # Safety
 * `json` must be NUL-terminated and `out` writable.
 */
UqStatus uq_braiding_from_cartan_json(const char *json, UqBraiding **out);

/**
 * Minimal relations up to `max_degree` (at most 8) as a JSON array.
 *
 * # Safety
 * `b` must be a live handle and `out` writable.
 */
UqStatus uq_relations_json(const UqBraiding *b, size_t max_degree, char **out);

/**
 * Writes the dimensions of degrees `0..=max_degree` into `dims`, which
 * must have room for `max_degree + 1` entries.
 *
 * # Safety
 * `b` must be a live handle and `dims` must point to `len` writable entries.
 */
UqStatus uq_hilbert_series(const UqBraiding *b, size_t max_degree, size_t *dims, size_t len);

/**
 * # Safety
 * `b` must be NULL or a handle from this library not yet freed.
 */
void uq_braiding_free(UqBraiding *b);

/**
 * Runs the full identity battery; writes the JSON report and whether every check passed.
 *
 * # Safety
 * `report` and `passed` must be writable.
 */
UqStatus uq_verify_json(char **report, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UQPLUS_H */
