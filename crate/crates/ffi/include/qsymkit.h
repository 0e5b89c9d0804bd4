#ifndef QSYMKIT_H
#define QSYMKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum QsymkitStatus {
  QSYMKIT_STATUS_OK = 0,
  QSYMKIT_STATUS_NULL_POINTER = 1,
  QSYMKIT_STATUS_INVALID_UTF8 = 2,
  QSYMKIT_STATUS_INVALID_INPUT = 3,
  QSYMKIT_STATUS_DOMAIN = 4,
  QSYMKIT_STATUS_NOT_SYMMETRIC = 5,
  // A cross-validation check failed; the message names it.
  QSYMKIT_STATUS_CHECK_FAILED = 6,
  QSYMKIT_STATUS_PANIC = 7,
} QsymkitStatus;

// A quasisymmetric or symmetric function with rational polynomial
// coefficients.
typedef struct QsymkitElement QsymkitElement;

// A labeled poset.
typedef struct QsymkitPoset QsymkitPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *qsymkit_last_error(void);

// Library version, a static string.
const char *qsymkit_version(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void qsymkit_string_free(char *s);

// Parses canonical text such as `Psi[2,1] - 1/2*F[3]` or `3*s[2,1]`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum QsymkitStatus qsymkit_element_parse(const char *text, struct QsymkitElement **out);

// Reads an element from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum QsymkitStatus qsymkit_element_from_json(const char *json, struct QsymkitElement **out);

// Converts to `basis`: M, F, Psi, p, h, e, s or m. Quasisymmetric to
// symmetric fails with `NOT_SYMMETRIC` when the input is not symmetric.
//
// # Safety
// `e` must be a live element, `basis` a NUL-terminated string, `out` writable.
enum QsymkitStatus qsymkit_element_convert(const struct QsymkitElement *e,
                                           const char *basis,
                                           struct QsymkitElement **out);

// Canonical text. With `normalized`, Psi and p coefficients are shown
// multiplied by `z` and followed by `/z`.
//
// # Safety
// `e` must be a live element; `out` must be writable.
enum QsymkitStatus qsymkit_element_to_text(const struct QsymkitElement *e,
                                           bool normalized,
                                           char **out);

// JSON form, compact.
//
// # Safety
// `e` must be a live element; `out` must be writable.
enum QsymkitStatus qsymkit_element_to_json(const struct QsymkitElement *e, char **out);

// Equality as functions, regardless of basis.
//
// # Safety
// `a` and `b` must be live elements; `out` must be writable.
enum QsymkitStatus qsymkit_element_equal(const struct QsymkitElement *a,
                                         const struct QsymkitElement *b,
                                         bool *out);

// # Safety
// `e` must come from this library and not have been freed. NULL is ignored.
void qsymkit_element_free(struct QsymkitElement *e);

// Reads `{"n":N,"covers":[[i,j],...],"labels":[...]}`; labels default to a
// natural labeling.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum QsymkitStatus qsymkit_poset_from_json(const char *json, struct QsymkitPoset **out);

// # Safety
// `p` must be a live poset; `out` must be writable.
enum QsymkitStatus qsymkit_poset_linear_extensions(const struct QsymkitPoset *p, uint64_t *out);

// # Safety
// `p` must come from this library and not have been freed. NULL is ignored.
void qsymkit_poset_free(struct QsymkitPoset *p);

// Psi expansion of `K_P` for a naturally labeled poset. `route` is `all`,
// `F`, `Lstar` or `Ostar`; with `all` the routes are compared and a
// disagreement returns `CHECK_FAILED` without an element.
//
// # Safety
// `p` must be a live poset, `route` a NUL-terminated string, `out` writable.
enum QsymkitStatus qsymkit_kp_psi(const struct QsymkitPoset *p,
                                  const char *route,
                                  struct QsymkitElement **out);

// Runs a verification suite; `n` of zero means the suite default. Writes
// the number of failed checks to `failed` and returns `CHECK_FAILED` if it
// is nonzero, with the first failure as the last error.
//
// # Safety
// `suite` must be a NUL-terminated string; `failed` must be writable.
enum QsymkitStatus qsymkit_verify(const char *suite, uintptr_t n, uintptr_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSYMKIT_H */
