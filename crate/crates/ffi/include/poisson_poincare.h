#ifndef POISSON_POINCARE_H
#define POISSON_POINCARE_H

/* Generated by cbindgen from poisson-poincare-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum {
  PP_STATUS_OK = 0,
  // A required pointer argument was null.
  PP_STATUS_NULL_ARGUMENT = 1,
  // An argument failed to parse or named an unknown object.
  PP_STATUS_INVALID_ARGUMENT = 2,
  // The inputs were well formed but the computation rejected them.
  PP_STATUS_COMPUTATION_ERROR = 3,
  // A verification run completed and found a failing identity.
  PP_STATUS_VERIFICATION_FAILED = 4,
  // A panic was caught at the boundary; this is a bug in the library.
  PP_STATUS_INTERNAL_PANIC = 5,
} PpStatus;

// Opaque handle to an exact multivariate Laurent polynomial.
typedef struct PpPolynomial PpPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error on this thread as a fresh heap string, or null if the most
// recent call succeeded. Free with [`pp_string_free`].
char *pp_last_error_message(void);

// Library version as a static string; do not free.
const char *pp_version(void);

// Free a string allocated by this library. Null is a no-op.
//
// # Safety
// `s` must be a pointer previously returned by this library and not yet
// freed.
void pp_string_free(char *s);

// Free a polynomial handle. Null is a no-op.
//
// # Safety
// `p` must be a handle previously returned by this library and not yet
// freed.
void pp_polynomial_free(PpPolynomial *p);

// Two-variable Poincaré polynomial of the hypertoric cone of a matrix.
//
// `matrix` accepts inline JSON (`[[1,0,1],[0,1,1]]`), semicolon-separated
// rows, or a corpus spec (`graphic:K4`, `dual:graphic:cycle_5`,
// `file:path`).
//
// # Safety
// `matrix` must be a valid NUL-terminated string and `out` a valid pointer.
PpStatus pp_hypertoric_poincare(const char *matrix, PpPolynomial **out);

// Tutte polynomial of the column matroid of a matrix (same input grammar as
// [`pp_hypertoric_poincare`]).
//
// # Safety
// `matrix` must be a valid NUL-terminated string and `out` a valid pointer.
PpStatus pp_tutte(const char *matrix, PpPolynomial **out);

// Kostka polynomial K_{λμ}(t). Partitions parse as `"3,2,1"`, `"(3,2,1)"`,
// or exponent form `"2^3,1"`.
//
// # Safety
// `lambda` and `mu` must be valid NUL-terminated strings and `out` a valid
// pointer.
PpStatus pp_kostka(const char *lambda, const char *mu, PpPolynomial **out);

// Two-variable polynomial of the slice attached to a dominance pair λ ⊵ μ.
//
// # Safety
// `lambda` and `mu` must be valid NUL-terminated strings and `out` a valid
// pointer.
PpStatus pp_s3_poincare(const char *lambda, const char *mu, PpPolynomial **out);

// Two-variable polynomial of the nilpotent cone of a Cartan type
// (`"A1"`..`"A5"`, `"B2"`, `"G2"`).
//
// # Safety
// `cartan_type` must be a valid NUL-terminated string and `out` a valid
// pointer.
PpStatus pp_cone_poincare(const char *cartan_type, PpPolynomial **out);

// Render a polynomial in the library's canonical text form.
//
// # Safety
// `p` must be a live handle from this library and `out` a valid pointer.
PpStatus pp_polynomial_text(const PpPolynomial *p, char **out);

// Render a polynomial as JSON (`{"vars": [...], "terms": [...]}` with
// decimal-string coefficients).
//
// # Safety
// `p` must be a live handle from this library and `out` a valid pointer.
PpStatus pp_polynomial_json(const PpPolynomial *p, char **out);

// Number of monomials in a polynomial.
//
// # Safety
// `p` must be a live handle from this library and `out` a valid pointer.
PpStatus pp_polynomial_num_terms(const PpPolynomial *p, size_t *out);

// Exact equality of two polynomials; writes 1 or 0.
//
// # Safety
// `a` and `b` must be live handles from this library and `out` a valid
// pointer.
PpStatus pp_polynomial_equal(const PpPolynomial *a, const PpPolynomial *b, int *out);

// Run one verification suite (or `"all"`) over the built-in corpus.
//
// Writes 1 to `out_passed` and returns `Ok` when every identity holds;
// writes 0 and returns `VerificationFailed` otherwise, with the failing
// suite names in [`pp_last_error_message`]. `out_passed` may be null.
//
// # Safety
// `name` must be a valid NUL-terminated string; `out_passed` must be null
// or a valid pointer.
PpStatus pp_verify_suite(const char *name, int *out_passed);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* POISSON_POINCARE_H */
