#ifndef CHEBKNOT_H
#define CHEBKNOT_H

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every call.
typedef enum ChkStatus {
  CHK_STATUS_OK = 0,
  // A required pointer argument was null.
  CHK_STATUS_NULL_POINTER = 1,
  // The arguments do not describe a valid input (zero denominator,
  // non-coprime pair, non-finite floor).
  CHK_STATUS_INVALID_ARGUMENT = 2,
  // The input is valid but the operation is undefined for it (a link
  // where a knot is needed, a trivial harmonic knot, an ambiguous crossing).
  CHK_STATUS_DOMAIN = 3,
  // A result does not fit the C type of its out parameter.
  CHK_STATUS_OVERFLOW = 4,
  // The caller's buffer is too short; the required length was written.
  CHK_STATUS_BUFFER_TOO_SMALL = 5,
  // Internal failure; the library state is unaffected.
  CHK_STATUS_PANIC = 6,
} ChkStatus;

// Opaque canonical two-bridge knot.
typedef struct ChkKnot ChkKnot;

// Opaque polynomial parametrization `(T_3(t), T_b(t), z(t))`.
typedef struct ChkParametrization ChkParametrization;

// Result of classifying `H(3, b, c)`.
typedef struct ChkHarmonic {
  int64_t b_canon;
  int64_t c_canon;
  int64_t lambda;
  // The input is the mirror image of `H(3, b_canon, c_canon)`.
  bool mirror;
  // Schubert fraction of `H(3, b_canon, c_canon)`.
  int64_t alpha;
  int64_t beta;
  int64_t crossing_number;
} ChkHarmonic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null after a
// successful one. Owned by the library; valid until the next call.
const char *chk_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *chk_version(void);

// Releases a string returned by a `_json` function. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void chk_string_free(char *s);

// 1-regular continued fraction of `alpha/beta`.
//
// Writes the number of terms to `len`. If `cap` is smaller, nothing is
// written to `buf` and `BUFFER_TOO_SMALL` is returned, so a first call with
// `cap = 0` sizes the buffer. A negative value is expanded as `−(|r|)`.
//
// # Safety
// `buf` must point to `cap` writable bytes (it may be null when `cap = 0`);
// `len` must be valid for writes.
enum ChkStatus chk_regular_expansion(int64_t alpha,
                                     int64_t beta,
                                     int8_t *buf,
                                     size_t cap,
                                     size_t *len);

// Canonical form of `S(alpha/beta)`. `alpha` must be positive and coprime
// to `beta`; `alpha = 1` is the unknot.
//
// # Safety
// `out_knot` must be valid for writes.
enum ChkStatus chk_knot_new(int64_t alpha, int64_t beta, struct ChkKnot **out_knot);

// Releases a knot. Null is ignored.
//
// # Safety
// `knot` must be null or a handle from [`chk_knot_new`] not yet freed.
void chk_knot_free(struct ChkKnot *knot);

// `α` and `β` of the canonical representative, `0 ≤ β < α`, and whether
// the knot is the mirror image of `S(α/β)`.
//
// # Safety
// `knot` must be a live handle; the out pointers must be valid for writes.
enum ChkStatus chk_knot_fraction(const struct ChkKnot *knot,
                                 int64_t *alpha,
                                 int64_t *beta,
                                 bool *mirror);

// Crossing number of the knot.
//
// # Safety
// `knot` must be a live handle; `n` must be valid for writes.
enum ChkStatus chk_knot_crossing_number(const struct ChkKnot *knot, int64_t *n);

// Whether the knot is isotopic to its mirror image.
//
// # Safety
// `knot` must be a live handle; `result` must be valid for writes.
enum ChkStatus chk_knot_is_amphicheiral(const struct ChkKnot *knot, bool *result);

// JSON record of the knot. Free the string with [`chk_string_free`].
//
// # Safety
// `knot` must be a live handle; `json` must be valid for writes.
enum ChkStatus chk_knot_json(const struct ChkKnot *knot, char **json);

// Polynomial parametrization of the knot `S(alpha/beta)` on a minimal
// Chebyshev diagram. Even `alpha` (a link) is a domain error.
//
// # Safety
// `out_param` must be valid for writes.
enum ChkStatus chk_parametrization_new(int64_t alpha,
                                       int64_t beta,
                                       struct ChkParametrization **out_param);

// Releases a parametrization. Null is ignored.
//
// # Safety
// `param` must be null or a handle from [`chk_parametrization_new`] not
// yet freed.
void chk_parametrization_free(struct ChkParametrization *param);

// Degree `b` of `y = T_b(t)` and the crossing number.
//
// # Safety
// `param` must be a live handle; the out pointers must be valid for writes.
enum ChkStatus chk_parametrization_degrees(const struct ChkParametrization *param,
                                           int64_t *b,
                                           int64_t *crossing_number);

// Roots of the height polynomial, increasing, and its leading sign.
// Sizing follows [`chk_regular_expansion`].
//
// # Safety
// `roots` must point to `cap` writable doubles (or be null with `cap = 0`);
// `len` and `leading_sign` must be valid for writes.
enum ChkStatus chk_parametrization_height_roots(const struct ChkParametrization *param,
                                                double *roots,
                                                size_t cap,
                                                size_t *len,
                                                int8_t *leading_sign);

// The curve point `(x, y, z)` at parameter `t`.
//
// # Safety
// `param` must be a live handle; `xyz` must point to 3 writable doubles.
enum ChkStatus chk_parametrization_eval(const struct ChkParametrization *param,
                                        double t,
                                        double *xyz);

// JSON record of the parametrization. Free with [`chk_string_free`].
//
// # Safety
// `param` must be a live handle; `json` must be valid for writes.
enum ChkStatus chk_parametrization_json(const struct ChkParametrization *param, char **json);

// Builds the parametrization of `S(alpha/beta)`, measures every crossing
// and sets `verdict` to whether the measured knot is `S(alpha/beta)`,
// chirality included. `floor` is the smallest accepted height gap at a
// crossing; a smaller gap is a domain error.
//
// # Safety
// `verdict` must be valid for writes.
enum ChkStatus chk_verify(int64_t alpha, int64_t beta, double floor, bool *verdict);

// Reduces `H(a, b, c)` to its canonical pair. Only `a = 3` is supported.
//
// # Safety
// `result` must be valid for writes.
enum ChkStatus chk_harmonic_classify(int64_t a, int64_t b, int64_t c, struct ChkHarmonic *result);

// Reads a NUL-terminated fraction such as `"9/7"` into `alpha`, `beta`.
//
// # Safety
// `text` must be a valid C string; the out pointers must be valid for writes.
enum ChkStatus chk_parse_fraction(const char *text, int64_t *alpha, int64_t *beta);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHEBKNOT_H */
