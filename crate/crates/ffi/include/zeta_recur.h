#ifndef ZETA_RECUR_H
#define ZETA_RECUR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Identity selector for [`zr_verify`].
 */
typedef enum ZrIdentity {
  /**
   * `∫ x^{s-1}/(e^x - 1) = Γ(s) ζ(s)`
   */
  ZR_IDENTITY_EQ2 = 0,
  /**
   * `2/(e^{2τ} - 1) = 1/(e^τ - 1) - 1/(e^τ + 1)` at sample points
   */
  ZR_IDENTITY_EQ5 = 1,
  /**
   * `∫ x^{s-1}/(e^x + 1) = (1 - 2^{1-s}) Γ(s) ζ(s)`
   */
  ZR_IDENTITY_EQ7 = 2,
  /**
   * contour closure around the rectangle of height π
   */
  ZR_IDENTITY_CLOSURE = 3,
  /**
   * `A - B = C` after the radius goes to infinity
   */
  ZR_IDENTITY_EQ9 = 4,
  /**
   * `ζ(2)` extracted from the `s = 2` contour identity
   */
  ZR_IDENTITY_S2 = 5,
  /**
   * `π ln 2` from the imaginary part at `s = 2`
   */
  ZR_IDENTITY_LOG2 = 6,
  /**
   * even-`s` expansion with exact `ζ(2m)` substituted (`s = 2n`)
   */
  ZR_IDENTITY_EQ10 = 7,
  /**
   * odd `ζ(s)` extracted from the contour identity
   */
  ZR_IDENTITY_ODD = 8,
} ZrIdentity;

/**
 * Result codes. `ZR_STATUS_OK` is zero; everything else is a failure.
 */
typedef enum ZrStatus {
  ZR_STATUS_OK = 0,
  ZR_STATUS_NULL_POINTER = 1,
  ZR_STATUS_INVALID_ARGUMENT = 2,
  ZR_STATUS_DOMAIN_ERROR = 3,
  ZR_STATUS_NO_CONVERGENCE = 4,
  ZR_STATUS_PANIC = 5,
} ZrStatus;

/**
 * Opaque exact rational.
 */
typedef struct ZrRational ZrRational;

/**
 * Flattened identity report. Real-valued sides have zero imaginary parts.
 * When `passed` is false because a quadrature did not converge, the reason
 * is available from [`zr_last_error_message`].
 */
typedef struct ZrIdentityReport {
  uint32_t s;
  double lhs_re;
  double lhs_im;
  double rhs_re;
  double rhs_im;
  double residual;
  double tolerance;
  bool passed;
} ZrIdentityReport;

/**
 * Side integrals around the rectangle, in the order bottom, right, top, left.
 */
typedef struct ZrContourReport {
  uint32_t s;
  double radius;
  double side_re[4];
  double side_im[4];
  double closure_re;
  double closure_im;
  double right_side_magnitude;
  double error_estimate;
  uint64_t evaluations;
  bool converged;
} ZrContourReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *zr_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *zr_version(void);

/**
 * Parses `"p/q"` or `"p"` into a new handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be valid for writes.
 */
enum ZrStatus zr_rational_parse(const char *text, struct ZrRational **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `r` must be NULL or a handle from this library that has not been freed.
 */
void zr_rational_free(struct ZrRational *r);

/**
 * Canonical `"p/q"` text (integers as `"p"`); free with [`zr_string_free`].
 *
 * # Safety
 * `r` must be a live handle; `out` must be valid for writes.
 */
enum ZrStatus zr_rational_to_string(const struct ZrRational *r, char **out);

/**
 * Nearest double (may be 0 or infinite outside the double range).
 *
 * # Safety
 * `r` must be a live handle; `out` must be valid for writes.
 */
enum ZrStatus zr_rational_to_f64(const struct ZrRational *r, double *out);

/**
 * Exact equality.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be valid for writes.
 */
enum ZrStatus zr_rational_equal(const struct ZrRational *a, const struct ZrRational *b, bool *out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library that has not been freed.
 */
void zr_string_free(char *s);

/**
 * `q_n` with `ζ(2n) = q_n π^{2n}`, from the contour recursion.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_zeta_even_recursive(uint64_t n, struct ZrRational **out);

/**
 * `q_n` from the Bernoulli closed form.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_zeta_even_euler(uint64_t n, struct ZrRational **out);

/**
 * `B_m` with `B_1 = -1/2`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_bernoulli(uint64_t m, struct ZrRational **out);

/**
 * π truncated to `digits` decimals; free with [`zr_string_free`].
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_pi_digits(uint64_t digits, char **out);

/**
 * `ζ(2n)` truncated to `digits` decimals; free with [`zr_string_free`].
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_render_zeta_even(uint64_t n, uint64_t digits, char **out);

/**
 * `ζ(s)` by direct summation with an Euler–Maclaurin tail, to `tol`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_zeta_series(uint32_t s, double tol, double *out);

/**
 * Odd `ζ(s)`, `s >= 3`, extracted from the contour identity.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_odd_zeta_from_contour(uint32_t s, double tol, double *out);

/**
 * Runs one identity check. `s` is ignored where the identity fixes it
 * (`Eq5`, `S2`, `Log2`); `radius` is used by `Closure` only. A failed check
 * still returns `ZR_STATUS_OK` with `passed == false`; other statuses mean the
 * check could not be run.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_verify(enum ZrIdentity identity,
                        uint32_t s,
                        double tol,
                        double radius,
                        struct ZrIdentityReport *out);

/**
 * Integrates `z^{s-1}/(e^z - 1)` around the rectangle `0, R, R+iπ, iπ`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZrStatus zr_contour_closure(uint32_t s,
                                 double radius,
                                 double tol,
                                 struct ZrContourReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZETA_RECUR_H */
