#ifndef CLASSA_H
#define CLASSA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Number of certificates reported by [`classa_curve_certify`].
 */
#define CLASSA_CERTIFICATE_COUNT 6

typedef enum ClassaStatus {
  CLASSA_STATUS_OK = 0,
  CLASSA_STATUS_NULL_POINTER = 1,
  CLASSA_STATUS_ZERO_SEED = 2,
  CLASSA_STATUS_ZERO_VECTOR = 3,
  CLASSA_STATUS_SINGULAR_SUBDIVISION = 4,
  CLASSA_STATUS_VANISHING_SPEED = 5,
  CLASSA_STATUS_WRONG_VARIANT = 6,
  CLASSA_STATUS_COLLINEAR_PAIR = 7,
  CLASSA_STATUS_DEGENERATE_LINE = 8,
  CLASSA_STATUS_INVALID_SPEC = 9,
  CLASSA_STATUS_PARSE = 10,
  CLASSA_STATUS_BUFFER_TOO_SMALL = 11,
  CLASSA_STATUS_PANIC = 12,
} ClassaStatus;

/**
 * Direction guaranteed by a held certificate, relative to the sign of `κ(0)`.
 */
typedef enum ClassaDirection {
  CLASSA_DIRECTION_NOT_APPLICABLE = 0,
  CLASSA_DIRECTION_DECREASING_IF_KAPPA0_POSITIVE = 1,
  CLASSA_DIRECTION_INCREASING_IF_KAPPA0_POSITIVE = 2,
} ClassaDirection;

/**
 * Monotonicity verdict of the numerical oracle.
 */
typedef enum ClassaVerdict {
  CLASSA_VERDICT_MONOTONE_DECREASING = 0,
  CLASSA_VERDICT_MONOTONE_INCREASING = 1,
  CLASSA_VERDICT_NON_MONOTONE = 2,
  CLASSA_VERDICT_DEGENERATE_LINE = 3,
} ClassaVerdict;

/**
 * Opaque curve handle.
 */
typedef struct ClassaCurve ClassaCurve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *classa_status_message(enum ClassaStatus status);

/**
 * Library version as a NUL-terminated string.
 */
const char *classa_version(void);

/**
 * Build a curve from a row-major 2×2 `matrix` (4 doubles), a `seed` edge
 * (2 doubles), an optional `base` point (2 doubles; NULL means the origin)
 * and a degree.
 */
enum ClassaStatus classa_curve_new(const double *matrix,
                                   const double *seed,
                                   const double *base,
                                   uint32_t degree,
                                   struct ClassaCurve **curve_out);

/**
 * Build a curve from a NUL-terminated `key = value` document.
 */
enum ClassaStatus classa_curve_from_document(const char *text, struct ClassaCurve **curve_out);

/**
 * Release a handle. NULL is ignored.
 */
void classa_curve_free(struct ClassaCurve *curve);

enum ClassaStatus classa_curve_degree(const struct ClassaCurve *curve, uint32_t *degree_out);

/**
 * Whether the curve is a straight segment (curvature identically zero).
 */
enum ClassaStatus classa_curve_is_degenerate(const struct ClassaCurve *curve, bool *flag_out);

/**
 * Write the `degree + 1` control points as interleaved `x, y` pairs.
 * `len_out` receives the number of doubles needed, also on `BufferTooSmall`.
 */
enum ClassaStatus classa_curve_control_points(const struct ClassaCurve *curve,
                                              double *buffer,
                                              size_t capacity,
                                              size_t *len_out);

/**
 * Point on the curve at `t ∈ [0, 1]`, written to 2 doubles.
 */
enum ClassaStatus classa_curve_point(const struct ClassaCurve *curve, double t, double *point_out);

/**
 * Signed curvature from the closed form.
 */
enum ClassaStatus classa_curve_kappa(const struct ClassaCurve *curve, double t, double *kappa_out);

/**
 * Derivative of the curvature with respect to `t`.
 */
enum ClassaStatus classa_curve_dkappa(const struct ClassaCurve *curve,
                                      double t,
                                      double *dkappa_out);

/**
 * Evaluate the six certificates in the order CaoWang, PositiveRealSeed,
 * Jordan, TypicalMineur, ComplexGeneral, ComplexDegree. Bit `i` of
 * `held_mask_out` is set when certificate `i` holds. `directions_out`, if
 * not NULL, receives `CLASSA_CERTIFICATE_COUNT` entries.
 */
enum ClassaStatus classa_curve_certify(const struct ClassaCurve *curve,
                                       uint32_t *held_mask_out,
                                       enum ClassaDirection *directions_out);

/**
 * Run the numerical oracle on `grid` samples (at least 101). A straight
 * segment reports `CLASSA_VERDICT_DEGENERATE_LINE` with status OK.
 * `extrema_out` may be NULL.
 */
enum ClassaStatus classa_curve_verdict(const struct ClassaCurve *curve,
                                       uint32_t grid,
                                       enum ClassaVerdict *verdict_out,
                                       size_t *extrema_out);

/**
 * Singular-value conditions for a row-major `dim × dim` matrix, `dim` 2 or 3:
 * `σ_min³ ≥ σ_max` and `σ_min² ≥ σ_max`.
 */
enum ClassaStatus classa_sv_conditions(const double *matrix,
                                       uint32_t dim,
                                       bool *corrected_out,
                                       bool *misprint_out);

/**
 * Minimum eigenvalue of the symmetric part of a row-major `dim × dim`
 * matrix; the expansion condition holds when it is at least 1.
 */
enum ClassaStatus classa_expansion_eigenvalue(const double *matrix,
                                              uint32_t dim,
                                              double *eigenvalue_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLASSA_H */
