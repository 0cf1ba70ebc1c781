/* C interface for the gapzeta numerical semigroup library. */

#ifndef GAPZETA_H
#define GAPZETA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which identity a report verifies.
typedef enum GzIdentityKind {
  GZ_IDENTITY_KIND_DUAL = 0,
  GZ_IDENTITY_KIND_GAPS = 1,
} GzIdentityKind;

// Outcome of a C ABI call. Everything except `Ok` leaves out-pointers
// untouched.
typedef enum GzStatus {
  GZ_STATUS_OK = 0,
  // A required pointer argument was null.
  GZ_STATUS_NULL_POINTER = 1,
  // A generator was below 2.
  GZ_STATUS_GENERATOR_TOO_SMALL = 2,
  // The generators share a factor.
  GZ_STATUS_NOT_COPRIME = 3,
  // An argument was outside the supported domain (exponent, z, tolerance).
  GZ_STATUS_DOMAIN = 4,
  // The result does not fit the fixed-width output type.
  GZ_STATUS_OVERFLOW = 5,
  // The caller's buffer is shorter than the result.
  GZ_STATUS_BUFFER_TOO_SMALL = 6,
  // The request would enumerate more gaps than the built-in cap.
  GZ_STATUS_TOO_LARGE = 7,
  // An internal invariant failed; treat as a bug in this library.
  GZ_STATUS_INTERNAL = 8,
} GzStatus;

// Generator-order choice for the zeta closed form.
typedef enum GzVariant {
  GZ_VARIANT_A = 0,
  GZ_VARIANT_B = 1,
} GzVariant;

// Opaque two-generator semigroup handle.
typedef struct GzSemigroup GzSemigroup;

// One verified identity instance, mirroring the library report.
typedef struct GzIdentityReport {
  uint64_t d1;
  uint64_t d2;
  uint32_t n;
  enum GzIdentityKind kind;
  double lhs;
  double rhs;
  double residual;
  double budget;
  bool passed;
} GzIdentityReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a semigroup from two coprime generators, both at least 2.
//
// # Safety
// `out` must be a valid pointer. On `Ok` it receives a handle that must
// eventually be released with `gz_semigroup_free`.
enum GzStatus gz_semigroup_new(uint64_t d1, uint64_t d2, struct GzSemigroup **out);

// Releases a handle. Null is accepted and ignored.
//
// # Safety
// `handle` must be null or come from `gz_semigroup_new`, and must not be
// used afterwards.
void gz_semigroup_free(struct GzSemigroup *handle);

// Writes the Frobenius number (largest gap).
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_frobenius(const struct GzSemigroup *handle, uint64_t *out);

// Writes the conductor (Frobenius number plus one).
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_conductor(const struct GzSemigroup *handle, uint64_t *out);

// Writes the genus (number of gaps).
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_genus(const struct GzSemigroup *handle, uint64_t *out);

// Writes whether `x` belongs to the semigroup.
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_is_member(const struct GzSemigroup *handle, uint64_t x, bool *out);

// Writes the number of gaps, i.e. the length `gz_gaps` needs.
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_gap_count(const struct GzSemigroup *handle, size_t *out);

// Copies the sorted gap list into `buffer` and writes the count to
// `written`. Fails with `BufferTooSmall` when `capacity` is short; query
// `gz_gap_count` first.
//
// # Safety
// `handle` must be a live handle; `buffer` must be valid for `capacity`
// writes; `written` must be valid for writes.
enum GzStatus gz_gaps(const struct GzSemigroup *handle,
                      uint64_t *buffer,
                      size_t capacity,
                      size_t *written);

// Writes the float rendering of the exact gap sum over 1/g^n (n >= 1).
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_g_minus_n_direct(const struct GzSemigroup *handle, uint32_t n, double *out);

// Allocates the exact gap sum over 1/g^n as a NUL-terminated "p/q"
// string. The caller owns the string and must release it with
// `gz_string_free`.
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_g_minus_n_exact(const struct GzSemigroup *handle, uint32_t n, char **out);

// Writes the n = 1 gap sum evaluated by the closed finite form, which
// needs no gap enumeration.
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_g_minus_1_finite(const struct GzSemigroup *handle, double *out);

// Evaluates the Hurwitz-zeta closed form of the gap sum (n >= 2) and
// writes the value and its certified absolute error bound.
//
// # Safety
// `handle` must be a live handle; `out_value` and `out_bound` must be
// valid for writes.
enum GzStatus gz_g_minus_n_zeta(const struct GzSemigroup *handle,
                                uint32_t n,
                                enum GzVariant variant,
                                double *out_value,
                                double *out_bound);

// Writes the complementary series over nonzero members, zeta(n) minus the
// gap sum, with its error bound.
//
// # Safety
// `handle` must be a live handle; `out_value` and `out_bound` must be
// valid for writes.
enum GzStatus gz_big_g_minus_n(const struct GzSemigroup *handle,
                               uint32_t n,
                               double *out_value,
                               double *out_bound);

// Writes the weighted gap generating function: the sum of z^g / g^n over
// gaps, for z in [0, 1].
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_psi_n(const struct GzSemigroup *handle, uint32_t n, double z, double *out);

// Writes the same function evaluated by the three-series rearrangement,
// which needs no gap enumeration; z must lie in [0, 1).
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_psi_n_series_form(const struct GzSemigroup *handle,
                                   uint32_t n,
                                   double z,
                                   double *out);

// Writes the Hilbert series of the semigroup at z in [0, 1).
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_hilbert_series(const struct GzSemigroup *handle, double z, double *out);

// Writes the gap generating function, the sum of z^g over gaps, at z in
// [0, 1].
//
// # Safety
// `handle` must be a live handle; `out` must be valid for writes.
enum GzStatus gz_gap_generating_function(const struct GzSemigroup *handle, double z, double *out);

// Evaluates the Hurwitz zeta function at integer exponent n >= 2 and
// q > 0, writing the value and its certified absolute error bound.
//
// # Safety
// `out_value` and `out_bound` must be valid for writes.
enum GzStatus gz_hurwitz_zeta(uint32_t n, double q, double *out_value, double *out_bound);

// Evaluates the Riemann zeta function at integer exponent n >= 2.
//
// # Safety
// `out_value` and `out_bound` must be valid for writes.
enum GzStatus gz_riemann_zeta(uint32_t n, double *out_value, double *out_bound);

// Verifies the generator-duality identity for the pair at exponent n and
// fills the report. A non-positive `tolerance` selects the default
// (1e-12).
//
// # Safety
// `out` must be valid for writes.
enum GzStatus gz_verify_dual(uint64_t d1,
                             uint64_t d2,
                             uint32_t n,
                             double tolerance,
                             struct GzIdentityReport *out);

// Verifies the gap-sum zeta identity for the pair at exponent n and fills
// the report. A non-positive `tolerance` selects the default (1e-12).
//
// # Safety
// `out` must be valid for writes.
enum GzStatus gz_verify_gaps(uint64_t d1,
                             uint64_t d2,
                             uint32_t n,
                             double tolerance,
                             struct GzIdentityReport *out);

// Releases a string returned by this library. Null is accepted and
// ignored.
//
// # Safety
// `ptr` must be null or a string obtained from this library, and must not
// be used afterwards.
void gz_string_free(char *ptr);

// Returns the library version as a static NUL-terminated string. Do not
// free it.
const char *gz_version(void);

// Returns a static human-readable name for a status code. Do not free it.
const char *gz_status_name(enum GzStatus status);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GAPZETA_H */
