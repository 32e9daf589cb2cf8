/* C interface for the simplex-sampling library. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum SxsStatus {
  SXS_STATUS_OK = 0,
  SXS_STATUS_NULL_POINTER = 1,
  /**
   * A precondition on the arguments was violated.
   */
  SXS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The rejection sampler ran out of trials.
   */
  SXS_STATUS_BUDGET_EXCEEDED = 3,
  /**
   * The output buffer cannot hold the requested points.
   */
  SXS_STATUS_BUFFER_TOO_SMALL = 4,
} SxsStatus;

/**
 * Generator selector; mirrors the library's sampler set.
 */
typedef enum SxsMethod {
  SXS_METHOD_STICK_BREAKING = 0,
  SXS_METHOD_REJECTION_CUBE = 1,
  SXS_METHOD_SORTED_SPACINGS = 2,
  SXS_METHOD_EXPONENTIAL_NORMALIZE = 3,
  /**
   * Negative control; not uniform on the simplex.
   */
  SXS_METHOD_RESCALED_UNIFORMS = 4,
} SxsMethod;

/**
 * Exponent family for the sequential sampler.
 */
typedef enum SxsModel {
  /**
   * Step-dependent exponents; exactly uniform output.
   */
  SXS_MODEL_CORRECTED = 0,
  /**
   * Constant-exponent variant kept as a negative control.
   */
  SXS_MODEL_PAPER_LITERAL = 1,
} SxsModel;

/**
 * Opaque sampler: a method/model/dimension triple bound to a seeded
 * deterministic stream.
 */
typedef struct SxsSampler SxsSampler;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a sampler. On success writes the new handle to `out_sampler`;
 * release it with `sxs_sampler_free`.
 *
 * # Safety
 * `out_sampler` must be a valid pointer to writable memory.
 */
enum SxsStatus sxs_sampler_new(enum SxsMethod method,
                               enum SxsModel model,
                               uintptr_t n,
                               uint64_t seed,
                               struct SxsSampler **out_sampler);

/**
 * Destroy a sampler created by `sxs_sampler_new`. A null handle is a no-op.
 *
 * # Safety
 * `sampler` must be null or a handle from `sxs_sampler_new` that has not
 * been freed yet.
 */
void sxs_sampler_free(struct SxsSampler *sampler);

/**
 * Dimension of the points this sampler produces; 0 for a null handle.
 *
 * # Safety
 * `sampler` must be null or a live handle.
 */
uintptr_t sxs_sampler_dimension(const struct SxsSampler *sampler);

/**
 * Uniform draws consumed so far; 0 for a null handle.
 *
 * # Safety
 * `sampler` must be null or a live handle.
 */
uint64_t sxs_sampler_draw_count(const struct SxsSampler *sampler);

/**
 * Fractional-power evaluations performed so far; 0 for a null handle.
 *
 * # Safety
 * `sampler` must be null or a live handle.
 */
uint64_t sxs_sampler_power_count(const struct SxsSampler *sampler);

/**
 * Draw `n_points` points into `out`, row-major (`n` doubles per point).
 * `out_len` is the capacity of `out` in doubles and must be at least
 * `n_points * n`.
 *
 * # Safety
 * `sampler` must be a live handle and `out` must point to at least
 * `out_len` writable doubles.
 */
enum SxsStatus sxs_sampler_fill(struct SxsSampler *sampler,
                                double *out,
                                uintptr_t out_len,
                                uintptr_t n_points);

/**
 * Density of the step-`j` marginal at `x` given remaining mass `r`.
 *
 * # Safety
 * `out` must be a valid pointer to a writable double.
 */
enum SxsStatus sxs_marginal_pdf(enum SxsModel model,
                                uintptr_t n,
                                uintptr_t j,
                                double r,
                                double x,
                                double *out);

/**
 * Cumulative distribution of the step-`j` marginal.
 *
 * # Safety
 * `out` must be a valid pointer to a writable double.
 */
enum SxsStatus sxs_marginal_cdf(enum SxsModel model,
                                uintptr_t n,
                                uintptr_t j,
                                double r,
                                double x,
                                double *out);

/**
 * Inverse CDF of the step-`j` marginal at `xi` in `[0, 1)`.
 *
 * # Safety
 * `out` must be a valid pointer to a writable double.
 */
enum SxsStatus sxs_inverse_cdf(enum SxsModel model,
                               uintptr_t n,
                               uintptr_t j,
                               double r,
                               double xi,
                               double *out);

/**
 * Library version as a static C string.
 */
const char *sxs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
