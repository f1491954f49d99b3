// Copyright 2026 The specbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the specbound library.
 *
 * Every function returns an sb_status. On failure the message of the most
 * recent error on the calling thread is available from sb_last_error().
 * Objects are opaque handles released with the matching *_destroy function;
 * strings returned through char** are released with sb_string_free.
 * Array outputs are caller-allocated and sized as documented.
 */
#ifndef SPECBOUND_SPECBOUND_H_
#define SPECBOUND_SPECBOUND_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SB_API __declspec(dllexport)
#else
#define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_INVALID_ARGUMENT = 1,
  SB_GRID_MISMATCH = 2,
  SB_ALIASING = 3,
  SB_TOEPLITZ_NOT_PD = 4,
  SB_NON_POSITIVE_Q = 5,
  SB_NON_POSITIVE_DENSITY = 6,
  SB_MAX_ITERATIONS = 7,
  SB_BOUNDARY_APPROACH = 8,
  SB_NO_INTERIOR_SOLUTION = 9,
  SB_EMPTY_FEASIBLE_BOX = 10,
  SB_NEGATIVE_KL = 11,
  SB_NEGATIVE_MU = 12,
  SB_NON_STATIONARY_MODEL = 13,
  SB_ORDER_TOO_LARGE = 14,
  SB_UNKNOWN_DISTRIBUTION = 15,
  SB_INVALID_MOMENTS = 16,
  SB_OUT_OF_MEMORY = 100,
  SB_INTERNAL = 101
} sb_status;

typedef struct sb_grid sb_grid;
typedef struct sb_density sb_density;
typedef struct sb_assessment sb_assessment;
typedef struct sb_report sb_report;
typedef struct sb_basis sb_basis;
typedef struct sb_multi_grid sb_multi_grid;
typedef struct sb_multi_density sb_multi_density;

typedef struct sb_solver_options {
  double tolerance;   /* Newton stops at gradient <= tolerance * r0 */
  int max_iterations;
  double step_tol;    /* box search coordinate tolerance */
} sb_solver_options;

SB_API const char* sb_version(void);
SB_API const char* sb_status_name(sb_status status);
/* 1 for MaxIterations, BoundaryApproach, NoInteriorSolution, NegativeKL. */
SB_API int sb_status_is_solver_failure(sb_status status);
SB_API const char* sb_last_error(void);
SB_API void sb_string_free(char* text);
SB_API void sb_solver_options_default(sb_solver_options* options);

/* Grid theta_j = -pi + 2 pi j / size, size >= 4. */
SB_API sb_status sb_grid_create(size_t size, sb_grid** out);
SB_API void sb_grid_destroy(sb_grid* grid);
SB_API size_t sb_grid_size(const sb_grid* grid);
SB_API sb_status sb_grid_nodes(const sb_grid* grid, double* out);

SB_API sb_status sb_density_create(const sb_grid* grid, const double* values, size_t count,
                                   sb_density** out);
SB_API void sb_density_destroy(sb_density* density);
SB_API size_t sb_density_size(const sb_density* density);
SB_API sb_status sb_density_values(const sb_density* density, double* out);
/* JSON description of how the density was produced ({} for raw values). */
SB_API sb_status sb_density_summary_json(const sb_density* density, char** out);

/* lags: r_0..r_order (count = order + 1); prior: P coefficients. */
SB_API sb_status sb_estimate(const sb_grid* grid, const double* lags, size_t count,
                             const double* prior, size_t prior_count,
                             const sb_solver_options* options, sb_density** out);
SB_API sb_status sb_maxent(const sb_grid* grid, const double* lags, size_t count,
                           const sb_solver_options* options, sb_density** out);
SB_API sb_status sb_maxent_box(const sb_grid* grid, const double* lower, const double* upper,
                               size_t count, const sb_solver_options* options,
                               sb_density** out);

/* out holds order + 1 values. */
SB_API sb_status sb_compute_lags(const sb_density* density, size_t order, double* out);
SB_API sb_status sb_cepstrum(const sb_density* density, size_t order, double* out);
SB_API sb_status sb_entropy(const sb_density* density, double* out);
SB_API sb_status sb_kl_divergence(const sb_density* p, const sb_density* q, double* out);
SB_API sb_status sb_tv_distance(const sb_density* p, const sb_density* q, double* out);
SB_API sb_status sb_toeplitz_positive_definite(const double* lags, size_t count, int* out);
SB_API sb_status sb_tv_from_kl(double kl, double* out);

/* Models are JSON: {"kind": "white"|"ar"|"ma"|"arma", "ar": [..], "ma": [..],
 * "variance": v}. */
SB_API sb_status sb_model_spectrum(const char* model_json, const sb_grid* grid,
                                   sb_density** out);
SB_API sb_status sb_model_autocovariance(const char* model_json, size_t order, double* out);
/* Writes `length` values. */
SB_API sb_status sb_simulate(const char* model_json, size_t length, uint64_t seed, double* out);
SB_API sb_status sb_model_id(const char* model_json, char** out);
SB_API sb_status sb_estimate_lags(const double* series, size_t length, size_t order,
                                  double* out);

/* Interval-probability assessments of a lag box (count = order + 1). */
SB_API sb_status sb_assessment_marginal(const char* model_json, const double* lower,
                                        const double* upper, size_t count, size_t n_samples,
                                        sb_assessment** out);
SB_API sb_status sb_assessment_moment(const double* series, size_t length, const double* lower,
                                      const double* upper, size_t count, sb_assessment** out);
SB_API sb_status sb_assessment_monte_carlo(const char* model_json, const double* lower,
                                           const double* upper, size_t count, size_t n_samples,
                                           size_t trials, uint64_t seed, sb_assessment** out);
SB_API void sb_assessment_destroy(sb_assessment* assessment);
SB_API double sb_assessment_product(const sb_assessment* assessment);
SB_API sb_status sb_assessment_json(const sb_assessment* assessment, char** out);

SB_API sb_status sb_noise_bound(const sb_grid* grid, const double* clean, const double* noise,
                                size_t count, const double* prior, size_t prior_count,
                                const sb_solver_options* options, sb_report** out);
SB_API sb_status sb_finite_sample_bound(const sb_grid* grid, const double* lower,
                                        const double* upper, const double* clean, size_t count,
                                        const sb_assessment* assessment,
                                        const sb_solver_options* options, sb_report** out);
/* assessment may be NULL (probability level 1 with a caveat). */
SB_API sb_status sb_kl_lower_bound(const sb_density* true_density, const double* lower,
                                   const double* upper, size_t count,
                                   const sb_assessment* assessment, sb_report** out);
SB_API void sb_report_destroy(sb_report* report);
SB_API double sb_report_bound_value(const sb_report* report);
SB_API double sb_report_probability_level(const sb_report* report);
SB_API sb_status sb_report_json(const sb_report* report, char** out);

/* Monte Carlo validation driven by a JSON scenario. document: validation
 * JSON; trials_csv: one row per trial; breach: 1 when the violation rate
 * exceeds the allowance. */
SB_API sb_status sb_validate(const char* scenario_json, char** document, char** trials_csv,
                             int* breach);

/* Multivariate (dimension <= 2). exponents is count x dimension, row-major;
 * row 0 must be all zeros. */
SB_API sb_status sb_basis_create(const int* exponents, size_t count, size_t dimension,
                                 sb_basis** out);
SB_API void sb_basis_destroy(sb_basis* basis);
SB_API size_t sb_basis_size(const sb_basis* basis);
SB_API sb_status sb_multi_grid_create(size_t dimension, size_t axis_size, sb_multi_grid** out);
SB_API void sb_multi_grid_destroy(sb_multi_grid* grid);
SB_API size_t sb_multi_grid_size(const sb_multi_grid* grid);
/* Per-axis angles of every flattened node, size x dimension, row-major. */
SB_API sb_status sb_multi_grid_nodes(const sb_multi_grid* grid, double* out);

SB_API sb_status sb_multi_density_create(const sb_multi_grid* grid, const double* values,
                                         size_t count, sb_multi_density** out);
SB_API void sb_multi_density_destroy(sb_multi_density* density);
SB_API size_t sb_multi_density_size(const sb_multi_density* density);
SB_API sb_status sb_multi_density_values(const sb_multi_density* density, double* out);
SB_API sb_status sb_multi_density_summary_json(const sb_multi_density* density, char** out);

/* out holds sb_basis_size values. */
SB_API sb_status sb_multi_moments(const sb_multi_density* density, const sb_basis* basis,
                                  double* out);
/* prior_basis may be NULL for P = 1. */
SB_API sb_status sb_multi_estimate(const sb_multi_grid* grid, const sb_basis* basis,
                                   const double* moments, const sb_basis* prior_basis,
                                   const double* prior, const sb_solver_options* options,
                                   sb_multi_density** out);
SB_API sb_status sb_multi_maxent(const sb_multi_grid* grid, const sb_basis* basis,
                                 const double* moments, const sb_solver_options* options,
                                 sb_multi_density** out);
SB_API sb_status sb_multi_entropy(const sb_multi_density* density, double* out);
SB_API sb_status sb_multi_kl_divergence(const sb_multi_density* p, const sb_multi_density* q,
                                        double* out);
SB_API sb_status sb_multi_tv_distance(const sb_multi_density* p, const sb_multi_density* q,
                                      double* out);
/* models_json: array with one model per axis. */
SB_API sb_status sb_multi_model_spectrum(const char* models_json, const sb_multi_grid* grid,
                                         sb_multi_density** out);
/* Writes length x dimension values, row-major. */
SB_API sb_status sb_multi_simulate(const char* models_json, size_t length, uint64_t seed,
                                   double* out);
SB_API sb_status sb_multi_estimate_moments(const double* series, size_t length,
                                           size_t dimension, const sb_basis* basis, double* out);
SB_API sb_status sb_multi_assessment_moment(const double* series, size_t length,
                                            size_t dimension, const sb_basis* basis,
                                            const double* lower, const double* upper,
                                            sb_assessment** out);
SB_API sb_status sb_multi_assessment_monte_carlo(const char* models_json, const sb_basis* basis,
                                                 const double* lower, const double* upper,
                                                 size_t n_samples, size_t trials, uint64_t seed,
                                                 sb_assessment** out);
SB_API sb_status sb_multi_noise_bound(const sb_multi_grid* grid, const sb_basis* basis,
                                      const double* clean, const double* noise,
                                      const sb_basis* prior_basis, const double* prior,
                                      const sb_solver_options* options, sb_report** out);
SB_API sb_status sb_multi_finite_sample_bound(const sb_multi_grid* grid, const sb_basis* basis,
                                              const double* lower, const double* upper,
                                              const double* clean,
                                              const sb_assessment* assessment,
                                              const sb_solver_options* options,
                                              sb_report** out);
SB_API sb_status sb_multi_kl_lower_bound(const sb_multi_density* true_density,
                                         const sb_basis* basis, const double* lower,
                                         const double* upper, const sb_assessment* assessment,
                                         sb_report** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECBOUND_SPECBOUND_H_ */
