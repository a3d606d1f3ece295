/*
 * Copyright 2026 The rdft Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to librdft.
 *
 * Every function returns an rdft_status. On failure a description of the
 * last error on the calling thread is available from rdft_last_error().
 * Strings returned through char** are owned by the caller and released with
 * rdft_free_string(). Handles are released with the matching *_destroy().
 */

#ifndef RDFT_RDFT_H
#define RDFT_RDFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(RDFT_BUILDING_LIBRARY)
#define RDFT_API __attribute__((visibility("default")))
#else
#define RDFT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdft_status {
  RDFT_OK = 0,
  RDFT_INVALID_ARGUMENT = 1,
  RDFT_DOMAIN = 2,
  RDFT_NUMERICAL = 3,
  RDFT_PARSE = 4,
  RDFT_INTERNAL = 5
} rdft_status;

typedef struct rdft_grid_function rdft_grid_function;
typedef struct rdft_spectrum rdft_spectrum;
typedef struct rdft_kernel rdft_kernel;

/* Description of the last failure on this thread ("" if none). */
RDFT_API const char* rdft_last_error(void);
RDFT_API void rdft_free_string(char* s);
RDFT_API const char* rdft_version(void);

/* Grid functions. values are interleaved (re, im) pairs, canonical order. */
RDFT_API rdft_status rdft_grid_function_create(int n, const double* interleaved, rdft_grid_function** out);
RDFT_API rdft_status rdft_grid_function_from_json(const char* json, rdft_grid_function** out);
RDFT_API rdft_status rdft_grid_function_to_json(const rdft_grid_function* f, char** json);
RDFT_API int rdft_grid_function_size(const rdft_grid_function* f);
/* Copies 2N doubles into interleaved. */
RDFT_API rdft_status rdft_grid_function_values(const rdft_grid_function* f, double* interleaved);
RDFT_API void rdft_grid_function_destroy(rdft_grid_function* f);

RDFT_API rdft_status rdft_dft(const rdft_grid_function* f, rdft_grid_function** out);
RDFT_API rdft_status rdft_idft(const rdft_grid_function* f, rdft_grid_function** out);

/* Dimension of C_a from the rank oracle. */
RDFT_API rdft_status rdft_dim_ca(int n, int a, int* dim);

/* Spectral data of J for a >= (N-2)/4. */
RDFT_API rdft_status rdft_spectrum_create(int n, int a, rdft_spectrum** out);
RDFT_API void rdft_spectrum_destroy(rdft_spectrum* s);
/* r = 4a+2-N simple modes and s = N-2a-1 doubled pairs. */
RDFT_API rdft_status rdft_spectrum_counts(const rdft_spectrum* s, int* simple, int* doubled);
/* Counts of (sqrt N, -i sqrt N, -sqrt N, i sqrt N) among the simple modes. */
RDFT_API rdft_status rdft_spectrum_multiplicities(const rdft_spectrum* s, int counts[4]);
RDFT_API rdft_status rdft_spectrum_to_json(int n, int a, char** json);

/* Multiplicity rows for a in [a_min, a_max] as CSV with a header line. */
RDFT_API rdft_status rdft_multiplicity_table_csv(int n, int a_min, int a_max, char** csv);
/* Closed-form multiplicities for comparison. */
RDFT_API rdft_status rdft_multiplicity_closed_form(int n, int a, int counts[4]);

RDFT_API rdft_status rdft_basis_to_json(int n, int a, char** json);
RDFT_API rdft_status rdft_lowdim_to_json(int n, char** json);

/* Interpolation kernel (v_y, w_y) for a >= (N-2)/4. */
RDFT_API rdft_status rdft_kernel_create(int n, int a, rdft_kernel** out);
RDFT_API void rdft_kernel_destroy(rdft_kernel* k);
RDFT_API rdft_status rdft_kernel_condition(const rdft_kernel* k, double* condition);
RDFT_API rdft_status rdft_kernel_to_json(const rdft_kernel* k, char** json);
/*
 * f_inside and f_hat_inside hold 2a+1 interleaved samples ordered -a..a.
 * Writes the full function (canonical order) to out.
 */
RDFT_API rdft_status rdft_kernel_reconstruct(const rdft_kernel* k, const double* f_inside,
                                             const double* f_hat_inside, rdft_grid_function** out);
/*
 * Same from JSON documents: each is either a full grid function or
 * {"N", "a", "values"} with 2a+1 entries ordered -a..a.
 */
RDFT_API rdft_status rdft_reconstruct_json(int n, int a, const char* f_json, const char* f_hat_json,
                                           char** json);

/* theta(x, tau) on Z/NZ and its tau-derivative of the given order. */
RDFT_API rdft_status rdft_theta(int n, double x, double tau_re, double tau_im, int order, double* re,
                                double* im);
/* JSON report of the theta checks; taus are interleaved (re, im). */
RDFT_API rdft_status rdft_theta_check_to_json(int n, int a, const double* taus, size_t tau_count,
                                              char** json);

typedef struct rdft_verify_options {
  int n_min;
  int n_max;
  int a; /* -1 for every valid a */
  uint64_t seed;
  double tol_scale;
  int inject_fault;
  int threads;
} rdft_verify_options;

RDFT_API void rdft_verify_options_init(rdft_verify_options* options);
/* passed is set to 1 iff every asserted check passed. */
RDFT_API rdft_status rdft_verify(const rdft_verify_options* options, int* passed, char** json);

#ifdef __cplusplus
}
#endif

#endif /* RDFT_RDFT_H */
