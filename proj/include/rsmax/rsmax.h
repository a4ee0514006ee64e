// Copyright 2026 The rsmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to librsmax.
 *
 * Every function that can fail returns an rsm_status; on failure a
 * description is available from rsm_last_error() on the same thread until the
 * next call. Handles are opaque and owned by the caller, who releases them
 * with the matching *_free function (passing NULL is allowed). Handles are
 * immutable after creation and may be shared between threads.
 *
 * Spacetime points are double[4] = (x0, x1, x2, x3) with x0 = ct. Field
 * samples carry E and cB; the library works with c = 1 throughout.
 */

#ifndef RSMAX_RSMAX_H
#define RSMAX_RSMAX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RSMAX_BUILDING)
#    define RSM_API __declspec(dllexport)
#  else
#    define RSM_API __declspec(dllimport)
#  endif
#else
#  define RSM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define RSM_VERSION_MAJOR 0
#define RSM_VERSION_MINOR 1
#define RSM_VERSION_PATCH 0

typedef enum rsm_status {
  RSM_OK = 0,
  RSM_ERR_USAGE = 1,    /* bad argument, malformed text, precondition */
  RSM_ERR_DOMAIN = 2,   /* point outside the field's domain (cylinder axis) */
  RSM_ERR_NUMERIC = 3,  /* non-finite sample or failed numerical step */
  RSM_ERR_IO = 4,
  RSM_ERR_INTERNAL = 5
} rsm_status;

typedef enum rsm_seed_kind {
  RSM_SEED_REAL_PLANE = 0,
  RSM_SEED_COMPLEX_PLANE = 1,
  RSM_SEED_CYLINDRICAL = 2
} rsm_seed_kind;

typedef enum rsm_plane_variant { RSM_VARIANT_I = 1, RSM_VARIANT_II = 2 } rsm_plane_variant;

typedef struct rsm_complex {
  double re;
  double im;
} rsm_complex;

typedef struct rsm_field_sample {
  double E[3];
  double cB[3];
} rsm_field_sample;

typedef struct rsm_sources {
  double rho_e;
  double rho_m;
  double j_e[3];
  double j_m[3];
} rsm_sources;

typedef struct rsm_seed rsm_seed;
typedef struct rsm_basis rsm_basis;
typedef struct rsm_field rsm_field;
typedef struct rsm_invariants rsm_invariants;

RSM_API const char* rsm_last_error(void);
RSM_API const char* rsm_status_name(rsm_status status);
RSM_API const char* rsm_version(void);

/* ---- seeds ------------------------------------------------------------ */

/* k = (k0, k1, k2, k3) must be null to 1e-12 relative. */
RSM_API rsm_status rsm_seed_real_plane(double amplitude, const double k[4], rsm_seed** out);
RSM_API rsm_status rsm_seed_complex_plane(double amplitude, const double k[4], rsm_seed** out);
/* exp(i E x0) exp(i k z) exp(i m varphi) R(rho); needs E^2 >= k^2. */
RSM_API rsm_status rsm_seed_cylindrical(double amplitude, double frequency,
                                        double axial_wavenumber, int m, rsm_seed** out);
/* Flat "key = value" text: kind (real_plane | complex_plane | cylindrical),
 * A, k0..k3 or E, k, m. Unknown keys are ignored. */
RSM_API rsm_status rsm_seed_parse(const char* text, rsm_seed** out);
RSM_API void rsm_seed_free(rsm_seed* seed);

typedef struct rsm_seed_info {
  rsm_seed_kind kind;
  double amplitude;
  double k[4];            /* plane seeds */
  double frequency;       /* cylindrical: E */
  double axial_wavenumber;
  int m;
  double wave_scale;      /* k0 or |E| */
} rsm_seed_info;

RSM_API rsm_status rsm_seed_get_info(const rsm_seed* seed, rsm_seed_info* out);
RSM_API rsm_status rsm_seed_value(const rsm_seed* seed, const double x[4], rsm_complex* out);
/* Lowered gradient F_a = d_a Phi, a = 0..3. */
RSM_API rsm_status rsm_seed_gradient(const rsm_seed* seed, const double x[4], rsm_complex out[4]);
RSM_API rsm_status rsm_seed_kfg_residual(const rsm_seed* seed, const double x[4], double h,
                                         double* out);

/* ---- squaring --------------------------------------------------------- */

/* 4x4 formal matrix, row-major: out[4 * row + column], column c = Psi^c. */
RSM_API rsm_status rsm_formal_solutions(const rsm_seed* seed, const double x[4],
                                        rsm_complex out[16]);
RSM_API rsm_status rsm_combine(const rsm_seed* seed, const rsm_complex lambda[4],
                               const double x[4], rsm_complex out[4]);

/* ---- physicality ------------------------------------------------------ */

typedef struct rsm_solve_options {
  double tol_rank;   /* <= 0 selects the default 1e-9 */
  int sample_count;  /* <= 0 selects the default 32 */
} rsm_solve_options;

typedef struct rsm_basis_info {
  int nullity;       /* real dimensions */
  int kernel_dim;
  int dim_physical;
  int all_zero;
  int rank_ambiguous;
  int singular_value_count;
  double tol_rank;
} rsm_basis_info;

/* options may be NULL. */
RSM_API rsm_status rsm_solve(const rsm_seed* seed, const rsm_solve_options* options,
                             rsm_basis** out);
RSM_API void rsm_basis_free(rsm_basis* basis);
RSM_API rsm_status rsm_basis_get_info(const rsm_basis* basis, rsm_basis_info* out);
RSM_API rsm_status rsm_basis_physical(const rsm_basis* basis, int index, rsm_complex out[4]);
RSM_API rsm_status rsm_basis_kernel(const rsm_basis* basis, int index, rsm_complex out[4]);
/* Writes min(capacity, count) values, descending. */
RSM_API rsm_status rsm_basis_singular_values(const rsm_basis* basis, double* out, int capacity);

RSM_API rsm_status rsm_cylindrical_ray(double frequency, double axial_wavenumber,
                                       rsm_complex out[4]);
RSM_API rsm_status rsm_dependence_determinant(const double n[3], const double a[3],
                                              const double b[3], double* out);

/* ---- fields ----------------------------------------------------------- */

RSM_API rsm_status rsm_field_from_seed(const rsm_seed* seed, const rsm_complex lambda[4],
                                       rsm_field** out);
RSM_API rsm_status rsm_field_plane_z(rsm_plane_variant variant, double k0, double amplitude,
                                     rsm_field** out);
RSM_API rsm_status rsm_field_plane_general(rsm_plane_variant variant, const double n[3],
                                           double k0, double amplitude, rsm_field** out);
RSM_API rsm_status rsm_field_plane_lc(const double n[3], const double a[3], const double b[3],
                                      double k0, double amplitude, rsm_field** out);
RSM_API rsm_status rsm_field_cylindrical(double frequency, double axial_wavenumber, int m,
                                         rsm_complex lambda3, double amplitude,
                                         rsm_field** out);
/* E_2 sign flipped. */
RSM_API rsm_status rsm_field_corrupted(const rsm_field* base, rsm_field** out);
RSM_API rsm_status rsm_field_dual(const rsm_field* base, rsm_field** out);
RSM_API rsm_status rsm_field_phase(const rsm_field* base, double chi, rsm_field** out);
RSM_API void rsm_field_free(rsm_field* field);

RSM_API double rsm_field_wave_scale(const rsm_field* field);
/* RSM_ERR_DOMAIN on the cylinder axis. */
RSM_API rsm_status rsm_field_eval(const rsm_field* field, const double x[4],
                                  rsm_field_sample* out);

/* ---- verification ----------------------------------------------------- */

typedef struct rsm_residual_report {
  double div_E;               /* absolute values */
  double div_cB;
  double curl_E_plus_dt_cB;   /* vector norms */
  double curl_cB_minus_dt_E;
  double max_residual;
  double scale;
  double relative;
  double h;
  double signed_div_E;
  double signed_div_cB;
  double faraday[3];          /* curl E + d0 cB - j_m */
  double ampere[3];           /* curl cB - d0 E - j_e */
} rsm_residual_report;

/* sources may be NULL (vacuum). */
RSM_API rsm_status rsm_verify(const rsm_field* field, const double x[4], double h,
                              const rsm_sources* sources, rsm_residual_report* out);

typedef struct rsm_convergence {
  double slope;       /* NaN when floor_limited */
  int floor_limited;
} rsm_convergence;

RSM_API rsm_status rsm_convergence_order(const rsm_field* field, const double x[4],
                                         const double* steps, int count, rsm_convergence* out);

/* Matrix-operator residual of the RS column (0, E + i cB), same stencil. */
RSM_API rsm_status rsm_matrix_residual(const rsm_field* field, const double x[4], double h,
                                       rsm_complex out[4]);

/* ---- dual, phase, polarization ---------------------------------------- */

RSM_API rsm_status rsm_dual_transform(const rsm_field_sample* in, rsm_field_sample* out);
RSM_API rsm_status rsm_phase_transform(const rsm_field_sample* in, double chi,
                                       rsm_field_sample* out);
RSM_API rsm_status rsm_dual_transform_sources(const rsm_sources* in, rsm_sources* out);

typedef struct rsm_polarization {
  double e_dot_cb;
  double energy_difference;  /* |E|^2 - |cB|^2 */
  double poynting[3];        /* unit E x cB, zero when undefined */
  int direction_defined;
  int has_direction;         /* set when n was supplied */
  double e_dot_n;
  double cb_dot_n;
} rsm_polarization;

/* n may be NULL. */
RSM_API rsm_status rsm_polarization_report(const rsm_field_sample* sample, const double* n,
                                           rsm_polarization* out);

/* ---- property suite --------------------------------------------------- */

/* Runs the checks listed in ids (all of them when count is 0). */
RSM_API rsm_status rsm_invariants_run(uint64_t seed, const int* ids, int count,
                                      rsm_invariants** out);
RSM_API void rsm_invariants_free(rsm_invariants* suite);
RSM_API int rsm_invariants_count(const rsm_invariants* suite);
/* Strings stay valid until the suite is freed. */
RSM_API rsm_status rsm_invariants_get(const rsm_invariants* suite, int index, int* id,
                                      int* passed, const char** title, const char** detail);
RSM_API int rsm_invariants_failure_count(const rsm_invariants* suite, int index);
RSM_API const char* rsm_invariants_failure(const rsm_invariants* suite, int index, int j);

#ifdef __cplusplus
}
#endif

#endif /* RSMAX_RSMAX_H */
