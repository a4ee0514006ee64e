/* Copyright 2026 The rsmax Authors
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

/* Plain C client of the shared library. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "rsmax/rsmax.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void test_errors(void) {
  rsm_seed* seed = NULL;
  const double k_bad[4] = {1.0, 0.0, 0.0, 2.0};
  EXPECT(rsm_seed_real_plane(1.0, k_bad, &seed) == RSM_ERR_USAGE);
  EXPECT(seed == NULL);
  EXPECT(strlen(rsm_last_error()) > 0);
  EXPECT(rsm_seed_real_plane(1.0, NULL, &seed) == RSM_ERR_USAGE);
  EXPECT(rsm_seed_cylindrical(1.0, 1.0, 2.0, 0, &seed) == RSM_ERR_USAGE);
  EXPECT(rsm_seed_parse("kind = bogus\n", &seed) == RSM_ERR_USAGE);
  EXPECT(strcmp(rsm_status_name(RSM_ERR_DOMAIN), "domain error") == 0);
  EXPECT(strcmp(rsm_status_name((rsm_status)42), "unknown status") == 0);
  EXPECT(strcmp(rsm_version(), "0.1.0") == 0);

  /* Success clears the error string. */
  const double k[4] = {1.0, 0.0, 0.0, 1.0};
  EXPECT(rsm_seed_real_plane(1.0, k, &seed) == RSM_OK);
  EXPECT(strlen(rsm_last_error()) == 0);
  rsm_seed_free(seed);

  rsm_seed_free(NULL);
  rsm_basis_free(NULL);
  rsm_field_free(NULL);
  rsm_invariants_free(NULL);
}

static void test_z_seed(void) {
  rsm_seed* seed = NULL;
  EXPECT(rsm_seed_parse("kind = real_plane\nA = 1\nk0 = 1\nk1 = 0\nk2 = 0\nk3 = 1\n",
                        &seed) == RSM_OK);
  rsm_seed_info info;
  EXPECT(rsm_seed_get_info(seed, &info) == RSM_OK);
  EXPECT(info.kind == RSM_SEED_REAL_PLANE);
  EXPECT(info.wave_scale == 1.0);

  rsm_basis* basis = NULL;
  EXPECT(rsm_solve(seed, NULL, &basis) == RSM_OK);
  rsm_basis_info bi;
  EXPECT(rsm_basis_get_info(basis, &bi) == RSM_OK);
  EXPECT(bi.nullity == 6);
  EXPECT(bi.kernel_dim == 4);
  EXPECT(bi.dim_physical == 2);
  rsm_complex l[4];
  EXPECT(rsm_basis_physical(basis, 0, l) == RSM_OK);
  EXPECT(rsm_basis_physical(basis, 2, l) == RSM_ERR_USAGE);
  double sv[8];
  EXPECT(rsm_basis_singular_values(basis, sv, 8) == RSM_OK);
  EXPECT(sv[0] > 0.0);
  rsm_basis_free(basis);

  /* lambda = e1 gives variant I: at the origin E = (0, -1, 0), cB = (1, 0, 0). */
  rsm_complex e1[4] = {{0, 0}, {1, 0}, {0, 0}, {0, 0}};
  rsm_field* f = NULL;
  EXPECT(rsm_field_from_seed(seed, e1, &f) == RSM_OK);
  const double o[4] = {0, 0, 0, 0};
  rsm_field_sample s;
  EXPECT(rsm_field_eval(f, o, &s) == RSM_OK);
  EXPECT(s.E[0] == 0.0 && s.E[1] == -1.0 && s.E[2] == 0.0);
  EXPECT(s.cB[0] == 1.0 && s.cB[1] == 0.0 && s.cB[2] == 0.0);

  rsm_field* z = NULL;
  EXPECT(rsm_field_plane_z(RSM_VARIANT_I, 1.0, 1.0, &z) == RSM_OK);
  const double p[4] = {0.3, -0.2, 0.7, 1.1};
  rsm_field_sample a, b;
  EXPECT(rsm_field_eval(f, p, &a) == RSM_OK);
  EXPECT(rsm_field_eval(z, p, &b) == RSM_OK);
  for (int i = 0; i < 3; ++i) {
    EXPECT(fabs(a.E[i] - b.E[i]) < 1e-15);
    EXPECT(fabs(a.cB[i] - b.cB[i]) < 1e-15);
  }
  EXPECT(rsm_field_plane_z((rsm_plane_variant)7, 1.0, 1.0, &z) == RSM_ERR_USAGE);

  rsm_complex cols[16];
  EXPECT(rsm_formal_solutions(seed, p, cols) == RSM_OK);
  rsm_field_free(f);
  rsm_field_free(z);
  rsm_seed_free(seed);
}

static void test_verify(void) {
  const double n[3] = {0.0, 0.6, 0.8}, a[3] = {1, 0, 0}, b[3] = {0, 0.5, 0};
  rsm_field* w = NULL;
  EXPECT(rsm_field_plane_lc(n, a, b, 1.2, 1.0, &w) == RSM_OK);
  EXPECT(rsm_field_wave_scale(w) == 1.2);
  const double p[4] = {0.1, 0.2, 0.3, 0.4};
  rsm_residual_report r;
  EXPECT(rsm_verify(w, p, 1e-4, NULL, &r) == RSM_OK);
  EXPECT(r.relative < 1e-7);
  EXPECT(rsm_verify(w, p, 0.0, NULL, &r) == RSM_ERR_USAGE);

  const double steps[3] = {1e-2, 5e-3, 2.5e-3};
  rsm_convergence c;
  EXPECT(rsm_convergence_order(w, p, steps, 3, &c) == RSM_OK);
  EXPECT(!c.floor_limited && fabs(c.slope - 2.0) < 0.1);
  EXPECT(rsm_convergence_order(w, p, steps, 2, &c) == RSM_ERR_USAGE);

  rsm_complex m[4];
  EXPECT(rsm_matrix_residual(w, p, 1e-4, m) == RSM_OK);
  for (int i = 0; i < 4; ++i) EXPECT(hypot(m[i].re, m[i].im) < 1e-6);

  rsm_field* bad = NULL;
  EXPECT(rsm_field_corrupted(w, &bad) == RSM_OK);
  EXPECT(rsm_verify(bad, p, 1e-4, NULL, &r) == RSM_OK);
  EXPECT(r.relative > 0.1);

  rsm_field* d = NULL;
  EXPECT(rsm_field_dual(w, &d) == RSM_OK);
  EXPECT(rsm_verify(d, p, 1e-4, NULL, &r) == RSM_OK);
  EXPECT(r.relative < 1e-7);

  rsm_field_free(bad);
  rsm_field_free(d);
  rsm_field_free(w);
}

static void test_cylindrical(void) {
  rsm_complex ray[4];
  EXPECT(rsm_cylindrical_ray(1.0, 0.5, ray) == RSM_OK);
  EXPECT(ray[0].re == 0.0 && ray[0].im == 0.5);
  EXPECT(ray[3].re == 1.0 && ray[3].im == 0.0);

  rsm_complex l3 = {1.0, 0.0};
  rsm_field* f = NULL;
  EXPECT(rsm_field_cylindrical(1.0, 0.5, 1, l3, 1.0, &f) == RSM_OK);
  const double axis[4] = {0, 0, 0, 0};
  rsm_field_sample s;
  EXPECT(rsm_field_eval(f, axis, &s) == RSM_ERR_DOMAIN);
  EXPECT(strstr(rsm_last_error(), "rho") != NULL);
  const double p[4] = {0.0, 1.0, 0.5, 0.0};
  EXPECT(rsm_field_eval(f, p, &s) == RSM_OK);
  rsm_field_free(f);
}

static void test_dual_and_polarization(void) {
  rsm_field_sample in = {{1, 2, 3}, {4, 5, 6}}, out;
  EXPECT(rsm_dual_transform(&in, &out) == RSM_OK);
  EXPECT(out.E[0] == -4 && out.E[2] == -6 && out.cB[1] == 2);
  EXPECT(rsm_phase_transform(&in, 0.0, &out) == RSM_OK);
  EXPECT(out.E[1] == 2 && out.cB[2] == 6);
  EXPECT(rsm_dual_transform(NULL, &out) == RSM_ERR_USAGE);

  rsm_sources src = {1, 2, {3, 4, 5}, {6, 7, 8}}, ds;
  EXPECT(rsm_dual_transform_sources(&src, &ds) == RSM_OK);
  EXPECT(ds.rho_e == -2 && ds.rho_m == 1 && ds.j_e[0] == 6 && ds.j_m[2] == -5);

  rsm_field_sample w = {{0, -1, 0}, {1, 0, 0}};
  const double n[3] = {0, 0, 1};
  rsm_polarization pr;
  EXPECT(rsm_polarization_report(&w, n, &pr) == RSM_OK);
  EXPECT(pr.e_dot_cb == 0.0 && pr.energy_difference == 0.0);
  EXPECT(pr.direction_defined && pr.poynting[2] == 1.0);
  EXPECT(pr.has_direction && pr.e_dot_n == 0.0);
}

static void test_invariants(void) {
  const int ids[2] = {1, 5};
  rsm_invariants* suite = NULL;
  EXPECT(rsm_invariants_run(0, ids, 2, &suite) == RSM_OK);
  EXPECT(rsm_invariants_count(suite) == 2);
  for (int i = 0; i < 2; ++i) {
    int id = 0, passed = 0;
    const char *title = NULL, *detail = NULL;
    EXPECT(rsm_invariants_get(suite, i, &id, &passed, &title, &detail) == RSM_OK);
    EXPECT(id == ids[i]);
    EXPECT(passed);
    EXPECT(title != NULL && detail != NULL);
    EXPECT(rsm_invariants_failure_count(suite, i) == 0);
  }
  rsm_invariants_free(suite);
  const int bad[1] = {11};
  EXPECT(rsm_invariants_run(0, bad, 1, &suite) == RSM_ERR_USAGE);
}

int main(void) {
  test_errors();
  test_z_seed();
  test_verify();
  test_cylindrical();
  test_dual_and_polarization();
  test_invariants();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
