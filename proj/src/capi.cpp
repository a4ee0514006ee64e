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

#include "rsmax/rsmax.h"

#include <new>
#include <string>
#include <utility>
#include <vector>

#include "rsmax/dual.hpp"
#include "rsmax/invariants.hpp"
#include "rsmax/physicality.hpp"
#include "rsmax/seeds.hpp"
#include "rsmax/squaring.hpp"
#include "rsmax/verify.hpp"
#include "rsmax/waves.hpp"

struct rsm_seed {
  rsmax::ScalarSeed seed;
};

struct rsm_basis {
  rsmax::PhysicalBasis basis;
};

struct rsm_field {
  rsmax::FieldFn fn;
  double wave_scale;
};

struct rsm_invariants {
  std::vector<rsmax::InvariantResult> results;
};

namespace {

using namespace rsmax;

thread_local std::string g_last_error;

template <class F>
rsm_status guard(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return RSM_OK;
  } catch (const UsageError& e) {
    g_last_error = e.what();
    return RSM_ERR_USAGE;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return RSM_ERR_DOMAIN;
  } catch (const NumericError& e) {
    g_last_error = e.what();
    return RSM_ERR_NUMERIC;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RSM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RSM_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* what) {
  if (p == nullptr) throw UsageError(std::string(what) + " must not be NULL");
}

SpacetimePoint point(const double x[4]) {
  need(x, "point");
  return {x[0], x[1], x[2], x[3]};
}

Vec3 vec3(const double v[3], const char* what) {
  need(v, what);
  return {v[0], v[1], v[2]};
}

rsm_complex to_c(Complex z) { return {z.real(), z.imag()}; }

Lambda lambda_from(const rsm_complex l[4]) {
  need(l, "lambda");
  Lambda out;
  for (int c = 0; c < 4; ++c) out[c] = Complex(l[c].re, l[c].im);
  if (!out.finite()) throw UsageError("lambda must be finite");
  return out;
}

void lambda_to(const Lambda& l, rsm_complex out[4]) {
  for (int c = 0; c < 4; ++c) out[c] = to_c(l[c]);
}

void sample_to(const FieldSample& f, rsm_field_sample* out) {
  for (int i = 0; i < 3; ++i) {
    out->E[i] = f.E[i];
    out->cB[i] = f.cB[i];
  }
}

FieldSample sample_from(const rsm_field_sample* in) {
  FieldSample f;
  for (int i = 0; i < 3; ++i) {
    f.E[i] = in->E[i];
    f.cB[i] = in->cB[i];
  }
  return f;
}

PlaneVariant variant_from(rsm_plane_variant v) {
  if (v == RSM_VARIANT_I) return PlaneVariant::I;
  if (v == RSM_VARIANT_II) return PlaneVariant::II;
  throw UsageError("plane variant must be RSM_VARIANT_I or RSM_VARIANT_II");
}

template <class T>
void emit(T** out, T value) {
  *out = new T(std::move(value));
}

}  // namespace

extern "C" {

const char* rsm_last_error(void) { return g_last_error.c_str(); }

const char* rsm_status_name(rsm_status status) {
  switch (status) {
    case RSM_OK: return "ok";
    case RSM_ERR_USAGE: return "usage error";
    case RSM_ERR_DOMAIN: return "domain error";
    case RSM_ERR_NUMERIC: return "numeric error";
    case RSM_ERR_IO: return "i/o error";
    case RSM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rsm_version(void) { return "0.1.0"; }

rsm_status rsm_seed_real_plane(double amplitude, const double k[4], rsm_seed** out) {
  return guard([&] {
    need(k, "k");
    need(out, "out");
    emit(out, rsm_seed{ScalarSeed::real_plane(amplitude, {k[0], k[1], k[2], k[3]})});
  });
}

rsm_status rsm_seed_complex_plane(double amplitude, const double k[4], rsm_seed** out) {
  return guard([&] {
    need(k, "k");
    need(out, "out");
    emit(out, rsm_seed{ScalarSeed::complex_plane(amplitude, {k[0], k[1], k[2], k[3]})});
  });
}

rsm_status rsm_seed_cylindrical(double amplitude, double frequency, double axial_wavenumber,
                                int m, rsm_seed** out) {
  return guard([&] {
    need(out, "out");
    emit(out, rsm_seed{ScalarSeed::cylindrical(amplitude, frequency, axial_wavenumber, m)});
  });
}

rsm_status rsm_seed_parse(const char* text, rsm_seed** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    emit(out, rsm_seed{seed_from_key_values(parse_key_values(text))});
  });
}

void rsm_seed_free(rsm_seed* seed) { delete seed; }

rsm_status rsm_seed_get_info(const rsm_seed* seed, rsm_seed_info* out) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    const ScalarSeed& s = seed->seed;
    *out = rsm_seed_info{};
    out->kind = s.kind() == SeedKind::RealPlane      ? RSM_SEED_REAL_PLANE
                : s.kind() == SeedKind::ComplexPlane ? RSM_SEED_COMPLEX_PLANE
                                                     : RSM_SEED_CYLINDRICAL;
    out->amplitude = s.amplitude();
    for (int a = 0; a < 4; ++a) out->k[a] = s.wave_vector()[static_cast<size_t>(a)];
    out->frequency = s.frequency();
    out->axial_wavenumber = s.axial_wavenumber();
    out->m = s.azimuthal_index();
    out->wave_scale = s.wave_scale();
  });
}

rsm_status rsm_seed_value(const rsm_seed* seed, const double x[4], rsm_complex* out) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    *out = to_c(seed_value(seed->seed, point(x)));
  });
}

rsm_status rsm_seed_gradient(const rsm_seed* seed, const double x[4], rsm_complex out[4]) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    const GradientSample g = seed_gradient(seed->seed, point(x));
    for (int a = 0; a < 4; ++a) out[a] = to_c(g[a]);
  });
}

rsm_status rsm_seed_kfg_residual(const rsm_seed* seed, const double x[4], double h,
                                 double* out) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    *out = kfg_residual(seed->seed, point(x), h);
  });
}

rsm_status rsm_formal_solutions(const rsm_seed* seed, const double x[4], rsm_complex out[16]) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    const FormalMatrix m = formal_solutions(seed->seed, point(x));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out[4 * r + c] = to_c(m[r][c]);
  });
}

rsm_status rsm_combine(const rsm_seed* seed, const rsm_complex lambda[4], const double x[4],
                       rsm_complex out[4]) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    const RSVector v = combine(seed->seed, lambda_from(lambda), point(x));
    for (int r = 0; r < 4; ++r) out[r] = to_c(v[r]);
  });
}

rsm_status rsm_solve(const rsm_seed* seed, const rsm_solve_options* options, rsm_basis** out) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    SolveOptions opt;
    if (options != nullptr) {
      if (options->tol_rank > 0.0) opt.tol_rank = options->tol_rank;
      if (options->sample_count > 0) opt.sample_count = options->sample_count;
    }
    emit(out, rsm_basis{solve_physical(seed->seed, opt)});
  });
}

void rsm_basis_free(rsm_basis* basis) { delete basis; }

rsm_status rsm_basis_get_info(const rsm_basis* basis, rsm_basis_info* out) {
  return guard([&] {
    need(basis, "basis");
    need(out, "out");
    const PhysicalBasis& b = basis->basis;
    out->nullity = b.nullity;
    out->kernel_dim = b.kernel_dim;
    out->dim_physical = b.dim_physical;
    out->all_zero = b.all_zero ? 1 : 0;
    out->rank_ambiguous = b.rank_ambiguous ? 1 : 0;
    out->singular_value_count = static_cast<int>(b.singular_values.size());
    out->tol_rank = b.tol_rank;
  });
}

namespace {
rsm_status basis_vector(const std::vector<Lambda>& v, int index, rsm_complex out[4]) {
  return guard([&] {
    need(out, "out");
    if (index < 0 || static_cast<size_t>(index) >= v.size())
      throw UsageError("basis index " + std::to_string(index) + " out of range (" +
                       std::to_string(v.size()) + " vectors)");
    lambda_to(v[static_cast<size_t>(index)], out);
  });
}
}  // namespace

rsm_status rsm_basis_physical(const rsm_basis* basis, int index, rsm_complex out[4]) {
  if (basis == nullptr) return guard([] { throw UsageError("basis must not be NULL"); });
  return basis_vector(basis->basis.basis, index, out);
}

rsm_status rsm_basis_kernel(const rsm_basis* basis, int index, rsm_complex out[4]) {
  if (basis == nullptr) return guard([] { throw UsageError("basis must not be NULL"); });
  return basis_vector(basis->basis.kernel, index, out);
}

rsm_status rsm_basis_singular_values(const rsm_basis* basis, double* out, int capacity) {
  return guard([&] {
    need(basis, "basis");
    if (capacity > 0) need(out, "out");
    const auto& sv = basis->basis.singular_values;
    for (size_t i = 0; i < sv.size() && static_cast<int>(i) < capacity; ++i) out[i] = sv[i];
  });
}

rsm_status rsm_cylindrical_ray(double frequency, double axial_wavenumber, rsm_complex out[4]) {
  return guard([&] {
    need(out, "out");
    lambda_to(cylindrical_ray(frequency, axial_wavenumber), out);
  });
}

rsm_status rsm_dependence_determinant(const double n[3], const double a[3], const double b[3],
                                      double* out) {
  return guard([&] {
    need(out, "out");
    *out = check_linear_dependence_3x3(vec3(n, "n"), vec3(a, "a"), vec3(b, "b"));
  });
}

rsm_status rsm_field_from_seed(const rsm_seed* seed, const rsm_complex lambda[4],
                               rsm_field** out) {
  return guard([&] {
    need(seed, "seed");
    need(out, "out");
    emit(out, rsm_field{combined_field(seed->seed, lambda_from(lambda)), seed->seed.wave_scale()});
  });
}

rsm_status rsm_field_plane_z(rsm_plane_variant variant, double k0, double amplitude,
                             rsm_field** out) {
  return guard([&] {
    need(out, "out");
    emit(out, rsm_field{plane_wave_z_field(variant_from(variant), k0, amplitude), k0});
  });
}

rsm_status rsm_field_plane_general(rsm_plane_variant variant, const double n[3], double k0,
                                   double amplitude, rsm_field** out) {
  return guard([&] {
    need(out, "out");
    emit(out, rsm_field{plane_wave_general_field(variant_from(variant), vec3(n, "n"), k0,
                                                 amplitude),
                        k0});
  });
}

rsm_status rsm_field_plane_lc(const double n[3], const double a[3], const double b[3], double k0,
                              double amplitude, rsm_field** out) {
  return guard([&] {
    need(out, "out");
    const Vec3 nv = vec3(n, "n");
    if (std::abs(dot(nv, nv) - 1.0) > 1e-12)
      throw UsageError("propagation direction must be a unit vector");
    if (!(k0 > 0.0)) throw UsageError("plane wave needs k0 > 0");
    emit(out, rsm_field{plane_wave_lc_field(lc_frame(nv, vec3(a, "a"), vec3(b, "b")), k0,
                                            amplitude),
                        k0});
  });
}

rsm_status rsm_field_cylindrical(double frequency, double axial_wavenumber, int m,
                                 rsm_complex lambda3, double amplitude, rsm_field** out) {
  return guard([&] {
    need(out, "out");
    emit(out, rsm_field{cylindrical_wave_field(frequency, axial_wavenumber, m,
                                               Complex(lambda3.re, lambda3.im), amplitude),
                        std::abs(frequency)});
  });
}

rsm_status rsm_field_corrupted(const rsm_field* base, rsm_field** out) {
  return guard([&] {
    need(base, "base");
    need(out, "out");
    emit(out, rsm_field{corrupt_field(base->fn), base->wave_scale});
  });
}

rsm_status rsm_field_dual(const rsm_field* base, rsm_field** out) {
  return guard([&] {
    need(base, "base");
    need(out, "out");
    emit(out, rsm_field{dual_field(base->fn), base->wave_scale});
  });
}

rsm_status rsm_field_phase(const rsm_field* base, double chi, rsm_field** out) {
  return guard([&] {
    need(base, "base");
    need(out, "out");
    if (!std::isfinite(chi)) throw UsageError("phase angle must be finite");
    emit(out, rsm_field{phase_field(base->fn, chi), base->wave_scale});
  });
}

void rsm_field_free(rsm_field* field) { delete field; }

double rsm_field_wave_scale(const rsm_field* field) {
  return field == nullptr ? 0.0 : field->wave_scale;
}

rsm_status rsm_field_eval(const rsm_field* field, const double x[4], rsm_field_sample* out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    const SpacetimePoint p = point(x);
    const FieldSample f = field->fn(p);
    if (!f.finite()) throw NumericError("non-finite field at " + p.str());
    sample_to(f, out);
  });
}

rsm_status rsm_verify(const rsm_field* field, const double x[4], double h,
                      const rsm_sources* sources, rsm_residual_report* out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    std::optional<SourceTuple> src;
    if (sources != nullptr)
      src = SourceTuple{sources->rho_e, sources->rho_m, vec3(sources->j_e, "j_e"),
                        vec3(sources->j_m, "j_m")};
    const ResidualReport r = maxwell_residual(field->fn, point(x), h, src, field->wave_scale);
    out->div_E = r.div_E;
    out->div_cB = r.div_cB;
    out->curl_E_plus_dt_cB = r.curl_E_plus_dt_cB;
    out->curl_cB_minus_dt_E = r.curl_cB_minus_dt_E;
    out->max_residual = r.max_residual;
    out->scale = r.scale;
    out->relative = r.relative;
    out->h = r.h;
    out->signed_div_E = r.components.div_E;
    out->signed_div_cB = r.components.div_cB;
    for (int i = 0; i < 3; ++i) {
      out->faraday[i] = r.components.faraday[i];
      out->ampere[i] = r.components.ampere[i];
    }
  });
}

rsm_status rsm_convergence_order(const rsm_field* field, const double x[4], const double* steps,
                                 int count, rsm_convergence* out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    if (count > 0) need(steps, "steps");
    const std::vector<double> hs(steps, steps + std::max(count, 0));
    const ConvergenceResult r = convergence_order(field->fn, point(x), hs, field->wave_scale);
    out->slope = r.slope;
    out->floor_limited = r.floor_limited ? 1 : 0;
  });
}

rsm_status rsm_matrix_residual(const rsm_field* field, const double x[4], double h,
                               rsm_complex out[4]) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    const RSFieldFn column = [fn = field->fn](const SpacetimePoint& p) {
      return to_rs_vector(fn(p));
    };
    const RSVector r = matrix_residual(column, point(x), h).residual;
    for (int i = 0; i < 4; ++i) out[i] = to_c(r[i]);
  });
}

rsm_status rsm_dual_transform(const rsm_field_sample* in, rsm_field_sample* out) {
  return guard([&] {
    need(in, "in");
    need(out, "out");
    sample_to(dual_transform(sample_from(in)), out);
  });
}

rsm_status rsm_phase_transform(const rsm_field_sample* in, double chi, rsm_field_sample* out) {
  return guard([&] {
    need(in, "in");
    need(out, "out");
    sample_to(phase_transform(sample_from(in), chi), out);
  });
}

rsm_status rsm_dual_transform_sources(const rsm_sources* in, rsm_sources* out) {
  return guard([&] {
    need(in, "in");
    need(out, "out");
    const SourceTuple d = dual_transform_sources(
        {in->rho_e, in->rho_m, vec3(in->j_e, "j_e"), vec3(in->j_m, "j_m")});
    out->rho_e = d.rho_e;
    out->rho_m = d.rho_m;
    for (int i = 0; i < 3; ++i) {
      out->j_e[i] = d.j_e[i];
      out->j_m[i] = d.j_m[i];
    }
  });
}

rsm_status rsm_polarization_report(const rsm_field_sample* sample, const double* n,
                                   rsm_polarization* out) {
  return guard([&] {
    need(sample, "sample");
    need(out, "out");
    std::optional<Vec3> dir;
    if (n != nullptr) dir = Vec3{n[0], n[1], n[2]};
    const PolarizationReport r = polarization_report(sample_from(sample), dir);
    *out = rsm_polarization{};
    out->e_dot_cb = r.e_dot_cb;
    out->energy_difference = r.energy_difference;
    for (int i = 0; i < 3; ++i) out->poynting[i] = r.poynting_direction[i];
    out->direction_defined = r.direction_defined ? 1 : 0;
    out->has_direction = dir ? 1 : 0;
    out->e_dot_n = r.e_dot_n.value_or(0.0);
    out->cb_dot_n = r.cb_dot_n.value_or(0.0);
  });
}

rsm_status rsm_invariants_run(uint64_t seed, const int* ids, int count, rsm_invariants** out) {
  return guard([&] {
    need(out, "out");
    if (count > 0) need(ids, "ids");
    InvariantOptions opt;
    opt.seed = seed;
    rsm_invariants suite;
    if (count <= 0) {
      suite.results = run_invariants(opt);
    } else {
      for (int i = 0; i < count; ++i) suite.results.push_back(run_invariant(ids[i], opt));
    }
    emit(out, std::move(suite));
  });
}

void rsm_invariants_free(rsm_invariants* suite) { delete suite; }

int rsm_invariants_count(const rsm_invariants* suite) {
  return suite == nullptr ? 0 : static_cast<int>(suite->results.size());
}

rsm_status rsm_invariants_get(const rsm_invariants* suite, int index, int* id, int* passed,
                              const char** title, const char** detail) {
  return guard([&] {
    need(suite, "suite");
    if (index < 0 || index >= static_cast<int>(suite->results.size()))
      throw UsageError("invariant index out of range");
    const InvariantResult& r = suite->results[static_cast<size_t>(index)];
    if (id) *id = r.id;
    if (passed) *passed = r.passed ? 1 : 0;
    if (title) *title = r.title.c_str();
    if (detail) *detail = r.detail.c_str();
  });
}

int rsm_invariants_failure_count(const rsm_invariants* suite, int index) {
  if (suite == nullptr || index < 0 || index >= static_cast<int>(suite->results.size())) return 0;
  return static_cast<int>(suite->results[static_cast<size_t>(index)].failures.size());
}

const char* rsm_invariants_failure(const rsm_invariants* suite, int index, int j) {
  if (suite == nullptr || index < 0 || index >= static_cast<int>(suite->results.size()))
    return "";
  const auto& f = suite->results[static_cast<size_t>(index)].failures;
  if (j < 0 || j >= static_cast<int>(f.size())) return "";
  return f[static_cast<size_t>(j)].c_str();
}

}  // extern "C"
