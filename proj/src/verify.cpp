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

#include "rsmax/verify.hpp"

#include <algorithm>
#include <utility>

#include "rsmax/algebra.hpp"

namespace rsmax {

ResidualReport maxwell_residual(const FieldFn& field, const SpacetimePoint& p, double h,
                                const std::optional<SourceTuple>& sources,
                                double wave_scale) {
  if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("finite-difference step must be > 0");
  // dE[a], dB[a]: derivative of E, cB along axis a.
  std::array<Vec3, 4> dE, dB;
  double field_max = 0.0;
  for (int a = 0; a < 4; ++a) {
    const SpacetimePoint pp = p.shifted(a, h), pm = p.shifted(a, -h);
    const FieldSample fp = field(pp), fm = field(pm);
    if (!fp.finite()) throw NumericError("non-finite field sample at " + pp.str());
    if (!fm.finite()) throw NumericError("non-finite field sample at " + pm.str());
    dE[a] = (fp.E - fm.E) / (2.0 * h);
    dB[a] = (fp.cB - fm.cB) / (2.0 * h);
    for (const FieldSample* f : {&fp, &fm})
      for (int i = 0; i < 3; ++i)
        field_max = std::max({field_max, std::abs(f->E[i]), std::abs(f->cB[i])});
  }

  auto curl = [](const std::array<Vec3, 4>& d) {
    return Vec3{d[2].z - d[3].y, d[3].x - d[1].z, d[1].y - d[2].x};
  };

  ResidualComponents c;
  c.div_E = dE[1].x + dE[2].y + dE[3].z;
  c.div_cB = dB[1].x + dB[2].y + dB[3].z;
  c.faraday = curl(dE) + dB[0];
  c.ampere = curl(dB) - dE[0];
  if (sources) {
    c.div_E -= sources->rho_e;
    c.div_cB -= sources->rho_m;
    c.faraday = c.faraday - sources->j_m;
    c.ampere = c.ampere - sources->j_e;
  }

  double deriv_max = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 3; ++i)
      deriv_max = std::max({deriv_max, std::abs(dE[a][i]), std::abs(dB[a][i])});

  ResidualReport r;
  r.components = c;
  r.div_E = std::abs(c.div_E);
  r.div_cB = std::abs(c.div_cB);
  r.curl_E_plus_dt_cB = norm(c.faraday);
  r.curl_cB_minus_dt_E = norm(c.ampere);
  r.max_residual = std::max({r.div_E, r.div_cB, r.curl_E_plus_dt_cB, r.curl_cB_minus_dt_E});
  r.scale = std::max(wave_scale * field_max, deriv_max);
  r.relative = r.scale > 0.0 ? r.max_residual / r.scale : r.max_residual;
  r.h = h;
  r.point = p;
  return r;
}

double log_log_slope(const std::vector<double>& steps, const std::vector<double>& residuals) {
  const size_t n = steps.size();
  if (n < 2 || residuals.size() != n) throw UsageError("slope fit needs matching samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double x = std::log(steps[i]), y = std::log(residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw UsageError("slope fit needs distinct steps");
  return (n * sxy - sx * sy) / den;
}

ConvergenceResult convergence_order(const FieldFn& field, const SpacetimePoint& p,
                                    const std::vector<double>& steps, double wave_scale) {
  if (steps.size() < 3) throw UsageError("convergence order needs at least three steps");
  ConvergenceResult out;
  for (double h : steps) {
    const ResidualReport r = maxwell_residual(field, p, h, std::nullopt, wave_scale);
    out.residuals.push_back(r.max_residual);
    out.relative.push_back(r.relative);
    if (r.relative < kResidualFloor) out.floor_limited = true;
  }
  out.slope = out.floor_limited ? std::nan("") : log_log_slope(steps, out.residuals);
  return out;
}

FieldFn corrupt_field(FieldFn field) {
  return [field = std::move(field)](const SpacetimePoint& p) {
    FieldSample f = field(p);
    f.E.y = -f.E.y;
    return f;
  };
}

MatrixResidualReport matrix_residual(const RSFieldFn& column, const SpacetimePoint& p,
                                     double h, double wave_scale) {
  if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("finite-difference step must be > 0");
  std::array<RSVector, 4> d;
  double field_max = 0.0, deriv_max = 0.0;
  for (int a = 0; a < 4; ++a) {
    const SpacetimePoint pp = p.shifted(a, h), pm = p.shifted(a, -h);
    const RSVector fp = column(pp), fm = column(pm);
    if (!fp.finite()) throw NumericError("non-finite column sample at " + pp.str());
    if (!fm.finite()) throw NumericError("non-finite column sample at " + pm.str());
    d[a] = (fp - fm) * Complex(1.0 / (2.0 * h));
    field_max = std::max({field_max, fp.max_abs(), fm.max_abs()});
    deriv_max = std::max(deriv_max, d[a].max_abs());
  }
  MatrixResidualReport r;
  r.residual = maxwell_operator_from_derivatives(d);
  r.max_residual = r.residual.max_abs();
  r.scale = std::max(wave_scale * field_max, deriv_max);
  r.relative = r.scale > 0.0 ? r.max_residual / r.scale : r.max_residual;
  r.h = h;
  return r;
}

ConvergenceResult matrix_convergence_order(const RSFieldFn& column, const SpacetimePoint& p,
                                           const std::vector<double>& steps,
                                           double wave_scale) {
  if (steps.size() < 3) throw UsageError("convergence order needs at least three steps");
  ConvergenceResult out;
  for (double h : steps) {
    const MatrixResidualReport r = matrix_residual(column, p, h, wave_scale);
    out.residuals.push_back(r.max_residual);
    out.relative.push_back(r.relative);
    if (r.relative < kResidualFloor) out.floor_limited = true;
  }
  out.slope = out.floor_limited ? std::nan("") : log_log_slope(steps, out.residuals);
  return out;
}

}  // namespace rsmax
