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

// Finite-difference check of the component Maxwell equations (c = 1,
// eps0 = 1):
//
//   div E = rho_e,   curl E + d0 cB = j_m,
//   div cB = rho_m,  curl cB - d0 E = j_e.
//
// All derivatives use second-order central differences with one step h in
// all four coordinates.

#pragma once

#include <optional>
#include <vector>

#include "rsmax/dual.hpp"
#include "rsmax/types.hpp"

namespace rsmax {

/// Signed left-minus-right sides of the four laws.
struct ResidualComponents {
  double div_E = 0.0;
  double div_cB = 0.0;
  Vec3 faraday;  // curl E + d0 cB - j_m
  Vec3 ampere;   // curl cB - d0 E - j_e
};

struct ResidualReport {
  double div_E = 0.0;
  double div_cB = 0.0;
  double curl_E_plus_dt_cB = 0.0;
  double curl_cB_minus_dt_E = 0.0;
  double max_residual = 0.0;
  /// max(wave_scale * max|field|, max|d field|) over the stencil.
  double scale = 0.0;
  /// max_residual / scale, or max_residual when scale is zero.
  double relative = 0.0;
  double h = 0.0;
  SpacetimePoint point;
  ResidualComponents components;
};

/// Throws UsageError for h <= 0, NumericError naming the stencil point on a
/// non-finite sample.
ResidualReport maxwell_residual(const FieldFn& field, const SpacetimePoint& p, double h,
                                const std::optional<SourceTuple>& sources = std::nullopt,
                                double wave_scale = 0.0);

struct ConvergenceResult {
  /// Least-squares slope of log(max_residual) against log(h). NaN when
  /// floor_limited.
  double slope = 0.0;
  bool floor_limited = false;
  std::vector<double> residuals;  // max_residual per step
  std::vector<double> relative;
};

/// Relative residual below which a step counts as floating-point floor.
inline constexpr double kResidualFloor = 1e-10;

/// Needs at least three steps. Throws UsageError otherwise.
ConvergenceResult convergence_order(const FieldFn& field, const SpacetimePoint& p,
                                    const std::vector<double>& steps,
                                    double wave_scale = 0.0);

/// The field with the sign of E_2 flipped; a non-solution for testing.
FieldFn corrupt_field(FieldFn field);

/// Residual of the matrix operator (-i d0 + alpha^j d_j) on a full RS
/// column, with the same differencing and scaling as maxwell_residual.
struct MatrixResidualReport {
  RSVector residual;
  double max_residual = 0.0;
  double scale = 0.0;
  double relative = 0.0;
  double h = 0.0;
};

MatrixResidualReport matrix_residual(const RSFieldFn& column, const SpacetimePoint& p,
                                     double h, double wave_scale = 0.0);

ConvergenceResult matrix_convergence_order(const RSFieldFn& column, const SpacetimePoint& p,
                                           const std::vector<double>& steps,
                                           double wave_scale = 0.0);

/// Slope fit on precomputed (h, residual) pairs.
double log_log_slope(const std::vector<double>& steps, const std::vector<double>& residuals);

}  // namespace rsmax
