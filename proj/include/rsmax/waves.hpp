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

// Closed-form vacuum waves. Every constructor returns the full field,
// including the overall k0 A (plane) or lambda_3-scaled derivative factors
// (cylindrical), with c = 1 so the second vector is cB.

#pragma once

#include <optional>

#include "rsmax/types.hpp"

namespace rsmax {

enum class PlaneVariant { I, II };

/// Waves along +z from the seed A sin(k0 x0 - k0 x3):
///   I:  E = (0, -k0 A cos, 0),  cB = (k0 A cos, 0, 0)
///   II: E = (k0 A cos, 0, 0),   cB = (0, k0 A cos, 0)
FieldSample plane_wave_z(PlaneVariant v, double k0, double amplitude, const SpacetimePoint& p);

/// Waves along unit n with phase k0 (x0 - n.x):
///   I:  E ∝ (n1^2 - 1, n1 n2, n1 n3),  cB ∝ (0, -n3, n2)
///   II: E ∝ (n2 n1, n2^2 - 1, n2 n3),  cB ∝ (n3, 0, -n1)
/// both scaled by k0 A cos(phase). Throws UsageError for non-unit n.
FieldSample plane_wave_general(PlaneVariant v, const Vec3& n, double k0, double amplitude,
                               const SpacetimePoint& p);

/// Polarisation frame of the general complex plane wave:
///   L = n (n.a) - a - b x n,   C = n (n.b) - b + a x n.
struct LCFrame {
  Vec3 n;
  Vec3 L;
  Vec3 C;
};

LCFrame lc_frame(const Vec3& n, const Vec3& a, const Vec3& b);

/// E = k0 A (cos L - sin C), cB = k0 A (sin L + cos C), phase k0 (x0 - n.x).
FieldSample plane_wave_lc(const LCFrame& frame, double k0, double amplitude,
                          const SpacetimePoint& p);

/// Physical cylindrical wave lambda_0 Psi^0 + lambda_3 Psi^3 built on
/// exp(i E x0) exp(i k z) exp(i m varphi) R(rho), with lambda_0 fixed by
/// -lambda_0 E + i lambda_3 k = 0. Throws UsageError for E = 0 or E^2 < k^2,
/// DomainError on the axis.
FieldSample cylindrical_wave(double frequency, double axial_wavenumber, int m,
                             Complex lambda3, const SpacetimePoint& p,
                             double amplitude = 1.0);

/// k = +E closed form: psi_1 = -i lambda_3 e^{i varphi} (d/drho - m/rho) Phi,
/// psi_2 = -lambda_3 e^{i varphi} (d/drho - m/rho) Phi, psi_3 = 0.
FieldSample cylindrical_wave_forward(double frequency, int m, Complex lambda3,
                                     const SpacetimePoint& p, double amplitude = 1.0);
/// k = -E closed form with e^{-i varphi} (d/drho + m/rho).
FieldSample cylindrical_wave_backward(double frequency, int m, Complex lambda3,
                                      const SpacetimePoint& p, double amplitude = 1.0);

struct PolarizationReport {
  double e_dot_cb = 0.0;
  double energy_difference = 0.0;  // |E|^2 - |cB|^2
  Vec3 poynting_direction;         // unit E x cB; zero when undefined
  bool direction_defined = false;
  std::optional<double> e_dot_n;
  std::optional<double> cb_dot_n;
};

/// Direction is undefined when |E x cB| <= tol * max(|E|^2, |cB|^2).
PolarizationReport polarization_report(const FieldSample& f,
                                       std::optional<Vec3> direction = std::nullopt,
                                       double tol = 1e-12);

FieldFn plane_wave_z_field(PlaneVariant v, double k0, double amplitude);
FieldFn plane_wave_general_field(PlaneVariant v, const Vec3& n, double k0, double amplitude);
FieldFn plane_wave_lc_field(const LCFrame& frame, double k0, double amplitude);
FieldFn cylindrical_wave_field(double frequency, double axial_wavenumber, int m,
                               Complex lambda3, double amplitude = 1.0);

}  // namespace rsmax
