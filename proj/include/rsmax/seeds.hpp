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

// Scalar Klein-Fock-Gordon seeds d^a d_a Phi = 0 with analytic first and
// second derivatives.
//
//   RealPlane     Phi = A sin(phi),        phi = k0 x0 - k.x
//   ComplexPlane  Phi = A exp(i phi)
//   Cylindrical   Phi = A exp(i E x0) exp(i k z) exp(i m varphi) R(rho)
//
// The cylindrical radial profile is R = J_m(q rho) with q = sqrt(E^2 - k^2).
// For q = 0 (k = +-E) it is the regular degenerate solution R = rho^|m|.
//
// Gradient components are the lowered derivatives F_a = d_a Phi; for plane
// seeds F_a = kappa_a A cos(phi) with kappa = (k0, -k1, -k2, -k3).

#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "rsmax/types.hpp"

namespace rsmax {

/// Cylindrical sampling excludes the axis rho <= kRhoMin.
inline constexpr double kRhoMin = 1e-9;

enum class SeedKind { RealPlane, ComplexPlane, Cylindrical };

enum class NullCheck { Strict, Skip };

std::string_view to_string(SeedKind kind);

class ScalarSeed {
 public:
  /// Throws UsageError if k is not null (within 1e-12 relative) under
  /// NullCheck::Strict, or if any parameter is non-finite.
  static ScalarSeed real_plane(double amplitude, const std::array<double, 4>& k,
                               NullCheck check = NullCheck::Strict);
  static ScalarSeed complex_plane(double amplitude, const std::array<double, 4>& k,
                                  NullCheck check = NullCheck::Strict);
  /// Throws UsageError for evanescent parameters (E^2 < k^2).
  static ScalarSeed cylindrical(double amplitude, double frequency,
                                double axial_wavenumber, int azimuthal_index);

  SeedKind kind() const { return kind_; }
  bool is_plane() const { return kind_ != SeedKind::Cylindrical; }
  double amplitude() const { return amplitude_; }

  /// Upper-index wave vector (k0, k1, k2, k3). Plane seeds only.
  const std::array<double, 4>& wave_vector() const { return k_; }
  double frequency() const { return frequency_; }
  double axial_wavenumber() const { return axial_; }
  int azimuthal_index() const { return m_; }
  /// q = sqrt(E^2 - k^2) for cylindrical seeds.
  double transverse_wavenumber() const { return q_; }

  /// Characteristic wavenumber: k0 for plane seeds, |E| for cylindrical
  /// (falls back to 1 when that is zero).
  double wave_scale() const;

  /// k0^2 - |k|^2 within tol relative to k0^2 (plane seeds only).
  bool is_null(double tol_rel = 1e-12) const;

 private:
  ScalarSeed() = default;

  SeedKind kind_ = SeedKind::RealPlane;
  double amplitude_ = 1.0;
  std::array<double, 4> k_{};
  double frequency_ = 0.0;
  double axial_ = 0.0;
  int m_ = 0;
  double q_ = 0.0;
};

struct GradientSample {
  std::array<Complex, 4> F{};

  Complex operator[](int a) const { return F[static_cast<size_t>(a)]; }
  double max_abs() const;
};

/// Second derivatives d_a d_b Phi (symmetric).
using Hessian = std::array<std::array<Complex, 4>, 4>;

/// Phi(p). Cylindrical seeds throw DomainError on rho <= kRhoMin.
Complex seed_value(const ScalarSeed& s, const SpacetimePoint& p);
GradientSample seed_gradient(const ScalarSeed& s, const SpacetimePoint& p);
Hessian seed_hessian(const ScalarSeed& s, const SpacetimePoint& p);

/// |(-d0^2 + d1^2 + d2^2 + d3^2) Phi| by central second differences.
double kfg_residual(const ScalarSeed& s, const SpacetimePoint& p, double h);

/// Bessel function of the first kind for any integer order, x >= 0.
double bessel_j(int order, double x);
/// dJ_m/dx via J_m' = (J_{m-1} - J_{m+1}) / 2.
double bessel_j_prime(int order, double x);

/// Radial profile R(rho) of a cylindrical seed and its derivative.
struct RadialSample {
  double R = 0.0;
  double dR = 0.0;
};
RadialSample radial_profile(const ScalarSeed& s, double rho);

// Flat "key = value" text. '#' starts a comment; blank lines are ignored.
using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_key_values(std::string_view text);

/// Builds a seed from kind, A, k0..k3 (plane) or E, k, m (cylindrical).
/// Keys it does not recognise are ignored so the same file can carry run
/// options. Throws UsageError on missing or malformed values.
ScalarSeed seed_from_key_values(const KeyValues& kv);

double parse_double(std::string_view text, std::string_view what);
int parse_int(std::string_view text, std::string_view what);

}  // namespace rsmax
