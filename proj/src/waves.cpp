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

#include "rsmax/waves.hpp"

#include "rsmax/seeds.hpp"

namespace rsmax {

namespace {

void require_positive_k0(double k0) {
  if (!(k0 > 0.0) || !std::isfinite(k0)) throw UsageError("plane wave needs k0 > 0");
}

FieldSample from_psi(const std::array<Complex, 3>& psi, const SpacetimePoint& p) {
  FieldSample f;
  f.E = {psi[0].real(), psi[1].real(), psi[2].real()};
  f.cB = {psi[0].imag(), psi[1].imag(), psi[2].imag()};
  f.point = p;
  return f;
}

// Phi-independent pieces shared by the k = +-E closed forms.
struct CylindricalParts {
  Complex pre;  // A exp(i E x0) exp(i k z) exp(i m varphi)
  RadialSample radial;
  double rho;
  double phi;
};

CylindricalParts cylindrical_parts(double frequency, double axial, int m,
                                   const SpacetimePoint& p, double amplitude) {
  const ScalarSeed s = ScalarSeed::cylindrical(amplitude, frequency, axial, m);
  const double rho = std::hypot(p.x1, p.x2);
  if (!(rho > kRhoMin)) throw DomainError("cylindrical wave evaluated inside rho_min = 1e-9");
  const double phi = std::atan2(p.x2, p.x1);
  const Complex pre =
      amplitude * std::polar(1.0, frequency * p.x0 + axial * p.x3 + m * phi);
  return {pre, radial_profile(s, rho), rho, phi};
}

}  // namespace

FieldSample plane_wave_z(PlaneVariant v, double k0, double amplitude,
                         const SpacetimePoint& p) {
  require_positive_k0(k0);
  const double k3 = k0;
  const double c = amplitude * std::cos(k0 * p.x0 - k3 * p.x3);
  FieldSample f;
  f.point = p;
  if (v == PlaneVariant::I) {
    f.E = {0.0, -k3 * c, 0.0};
    f.cB = {k0 * c, 0.0, 0.0};
  } else {
    f.E = {k3 * c, 0.0, 0.0};
    f.cB = {0.0, k0 * c, 0.0};
  }
  return f;
}

FieldSample plane_wave_general(PlaneVariant v, const Vec3& n, double k0, double amplitude,
                               const SpacetimePoint& p) {
  require_positive_k0(k0);
  if (std::abs(dot(n, n) - 1.0) > 1e-12)
    throw UsageError("propagation direction must be a unit vector");
  const Vec3 x{p.x1, p.x2, p.x3};
  const double s = k0 * amplitude * std::cos(k0 * (p.x0 - dot(n, x)));
  FieldSample f;
  f.point = p;
  if (v == PlaneVariant::I) {
    f.E = Vec3{n.x * n.x - 1.0, n.x * n.y, n.x * n.z} * s;
    f.cB = Vec3{0.0, -n.z, n.y} * s;
  } else {
    f.E = Vec3{n.y * n.x, n.y * n.y - 1.0, n.y * n.z} * s;
    f.cB = Vec3{n.z, 0.0, -n.x} * s;
  }
  return f;
}

LCFrame lc_frame(const Vec3& n, const Vec3& a, const Vec3& b) {
  return {n, n * dot(n, a) - a - cross(b, n), n * dot(n, b) - b + cross(a, n)};
}

FieldSample plane_wave_lc(const LCFrame& frame, double k0, double amplitude,
                          const SpacetimePoint& p) {
  const Vec3 x{p.x1, p.x2, p.x3};
  const double phase = k0 * (p.x0 - dot(frame.n, x));
  const double c = std::cos(phase), s = std::sin(phase);
  const double scale = k0 * amplitude;
  FieldSample f;
  f.point = p;
  f.E = (frame.L * c - frame.C * s) * scale;
  f.cB = (frame.L * s + frame.C * c) * scale;
  return f;
}

FieldSample cylindrical_wave(double frequency, double axial_wavenumber, int m,
                             Complex lambda3, const SpacetimePoint& p, double amplitude) {
  if (frequency == 0.0) throw UsageError("cylindrical wave needs E != 0");
  const ScalarSeed s = ScalarSeed::cylindrical(amplitude, frequency, axial_wavenumber, m);
  const GradientSample g = seed_gradient(s, p);
  const Complex phi = seed_value(s, p);
  const double E = frequency, k = axial_wavenumber;
  const Complex scale = lambda3 / E;
  return from_psi({scale * (-kI * k * g[1] + E * g[2]),
                   scale * (-kI * k * g[2] - E * g[1]),
                   -lambda3 * ((E * E - k * k) / E) * phi},
                  p);
}

FieldSample cylindrical_wave_forward(double frequency, int m, Complex lambda3,
                                     const SpacetimePoint& p, double amplitude) {
  const auto parts = cylindrical_parts(frequency, frequency, m, p, amplitude);
  const Complex d = std::polar(1.0, parts.phi) * parts.pre *
                    (parts.radial.dR - m * parts.radial.R / parts.rho);
  return from_psi({-kI * lambda3 * d, -lambda3 * d, 0.0}, p);
}

FieldSample cylindrical_wave_backward(double frequency, int m, Complex lambda3,
                                      const SpacetimePoint& p, double amplitude) {
  const auto parts = cylindrical_parts(frequency, -frequency, m, p, amplitude);
  const Complex d = std::polar(1.0, -parts.phi) * parts.pre *
                    (parts.radial.dR + m * parts.radial.R / parts.rho);
  return from_psi({kI * lambda3 * d, -lambda3 * d, 0.0}, p);
}

PolarizationReport polarization_report(const FieldSample& f, std::optional<Vec3> direction,
                                       double tol) {
  PolarizationReport r;
  r.e_dot_cb = dot(f.E, f.cB);
  r.energy_difference = dot(f.E, f.E) - dot(f.cB, f.cB);
  const Vec3 s = cross(f.E, f.cB);
  const double mag = norm(s);
  const double ref = std::max(dot(f.E, f.E), dot(f.cB, f.cB));
  if (mag > 0.0 && mag > tol * ref) {
    r.direction_defined = true;
    r.poynting_direction = s / mag;
  }
  if (direction) {
    r.e_dot_n = dot(f.E, *direction);
    r.cb_dot_n = dot(f.cB, *direction);
  }
  return r;
}

FieldFn plane_wave_z_field(PlaneVariant v, double k0, double amplitude) {
  require_positive_k0(k0);
  return [=](const SpacetimePoint& p) { return plane_wave_z(v, k0, amplitude, p); };
}

FieldFn plane_wave_general_field(PlaneVariant v, const Vec3& n, double k0, double amplitude) {
  plane_wave_general(v, n, k0, amplitude, {});
  return [=](const SpacetimePoint& p) { return plane_wave_general(v, n, k0, amplitude, p); };
}

FieldFn plane_wave_lc_field(const LCFrame& frame, double k0, double amplitude) {
  return [=](const SpacetimePoint& p) { return plane_wave_lc(frame, k0, amplitude, p); };
}

FieldFn cylindrical_wave_field(double frequency, double axial_wavenumber, int m,
                               Complex lambda3, double amplitude) {
  if (frequency == 0.0) throw UsageError("cylindrical wave needs E != 0");
  ScalarSeed::cylindrical(amplitude, frequency, axial_wavenumber, m);
  return [=](const SpacetimePoint& p) {
    return cylindrical_wave(frequency, axial_wavenumber, m, lambda3, p, amplitude);
  };
}

}  // namespace rsmax
