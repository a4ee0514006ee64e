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

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace rsmax {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Error taxonomy shared by every module. The C API maps each type onto a
// status code.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Spacetime point with x0 = ct. Units are whatever length the caller uses.
struct SpacetimePoint {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  constexpr double operator[](int a) const {
    return a == 0 ? x0 : a == 1 ? x1 : a == 2 ? x2 : x3;
  }
  constexpr double& operator[](int a) {
    return a == 0 ? x0 : a == 1 ? x1 : a == 2 ? x2 : x3;
  }
  /// Point shifted by `step` along axis `a`.
  constexpr SpacetimePoint shifted(int a, double step) const {
    SpacetimePoint q = *this;
    q[a] += step;
    return q;
  }
  bool finite() const {
    return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) &&
           std::isfinite(x3);
  }
  std::string str() const;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : i == 1 ? y : z; }
  constexpr double& operator[](int i) { return i == 0 ? x : i == 1 ? y : z; }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Four-component Riemann-Silberstein column (psi0, psi1, psi2, psi3). A
/// physical column has psi0 = 0 and psi_k = E_k + i cB_k.
struct RSVector {
  std::array<Complex, 4> c{};

  constexpr Complex operator[](int i) const { return c[static_cast<size_t>(i)]; }
  constexpr Complex& operator[](int i) { return c[static_cast<size_t>(i)]; }

  RSVector operator+(const RSVector& o) const {
    RSVector r;
    for (int i = 0; i < 4; ++i) r[i] = c[i] + o[i];
    return r;
  }
  RSVector operator-(const RSVector& o) const {
    RSVector r;
    for (int i = 0; i < 4; ++i) r[i] = c[i] - o[i];
    return r;
  }
  RSVector operator*(Complex s) const {
    RSVector r;
    for (int i = 0; i < 4; ++i) r[i] = c[i] * s;
    return r;
  }
  bool operator==(const RSVector&) const = default;

  double norm() const {
    double s = 0.0;
    for (const auto& z : c) s += std::norm(z);
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& z : c) m = std::max(m, std::abs(z));
    return m;
  }
  bool finite() const {
    for (const auto& z : c)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }
  /// |psi0| below tol_rel times the largest component magnitude.
  bool is_physical(double tol_rel = 1e-10) const {
    return std::abs(c[0]) <= tol_rel * max_abs();
  }
};

/// Real E and cB at a point (c = 1 internally; cB is stored, never B).
struct FieldSample {
  Vec3 E;
  Vec3 cB;
  SpacetimePoint point;

  bool finite() const { return rsmax::finite(E) && rsmax::finite(cB); }
  /// Spatial part of the RS column, psi = E + i cB.
  Complex psi(int k) const { return {E[k], cB[k]}; }
};

/// Reads E = Re psi, cB = Im psi from the spatial part of an RS column. The
/// zeroth component is dropped; check is_physical() first where it matters.
FieldSample to_field_sample(const RSVector& psi, const SpacetimePoint& p);
RSVector to_rs_vector(const FieldSample& f);

using FieldFn = std::function<FieldSample(const SpacetimePoint&)>;
using RSFieldFn = std::function<RSVector(const SpacetimePoint&)>;

}  // namespace rsmax
