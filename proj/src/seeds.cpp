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

#include "rsmax/seeds.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <cmath>

namespace rsmax {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw UsageError(std::string(what) + " must be finite");
}

std::array<double, 4> lowered(const std::array<double, 4>& k) {
  return {k[0], -k[1], -k[2], -k[3]};
}

double plane_phase(const ScalarSeed& s, const SpacetimePoint& p) {
  const auto& k = s.wave_vector();
  return k[0] * p.x0 - k[1] * p.x1 - k[2] * p.x2 - k[3] * p.x3;
}

struct Polar {
  double rho;
  double cos_phi;
  double sin_phi;
  double phi;

  // exp(i n varphi)
  Complex turn(int n) const { return std::polar(1.0, n * phi); }
};

Complex ipow(Complex z, int n) {
  Complex r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

Polar polar_checked(const SpacetimePoint& p) {
  const double rho = std::hypot(p.x1, p.x2);
  if (!(rho > kRhoMin))
    throw DomainError("cylindrical seed evaluated at rho = " + std::to_string(rho) +
                      " inside the axis exclusion rho_min = 1e-9");
  return {rho, p.x1 / rho, p.x2 / rho, std::atan2(p.x2, p.x1)};
}

// exp(i E x0) exp(i k z)
Complex carrier(const ScalarSeed& s, const SpacetimePoint& p) {
  return std::polar(1.0, s.frequency() * p.x0 + s.axial_wavenumber() * p.x3);
}

// u_n = J_n(q rho) exp(i n varphi)
Complex bessel_mode(int n, double q, const Polar& pol) {
  return bessel_j(n, q * pol.rho) * pol.turn(n);
}

// Transverse Hessian of u = R(rho) exp(i m varphi): (d11, d22, d12).
std::array<Complex, 3> transverse_hessian(const ScalarSeed& s, const SpacetimePoint& p,
                                          const Polar& pol) {
  const int m = s.azimuthal_index();
  const double q = s.transverse_wavenumber();
  if (q > 0.0) {
    const Complex up2 = bessel_mode(m + 2, q, pol);
    const Complex u0 = bessel_mode(m, q, pol);
    const Complex um2 = bessel_mode(m - 2, q, pol);
    const double q2 = q * q / 4.0;
    return {q2 * (up2 - 2.0 * u0 + um2), -q2 * (up2 + 2.0 * u0 + um2),
            q2 * (up2 - um2) / kI};
  }
  // u = z^n (m >= 0) or conj(z)^n (m < 0), z = x1 + i x2.
  const int n = std::abs(m);
  if (n < 2) return {0.0, 0.0, 0.0};
  const double sgn = m >= 0 ? 1.0 : -1.0;
  const Complex z(p.x1, sgn * p.x2);
  const Complex c = static_cast<double>(n * (n - 1)) * ipow(z, n - 2);
  return {c, -c, sgn * kI * c};
}

}  // namespace

std::string_view to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::RealPlane: return "real_plane";
    case SeedKind::ComplexPlane: return "complex_plane";
    case SeedKind::Cylindrical: return "cylindrical";
  }
  return "unknown";
}

ScalarSeed ScalarSeed::real_plane(double amplitude, const std::array<double, 4>& k,
                                  NullCheck check) {
  require_finite(amplitude, "amplitude");
  for (double v : k) require_finite(v, "wave vector component");
  ScalarSeed s;
  s.kind_ = SeedKind::RealPlane;
  s.amplitude_ = amplitude;
  s.k_ = k;
  if (check == NullCheck::Strict && !s.is_null())
    throw UsageError("plane seed wave vector is not null: k0^2 - |k|^2 != 0");
  return s;
}

ScalarSeed ScalarSeed::complex_plane(double amplitude, const std::array<double, 4>& k,
                                     NullCheck check) {
  ScalarSeed s = real_plane(amplitude, k, check);
  s.kind_ = SeedKind::ComplexPlane;
  return s;
}

ScalarSeed ScalarSeed::cylindrical(double amplitude, double frequency,
                                   double axial_wavenumber, int azimuthal_index) {
  require_finite(amplitude, "amplitude");
  require_finite(frequency, "frequency E");
  require_finite(axial_wavenumber, "axial wavenumber k");
  const double q2 = frequency * frequency - axial_wavenumber * axial_wavenumber;
  if (q2 < 0.0)
    throw UsageError("cylindrical seed needs E^2 >= k^2 (evanescent modes unsupported)");
  ScalarSeed s;
  s.kind_ = SeedKind::Cylindrical;
  s.amplitude_ = amplitude;
  s.frequency_ = frequency;
  s.axial_ = axial_wavenumber;
  s.m_ = azimuthal_index;
  // Exact zero when |k| == |E| so the degenerate branch is taken reliably.
  s.q_ = std::abs(frequency) == std::abs(axial_wavenumber) ? 0.0 : std::sqrt(q2);
  return s;
}

double ScalarSeed::wave_scale() const {
  const double w = is_plane() ? std::abs(k_[0]) : std::abs(frequency_);
  return w > 0.0 ? w : 1.0;
}

bool ScalarSeed::is_null(double tol_rel) const {
  if (!is_plane()) return false;
  const double k0sq = k_[0] * k_[0];
  const double ksq = k_[1] * k_[1] + k_[2] * k_[2] + k_[3] * k_[3];
  return std::abs(k0sq - ksq) <= tol_rel * std::max(k0sq, ksq);
}

double GradientSample::max_abs() const {
  double m = 0.0;
  for (const auto& z : F) m = std::max(m, std::abs(z));
  return m;
}

double bessel_j(int order, double x) {
  if (x < 0.0 || !std::isfinite(x)) throw DomainError("bessel_j needs finite x >= 0");
  const int n = std::abs(order);
  const double v = std::cyl_bessel_j(static_cast<double>(n), x);
  return (order < 0 && (n % 2) == 1) ? -v : v;
}

double bessel_j_prime(int order, double x) {
  return 0.5 * (bessel_j(order - 1, x) - bessel_j(order + 1, x));
}

RadialSample radial_profile(const ScalarSeed& s, double rho) {
  if (s.kind() != SeedKind::Cylindrical)
    throw UsageError("radial profile requested for a plane seed");
  const int m = s.azimuthal_index();
  const double q = s.transverse_wavenumber();
  if (q > 0.0) return {bessel_j(m, q * rho), q * bessel_j_prime(m, q * rho)};
  const int n = std::abs(m);
  if (n == 0) return {1.0, 0.0};
  return {std::pow(rho, n), n * std::pow(rho, n - 1)};
}

Complex seed_value(const ScalarSeed& s, const SpacetimePoint& p) {
  switch (s.kind()) {
    case SeedKind::RealPlane:
      return s.amplitude() * std::sin(plane_phase(s, p));
    case SeedKind::ComplexPlane:
      return s.amplitude() * std::polar(1.0, plane_phase(s, p));
    case SeedKind::Cylindrical: {
      const Polar pol = polar_checked(p);
      return s.amplitude() * carrier(s, p) * pol.turn(s.azimuthal_index()) *
             radial_profile(s, pol.rho).R;
    }
  }
  return 0.0;
}

GradientSample seed_gradient(const ScalarSeed& s, const SpacetimePoint& p) {
  GradientSample g;
  switch (s.kind()) {
    case SeedKind::RealPlane: {
      const auto kappa = lowered(s.wave_vector());
      const double c = s.amplitude() * std::cos(plane_phase(s, p));
      for (int a = 0; a < 4; ++a) g.F[a] = kappa[a] * c;
      return g;
    }
    case SeedKind::ComplexPlane: {
      const auto kappa = lowered(s.wave_vector());
      const Complex phi = seed_value(s, p);
      for (int a = 0; a < 4; ++a) g.F[a] = kI * kappa[a] * phi;
      return g;
    }
    case SeedKind::Cylindrical: {
      const Polar pol = polar_checked(p);
      const int m = s.azimuthal_index();
      const RadialSample r = radial_profile(s, pol.rho);
      const Complex pre = s.amplitude() * carrier(s, p) * pol.turn(m);
      const Complex phi = pre * r.R;
      const double mr = m * r.R / pol.rho;
      g.F[0] = kI * s.frequency() * phi;
      g.F[1] = pre * Complex(pol.cos_phi * r.dR, -mr * pol.sin_phi);
      g.F[2] = pre * Complex(pol.sin_phi * r.dR, mr * pol.cos_phi);
      g.F[3] = kI * s.axial_wavenumber() * phi;
      return g;
    }
  }
  return g;
}

Hessian seed_hessian(const ScalarSeed& s, const SpacetimePoint& p) {
  Hessian H{};
  switch (s.kind()) {
    case SeedKind::RealPlane:
    case SeedKind::ComplexPlane: {
      const auto kappa = lowered(s.wave_vector());
      const Complex phi = seed_value(s, p);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) H[a][b] = -kappa[a] * kappa[b] * phi;
      return H;
    }
    case SeedKind::Cylindrical: {
      const Polar pol = polar_checked(p);
      const GradientSample g = seed_gradient(s, p);
      const Complex phi = seed_value(s, p);
      const double E = s.frequency(), k = s.axial_wavenumber();
      // d0 and d3 act as multiplication by iE and ik.
      for (int a = 0; a < 4; ++a) {
        H[0][a] = H[a][0] = kI * E * g[a];
        H[3][a] = H[a][3] = kI * k * g[a];
      }
      H[0][0] = -E * E * phi;
      H[3][3] = -k * k * phi;
      H[0][3] = H[3][0] = -E * k * phi;
      const auto t = transverse_hessian(s, p, pol);
      const Complex pre = s.amplitude() * carrier(s, p);
      H[1][1] = pre * t[0];
      H[2][2] = pre * t[1];
      H[1][2] = H[2][1] = pre * t[2];
      return H;
    }
  }
  return H;
}

double kfg_residual(const ScalarSeed& s, const SpacetimePoint& p, double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw UsageError("finite-difference step must be positive");
  const Complex centre = seed_value(s, p);
  Complex box = 0.0;
  for (int a = 0; a < 4; ++a) {
    const Complex d2 =
        (seed_value(s, p.shifted(a, h)) - 2.0 * centre + seed_value(s, p.shifted(a, -h))) /
        (h * h);
    box += a == 0 ? -d2 : d2;
  }
  return std::abs(box);
}

// ---------------------------------------------------------------------------
// key = value parsing

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
  const auto t = trim(text);
  double v = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
    throw UsageError("invalid number for " + std::string(what) + ": '" +
                     std::string(text) + "'");
  return v;
}

int parse_int(std::string_view text, std::string_view what) {
  const auto t = trim(text);
  int v = 0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last)
    throw UsageError("invalid integer for " + std::string(what) + ": '" +
                     std::string(text) + "'");
  return v;
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues kv;
  size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("line " + std::to_string(line_no) + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty())
      throw UsageError("line " + std::to_string(line_no) + ": empty key");
    kv.insert_or_assign(std::string(key), std::string(trim(line.substr(eq + 1))));
  }
  return kv;
}

ScalarSeed seed_from_key_values(const KeyValues& kv) {
  const auto get = [&](std::string_view key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  const auto number = [&](std::string_view key, std::optional<double> fallback) {
    if (const auto* v = get(key)) return parse_double(*v, key);
    if (fallback) return *fallback;
    throw UsageError("seed is missing required key '" + std::string(key) + "'");
  };

  const auto* kind = get("kind");
  if (!kind) throw UsageError("seed is missing required key 'kind'");
  const double A = number("A", 1.0);
  if (*kind == "real_plane" || *kind == "complex_plane") {
    const std::array<double, 4> k{number("k0", std::nullopt), number("k1", 0.0),
                                  number("k2", 0.0), number("k3", 0.0)};
    return *kind == "real_plane" ? ScalarSeed::real_plane(A, k)
                                 : ScalarSeed::complex_plane(A, k);
  }
  if (*kind == "cylindrical") {
    const int m = get("m") ? parse_int(*get("m"), "m") : 0;
    return ScalarSeed::cylindrical(A, number("E", std::nullopt), number("k", 0.0), m);
  }
  throw UsageError("unknown seed kind '" + *kind +
                   "' (expected real_plane, complex_plane or cylindrical)");
}

}  // namespace rsmax
