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

// Shared helpers for the unit tests.

#pragma once

#include <random>

#include "rsmax/types.hpp"

namespace rsmax::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x7e57'0001ULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Vec3 unit_vector() {
  std::normal_distribution<double> nd;
  for (;;) {
    const Vec3 v{nd(rng()), nd(rng()), nd(rng())};
    if (norm(v) > 1e-3) return v / norm(v);
  }
}

inline Vec3 box(double half) {
  return {uniform(-half, half), uniform(-half, half), uniform(-half, half)};
}

inline SpacetimePoint plane_point(double half = 3.0) {
  return {uniform(-half, half), uniform(-half, half), uniform(-half, half), uniform(-half, half)};
}

inline SpacetimePoint cylinder_point() {
  const double rho = uniform(0.5, 5.0), phi = uniform(0.0, 2.0 * kPi);
  return {uniform(-3, 3), rho * std::cos(phi), rho * std::sin(phi), uniform(-3, 3)};
}

inline std::array<double, 4> null_k(double k0, const Vec3& n) {
  return {k0, k0 * n.x, k0 * n.y, k0 * n.z};
}

inline double max_diff(const FieldSample& a, const FieldSample& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    m = std::max({m, std::abs(a.E[i] - b.E[i]), std::abs(a.cB[i] - b.cB[i])});
  return m;
}

inline double max_abs(const FieldSample& a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max({m, std::abs(a.E[i]), std::abs(a.cB[i])});
  return m;
}

}  // namespace rsmax::test
