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

#include "rsmax/squaring.hpp"

namespace rsmax {

Lambda Lambda::from_real8(std::span<const double, 8> v) {
  Lambda r;
  for (int c = 0; c < 4; ++c) r[c] = Complex(v[c], v[c + 4]);
  return r;
}

std::array<double, 8> Lambda::to_real8() const {
  std::array<double, 8> v{};
  for (int c = 0; c < 4; ++c) {
    v[c] = a(c);
    v[c + 4] = b(c);
  }
  return v;
}

Lambda Lambda::operator+(const Lambda& o) const {
  Lambda r;
  for (int c = 0; c < 4; ++c) r[c] = l[c] + o[c];
  return r;
}

Lambda Lambda::operator*(Complex s) const {
  Lambda r;
  for (int c = 0; c < 4; ++c) r[c] = l[c] * s;
  return r;
}

bool Lambda::finite() const {
  for (const auto& z : l)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

FormalMatrix formal_solutions_from_gradient(const GradientSample& g) {
  const Complex F0 = g[0], F1 = g[1], F2 = g[2], F3 = g[3];
  const Complex iF0 = kI * F0;
  return {{{iF0, F1, F2, F3},
           {-F1, iF0, -F3, F2},
           {-F2, F3, iF0, -F1},
           {-F3, -F2, F1, iF0}}};
}

FormalMatrix formal_solutions(const ScalarSeed& s, const SpacetimePoint& p) {
  return formal_solutions_from_gradient(seed_gradient(s, p));
}

RSVector column(const FormalMatrix& m, int c) {
  if (c < 0 || c > 3) throw UsageError("formal column index must be 0..3, got " + std::to_string(c));
  RSVector v;
  for (int r = 0; r < 4; ++r) v[r] = m[r][c];
  return v;
}

RSVector combine_from_gradient(const GradientSample& g, const Lambda& lambda) {
  const FormalMatrix m = formal_solutions_from_gradient(g);
  RSVector v;
  for (int r = 0; r < 4; ++r) {
    Complex s = 0.0;
    for (int c = 0; c < 4; ++c) s += lambda[c] * m[r][c];
    v[r] = s;
  }
  return v;
}

RSVector combine(const ScalarSeed& s, const Lambda& lambda, const SpacetimePoint& p) {
  return combine_from_gradient(seed_gradient(s, p), lambda);
}

RSFieldFn formal_column_field(const ScalarSeed& s, int c) {
  if (c < 0 || c > 3) throw UsageError("formal column index must be 0..3");
  return [s, c](const SpacetimePoint& p) { return column(formal_solutions(s, p), c); };
}

RSFieldFn combined_rs_field(const ScalarSeed& s, const Lambda& lambda) {
  return [s, lambda](const SpacetimePoint& p) { return combine(s, lambda, p); };
}

FieldFn combined_field(const ScalarSeed& s, const Lambda& lambda) {
  return [s, lambda](const SpacetimePoint& p) {
    return to_field_sample(combine(s, lambda, p), p);
  };
}

}  // namespace rsmax
