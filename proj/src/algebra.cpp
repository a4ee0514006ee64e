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

#include "rsmax/algebra.hpp"

#include <string>

namespace rsmax {

namespace {

constexpr AlphaMatrix kAlpha1(AlphaMatrix::Entries{
    {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}});
constexpr AlphaMatrix kAlpha2(AlphaMatrix::Entries{
    {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}});
constexpr AlphaMatrix kAlpha3(AlphaMatrix::Entries{
    {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}});

static_assert(kAlpha1 * kAlpha2 == kAlpha3);
static_assert(kAlpha1 * kAlpha1 == -AlphaMatrix::identity());

RSVector sample_checked(const RSFieldFn& field, const SpacetimePoint& q) {
  RSVector v = field(q);
  if (!v.finite())
    throw NumericError("non-finite field sample at stencil point " + q.str());
  return v;
}

}  // namespace

AlphaMatrix alpha(int j) {
  switch (j) {
    case 1: return kAlpha1;
    case 2: return kAlpha2;
    case 3: return kAlpha3;
    default:
      throw UsageError("alpha index must be 1, 2 or 3, got " + std::to_string(j));
  }
}

RSVector maxwell_operator_from_derivatives(const std::array<RSVector, 4>& d) {
  RSVector r = d[0] * Complex(0.0, -1.0);
  for (int j = 1; j <= 3; ++j) r = r + alpha(j).apply(d[static_cast<size_t>(j)]);
  return r;
}

RSVector maxwell_operator_apply(const RSFieldFn& field, const SpacetimePoint& p,
                                double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw UsageError("finite-difference step must be positive");
  std::array<RSVector, 4> d;
  const Complex inv2h = 1.0 / (2.0 * h);
  for (int a = 0; a < 4; ++a) {
    const RSVector fwd = sample_checked(field, p.shifted(a, h));
    const RSVector bwd = sample_checked(field, p.shifted(a, -h));
    d[static_cast<size_t>(a)] = (fwd - bwd) * inv2h;
  }
  return maxwell_operator_from_derivatives(d);
}

}  // namespace rsmax
