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

// Squaring procedure: (i d_0 + alpha^j d_j) Phi arranged as four columns
// Psi^0..Psi^3, each annihilated by (-i d_0 + alpha^j d_j) whenever Phi solves
// the scalar wave equation. Columns are built from the analytic gradient,
// never by differentiating Phi numerically.

#pragma once

#include <array>
#include <span>

#include "rsmax/seeds.hpp"
#include "rsmax/types.hpp"

namespace rsmax {

/// Weights lambda_c = a_c + i b_c of the formal solutions.
struct Lambda {
  std::array<Complex, 4> l{};

  Complex operator[](int c) const { return l[static_cast<size_t>(c)]; }
  Complex& operator[](int c) { return l[static_cast<size_t>(c)]; }
  double a(int c) const { return l[static_cast<size_t>(c)].real(); }
  double b(int c) const { return l[static_cast<size_t>(c)].imag(); }

  /// Real unknown ordering used by the constraint systems:
  /// (a0, a1, a2, a3, b0, b1, b2, b3).
  static Lambda from_real8(std::span<const double, 8> v);
  std::array<double, 8> to_real8() const;

  Lambda operator+(const Lambda& o) const;
  Lambda operator*(Complex s) const;
  bool operator==(const Lambda&) const = default;
  bool finite() const;
};

/// [row][column]; column c is Psi^c.
using FormalMatrix = std::array<std::array<Complex, 4>, 4>;

FormalMatrix formal_solutions_from_gradient(const GradientSample& g);
FormalMatrix formal_solutions(const ScalarSeed& s, const SpacetimePoint& p);
RSVector column(const FormalMatrix& m, int c);

RSVector combine_from_gradient(const GradientSample& g, const Lambda& lambda);
/// lambda_0 Psi^0 + ... + lambda_3 Psi^3 at p.
RSVector combine(const ScalarSeed& s, const Lambda& lambda, const SpacetimePoint& p);

/// Column c of the formal matrix as a field function.
RSFieldFn formal_column_field(const ScalarSeed& s, int c);
/// The lambda combination as an RS field and as (E, cB) samples.
RSFieldFn combined_rs_field(const ScalarSeed& s, const Lambda& lambda);
FieldFn combined_field(const ScalarSeed& s, const Lambda& lambda);

}  // namespace rsmax
