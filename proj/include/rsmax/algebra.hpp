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

// Real 4x4 alpha matrices and the first-order matrix Maxwell operator
//
//   (-i d_0 + alpha^j d_j) Psi = 0,   Psi = (0, E + i cB).
//
// The generators have integer entries, so the whole multiplication table is
// checked in exact integer arithmetic.

#pragma once

#include <array>

#include "rsmax/types.hpp"

namespace rsmax {

class AlphaMatrix {
 public:
  using Entries = std::array<std::array<int, 4>, 4>;

  constexpr AlphaMatrix() = default;
  constexpr explicit AlphaMatrix(const Entries& e) : e_(e) {}

  static constexpr AlphaMatrix identity() {
    return AlphaMatrix(Entries{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  }

  constexpr int operator()(int r, int c) const { return e_[r][c]; }
  constexpr const Entries& entries() const { return e_; }

  constexpr AlphaMatrix operator*(const AlphaMatrix& o) const {
    Entries r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int s = 0;
        for (int k = 0; k < 4; ++k) s += e_[i][k] * o.e_[k][j];
        r[i][j] = s;
      }
    return AlphaMatrix(r);
  }
  constexpr AlphaMatrix operator-() const {
    Entries r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i][j] = -e_[i][j];
    return AlphaMatrix(r);
  }
  constexpr bool operator==(const AlphaMatrix&) const = default;

  RSVector apply(const RSVector& v) const {
    RSVector r;
    for (int i = 0; i < 4; ++i) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k)
        if (e_[i][k] != 0) s += static_cast<double>(e_[i][k]) * v[k];
      r[i] = s;
    }
    return r;
  }

 private:
  Entries e_{};
};

/// alpha^j for j in {1, 2, 3}; throws UsageError otherwise.
AlphaMatrix alpha(int j);

/// (-i d_0 + alpha^j d_j) Psi at p, all derivatives by second-order central
/// differences with step h. Throws NumericError naming the stencil point when
/// a sample is not finite, UsageError when h <= 0.
RSVector maxwell_operator_apply(const RSFieldFn& field, const SpacetimePoint& p,
                                double h);

/// Same operator applied to a column whose derivatives are already known,
/// derivatives[a] = d_a Psi.
RSVector maxwell_operator_from_derivatives(const std::array<RSVector, 4>& derivatives);

}  // namespace rsmax
