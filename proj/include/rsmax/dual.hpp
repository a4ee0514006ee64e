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

// Dual and phase transformations. Psi -> i Psi is the dual map
//   E^D = -cB,  cB^D = E,
// and the sources transform so the sourced equations keep their form.

#pragma once

#include "rsmax/types.hpp"

namespace rsmax {

struct SourceTuple {
  double rho_e = 0.0;
  double rho_m = 0.0;
  Vec3 j_e;
  Vec3 j_m;

  bool finite() const {
    return std::isfinite(rho_e) && std::isfinite(rho_m) && rsmax::finite(j_e) &&
           rsmax::finite(j_m);
  }
  bool operator==(const SourceTuple&) const = default;
};

FieldSample dual_transform(const FieldSample& f);

/// E + i cB -> exp(i chi) (E + i cB).
FieldSample phase_transform(const FieldSample& f, double chi);

/// rho_e <- -rho_m, j_e <- j_m, rho_m <- rho_e, j_m <- -j_e.
SourceTuple dual_transform_sources(const SourceTuple& s);

FieldFn dual_field(FieldFn f);
FieldFn phase_field(FieldFn f, double chi);

}  // namespace rsmax
