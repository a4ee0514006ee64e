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

#include "rsmax/dual.hpp"

#include <utility>

namespace rsmax {

FieldSample dual_transform(const FieldSample& f) {
  return {-f.cB, f.E, f.point};
}

FieldSample phase_transform(const FieldSample& f, double chi) {
  const double c = std::cos(chi), s = std::sin(chi);
  return {f.E * c - f.cB * s, f.E * s + f.cB * c, f.point};
}

SourceTuple dual_transform_sources(const SourceTuple& s) {
  return {-s.rho_m, s.rho_e, s.j_m, -s.j_e};
}

FieldFn dual_field(FieldFn f) {
  return [f = std::move(f)](const SpacetimePoint& p) { return dual_transform(f(p)); };
}

FieldFn phase_field(FieldFn f, double chi) {
  return [f = std::move(f), chi](const SpacetimePoint& p) {
    return phase_transform(f(p), chi);
  };
}

}  // namespace rsmax
