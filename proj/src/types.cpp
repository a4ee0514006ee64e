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

#include "rsmax/types.hpp"

#include <cstdio>

namespace rsmax {

std::string SpacetimePoint::str() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", x0, x1, x2, x3);
  return buf;
}

FieldSample to_field_sample(const RSVector& psi, const SpacetimePoint& p) {
  FieldSample f;
  f.E = {psi[1].real(), psi[2].real(), psi[3].real()};
  f.cB = {psi[1].imag(), psi[2].imag(), psi[3].imag()};
  f.point = p;
  return f;
}

RSVector to_rs_vector(const FieldSample& f) {
  RSVector r;
  for (int k = 0; k < 3; ++k) r[k + 1] = f.psi(k);
  return r;
}

}  // namespace rsmax
