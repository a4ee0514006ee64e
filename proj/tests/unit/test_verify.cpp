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

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "rsmax/squaring.hpp"
#include "rsmax/verify.hpp"
#include "rsmax/waves.hpp"

using namespace rsmax;

namespace {

const std::vector<double> kSteps{1e-2, 5e-3, 2.5e-3};

}  // namespace

TEST_CASE("static uniform field has zero residual") {
  const FieldFn f = [](const SpacetimePoint& p) {
    FieldSample s;
    s.point = p;
    s.E = {1.0, -2.0, 0.5};
    s.cB = {0.0, 3.0, 1.0};
    return s;
  };
  const ResidualReport r = maxwell_residual(f, test::plane_point(), 1e-3);
  CHECK(r.max_residual == 0.0);
  CHECK(r.relative == 0.0);
  const ConvergenceResult c = convergence_order(f, {}, kSteps);
  CHECK(c.floor_limited);
  CHECK(std::isnan(c.slope));
}

TEST_CASE("constructed waves have small residuals") {
  for (int t = 0; t < 20; ++t) {
    const Vec3 n = test::unit_vector();
    const double k0 = test::uniform(0.5, 2.0);
    const FieldFn w = plane_wave_lc_field(lc_frame(n, test::box(1.0), test::box(1.0)), k0, 1.0);
    const ResidualReport r = maxwell_residual(w, test::plane_point(), 1e-4, std::nullopt, k0);
    CHECK(r.relative < 1e-7);
    CHECK(r.h == 1e-4);
  }
}

TEST_CASE("corrupted wave fails by a wide margin") {
  const double k0 = 1.5, A = 0.8;
  const FieldFn bad = corrupt_field(plane_wave_z_field(PlaneVariant::I, k0, A));
  // Flipping E_y breaks curl E + d0 cB = 0 by 2 k0^2 A sin.
  const SpacetimePoint p{0.3, 0.0, 0.0, -0.2};
  const ResidualReport r = maxwell_residual(bad, p, 1e-4);
  const double expect = 2 * k0 * k0 * A * std::abs(std::sin(k0 * (p.x0 - p.x3)));
  CHECK(r.curl_E_plus_dt_cB == doctest::Approx(expect).epsilon(1e-6));
  CHECK(r.max_residual > 0.1 * k0 * k0 * A);
  const ConvergenceResult c = convergence_order(bad, p, kSteps, k0);
  CHECK(std::abs(c.slope) < 0.1);
}

TEST_CASE("second-order convergence on an oblique wave") {
  const Vec3 n = Vec3{1.0, 2.0, 2.0} / 3.0;
  const FieldFn w = plane_wave_general_field(PlaneVariant::II, n, 2.0, 1.0);
  const ConvergenceResult c = convergence_order(w, {0.1, 0.2, -0.3, 0.4}, kSteps, 2.0);
  REQUIRE_FALSE(c.floor_limited);
  CHECK(c.slope == doctest::Approx(2.0).epsilon(0.05));
  CHECK(c.residuals.size() == 3);
}

TEST_CASE("matrix residual of a formal column converges") {
  const ScalarSeed s = ScalarSeed::cylindrical(1.0, 1.0, 0.3, 2);
  const RSFieldFn col = formal_column_field(s, 1);
  const SpacetimePoint p{0.2, 1.0, 1.5, -0.4};
  const MatrixResidualReport r = matrix_residual(col, p, 1e-4, 1.0);
  CHECK(r.relative < 1e-7);
  const ConvergenceResult c = matrix_convergence_order(col, p, kSteps, 1.0);
  CHECK(c.slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("sources are subtracted with their signs") {
  // E = (x1, 0, 0): div E = 1, everything else zero.
  const FieldFn f = [](const SpacetimePoint& p) {
    FieldSample s;
    s.point = p;
    s.E = {p.x1, 0.0, 0.0};
    return s;
  };
  const SpacetimePoint p{0.0, 0.5, 0.0, 0.0};
  const ResidualReport bare = maxwell_residual(f, p, 1e-3);
  CHECK(bare.components.div_E == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bare.div_E == doctest::Approx(1.0).epsilon(1e-12));
  SourceTuple src;
  src.rho_e = 1.0;
  CHECK(maxwell_residual(f, p, 1e-3, src).max_residual < 1e-12);
  src.rho_e = -1.0;
  CHECK(maxwell_residual(f, p, 1e-3, src).components.div_E ==
        doctest::Approx(2.0).epsilon(1e-12));

  // cB = (0, 0, x0): d0 cB_z = 1 feeds Faraday's law.
  const FieldFn g = [](const SpacetimePoint& q) {
    FieldSample s;
    s.point = q;
    s.cB = {0.0, 0.0, q.x0};
    return s;
  };
  const ResidualReport rg = maxwell_residual(g, {}, 1e-3);
  CHECK(rg.components.faraday.z == doctest::Approx(1.0).epsilon(1e-12));
  SourceTuple jm;
  jm.j_m = {0, 0, 1};
  CHECK(maxwell_residual(g, {}, 1e-3, jm).max_residual < 1e-12);
}

TEST_CASE("verification errors") {
  const FieldFn w = plane_wave_z_field(PlaneVariant::I, 1.0, 1.0);
  CHECK_THROWS_AS(maxwell_residual(w, {}, 0.0), UsageError);
  CHECK_THROWS_AS(maxwell_residual(w, {}, -1.0), UsageError);
  CHECK_THROWS_AS(convergence_order(w, {}, {1e-2, 5e-3}), UsageError);
  const FieldFn nan = [](const SpacetimePoint& p) {
    FieldSample s;
    s.point = p;
    s.E.x = p.x1 > 0.0 ? std::nan("") : 0.0;
    return s;
  };
  CHECK_THROWS_AS(maxwell_residual(nan, {}, 1e-3), NumericError);
  CHECK_THROWS_AS(log_log_slope({1.0, 1.0}, {1.0, 2.0}), UsageError);
  CHECK(log_log_slope({1.0, 2.0, 4.0}, {1.0, 4.0, 16.0}) == doctest::Approx(2.0));
}
