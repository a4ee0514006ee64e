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

#include "doctest.h"
#include "helpers.hpp"
#include "rsmax/dual.hpp"
#include "rsmax/physicality.hpp"
#include "rsmax/squaring.hpp"
#include "rsmax/waves.hpp"

using namespace rsmax;

TEST_CASE("z plane waves: literal values") {
  const SpacetimePoint o{};
  const FieldSample a = plane_wave_z(PlaneVariant::I, 2.0, 0.5, o);
  CHECK(a.E == Vec3{0.0, -1.0, 0.0});
  CHECK(a.cB == Vec3{1.0, 0.0, 0.0});
  const FieldSample b = plane_wave_z(PlaneVariant::II, 2.0, 0.5, o);
  CHECK(b.E == Vec3{1.0, 0.0, 0.0});
  CHECK(b.cB == Vec3{0.0, 1.0, 0.0});
  // Quarter period later the cosine vanishes.
  const FieldSample q = plane_wave_z(PlaneVariant::I, 1.0, 1.0, {kPi / 2, 0, 0, 0});
  CHECK(test::max_abs(q) < 1e-15);
  CHECK_THROWS_AS(plane_wave_z(PlaneVariant::I, 0.0, 1.0, o), UsageError);
  CHECK_THROWS_AS(plane_wave_z_field(PlaneVariant::II, -1.0, 1.0), UsageError);
}

TEST_CASE("general plane waves along z are the duals of the z waves") {
  // Their weights carry an extra factor i, which is the dual map.
  for (int t = 0; t < 20; ++t) {
    const SpacetimePoint p = test::plane_point();
    for (auto v : {PlaneVariant::I, PlaneVariant::II}) {
      const FieldSample g = plane_wave_general(v, {0, 0, 1}, 1.3, 0.7, p);
      const FieldSample z = plane_wave_z(v, 1.3, 0.7, p);
      CHECK(test::max_diff(g, dual_transform(z)) < 1e-15);
    }
  }
  CHECK_THROWS_AS(plane_wave_general(PlaneVariant::I, {1, 1, 0}, 1.0, 1.0, {}), UsageError);
  CHECK_THROWS_AS(plane_wave_general(PlaneVariant::I, {1, 0, 0}, 0.0, 1.0, {}), UsageError);
}

TEST_CASE("general plane waves equal the squared real seed with fixed weights") {
  for (int t = 0; t < 20; ++t) {
    const Vec3 n = test::unit_vector();
    const double k0 = test::uniform(0.5, 3.0), A = test::uniform(0.5, 2.0);
    const ScalarSeed s = ScalarSeed::real_plane(A, test::null_k(k0, n));
    Lambda l1, l2;
    l1[0] = n.x;
    l1[1] = kI;
    l2[0] = n.y;
    l2[2] = kI;
    for (int u = 0; u < 5; ++u) {
      const SpacetimePoint p = test::plane_point();
      const RSVector c1 = combine(s, l1, p), c2 = combine(s, l2, p);
      CHECK(std::abs(c1[0]) < 1e-13 * k0 * A);
      CHECK(std::abs(c2[0]) < 1e-13 * k0 * A);
      CHECK(test::max_diff(to_field_sample(c1, p),
                           plane_wave_general(PlaneVariant::I, n, k0, A, p)) < 1e-13 * k0 * A);
      CHECK(test::max_diff(to_field_sample(c2, p),
                           plane_wave_general(PlaneVariant::II, n, k0, A, p)) < 1e-13 * k0 * A);
    }
  }
}

TEST_CASE("lc frame: literal example and orthogonality") {
  const LCFrame f = lc_frame({0, 0, 1}, {1, 0, 0}, {0, 0, 0});
  // L = -a = (-1, 0, 0); C = a x n = (0, -1, 0).
  CHECK(f.L == Vec3{-1, 0, 0});
  CHECK(f.C == Vec3{0, -1, 0});
  for (int t = 0; t < 50; ++t) {
    const Vec3 n = test::unit_vector();
    const LCFrame g = lc_frame(n, test::box(1.0), test::box(1.0));
    CHECK(std::abs(dot(g.L, n)) < 1e-14);
    CHECK(std::abs(dot(g.C, n)) < 1e-14);
    // C = n x L for a unit n.
    const Vec3 d = g.C - cross(n, g.L);
    CHECK(norm(d) < 1e-14);
  }
}

TEST_CASE("lc plane wave is a transverse null field travelling along n") {
  for (int t = 0; t < 20; ++t) {
    const Vec3 n = test::unit_vector();
    const LCFrame f = lc_frame(n, test::box(1.0), test::box(1.0));
    const FieldSample w = plane_wave_lc(f, 1.4, 0.8, test::plane_point());
    const PolarizationReport r = polarization_report(w, n);
    const double e2 = dot(w.E, w.E);
    CHECK(std::abs(r.e_dot_cb) < 1e-13 * e2);
    CHECK(std::abs(r.energy_difference) < 1e-13 * e2);
    CHECK(std::abs(*r.e_dot_n) < 1e-13 * std::sqrt(e2));
    CHECK(std::abs(*r.cb_dot_n) < 1e-13 * std::sqrt(e2));
    REQUIRE(r.direction_defined);
    CHECK(norm(r.poynting_direction - n) < 1e-12);
  }
}

TEST_CASE("lc plane wave matches the squared complex seed") {
  // A exp(i phi) with weights lambda_0 = b.n - i a.n, lambda_j = a_j + i b_j.
  for (int t = 0; t < 20; ++t) {
    const Vec3 n = test::unit_vector(), a = test::box(1.0), b = test::box(1.0);
    const double k0 = test::uniform(0.5, 2.0), A = test::uniform(0.5, 2.0);
    const ScalarSeed s = ScalarSeed::complex_plane(A, test::null_k(k0, n));
    Lambda l;
    l[0] = Complex(dot(b, n), -dot(a, n));
    l[1] = Complex(a.x, b.x);
    l[2] = Complex(a.y, b.y);
    l[3] = Complex(a.z, b.z);
    const LCFrame f = lc_frame(n, a, b);
    for (int u = 0; u < 5; ++u) {
      const SpacetimePoint p = test::plane_point();
      const RSVector c = combine(s, l, p);
      const FieldSample w = plane_wave_lc(f, k0, A, p);
      const double scale = k0 * A * (1.0 + norm(a) + norm(b));
      CHECK(std::abs(c[0]) < 1e-13 * scale);
      CHECK(test::max_diff(to_field_sample(c, p), w) < 1e-13 * scale);
    }
  }
}

TEST_CASE("cylindrical wave equals the admissible ray combination") {
  for (int m : {-2, 0, 1, 3}) {
    const double E = 1.3, k = 0.6;
    const Complex l3{0.4, -0.9};
    const ScalarSeed s = ScalarSeed::cylindrical(1.5, E, k, m);
    const Lambda l = cylindrical_ray(E, k) * l3;
    for (int t = 0; t < 20; ++t) {
      const SpacetimePoint p = test::cylinder_point();
      const RSVector c = combine(s, l, p);
      CHECK(std::abs(c[0]) < 1e-14);
      CHECK(test::max_diff(to_field_sample(c, p), cylindrical_wave(E, k, m, l3, p, 1.5)) <
            1e-14);
    }
  }
  CHECK_THROWS_AS(cylindrical_wave(0.0, 0.0, 0, 1.0, {0, 1, 0, 0}), UsageError);
  CHECK_THROWS_AS(cylindrical_wave(1.0, 2.0, 0, 1.0, {0, 1, 0, 0}), UsageError);
  CHECK_THROWS_AS(cylindrical_wave(1.0, 0.5, 0, 1.0, {0, 0, 0, 0}), DomainError);
}

TEST_CASE("k = +-E closed forms") {
  for (int m : {-3, -1, 0, 1, 2}) {
    const double E = 0.9;
    const Complex l3{1.1, 0.3};
    for (int t = 0; t < 20; ++t) {
      const SpacetimePoint p = test::cylinder_point();
      const FieldSample fw = cylindrical_wave_forward(E, m, l3, p);
      const FieldSample bw = cylindrical_wave_backward(E, m, l3, p);
      const double tol = 1e-12 * std::max(1.0, test::max_abs(cylindrical_wave(E, E, m, l3, p)));
      CHECK(test::max_diff(fw, cylindrical_wave(E, E, m, l3, p)) < tol);
      CHECK(test::max_diff(bw, cylindrical_wave(E, -E, m, l3, p)) < tol);
      CHECK(fw.E.z == 0.0);
      CHECK(bw.cB.z == 0.0);
    }
  }
  CHECK_THROWS_AS(cylindrical_wave_forward(1.0, 1, 1.0, {0, 1e-10, 0, 0}), DomainError);
}

TEST_CASE("polarisation report edge cases") {
  FieldSample zero;
  const PolarizationReport r = polarization_report(zero);
  CHECK_FALSE(r.direction_defined);
  CHECK(r.poynting_direction == Vec3{});
  CHECK_FALSE(r.e_dot_n.has_value());

  FieldSample parallel;
  parallel.E = {1, 0, 0};
  parallel.cB = {2, 0, 0};
  const PolarizationReport q = polarization_report(parallel, Vec3{0, 0, 1});
  CHECK_FALSE(q.direction_defined);
  CHECK(q.e_dot_cb == 2.0);
  CHECK(q.energy_difference == -3.0);
  CHECK(*q.e_dot_n == 0.0);

  FieldSample z = plane_wave_z(PlaneVariant::II, 1.0, 1.0, {});
  const PolarizationReport w = polarization_report(z);
  CHECK(w.direction_defined);
  CHECK(w.poynting_direction == Vec3{0, 0, 1});
}
