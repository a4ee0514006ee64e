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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "rsmax/physicality.hpp"

using namespace rsmax;

namespace {

// Rank by Gaussian elimination with partial pivoting, independent of the SVD.
int elimination_rank(std::vector<Row8> rows, double tol_rel) {
  double scale = 0.0;
  for (const auto& r : rows)
    for (double v : r) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  int rank = 0;
  for (int col = 0; col < 8 && rank < static_cast<int>(rows.size()); ++col) {
    size_t best = static_cast<size_t>(rank);
    for (size_t i = best + 1; i < rows.size(); ++i)
      if (std::abs(rows[i][col]) > std::abs(rows[best][col])) best = i;
    if (std::abs(rows[best][col]) <= tol_rel * scale) continue;
    std::swap(rows[best], rows[static_cast<size_t>(rank)]);
    const Row8 piv = rows[static_cast<size_t>(rank)];
    for (size_t i = static_cast<size_t>(rank) + 1; i < rows.size(); ++i) {
      const double f = rows[i][col] / piv[col];
      for (int c = 0; c < 8; ++c) rows[i][c] -= f * piv[c];
    }
    ++rank;
  }
  return rank;
}

double row_dot(const Row8& r, const Lambda& l) {
  const auto v = l.to_real8();
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += r[i] * v[i];
  return s;
}

std::vector<Row8> as_rows(const std::vector<Lambda>& ls) {
  std::vector<Row8> out;
  for (const auto& l : ls) out.push_back(l.to_real8());
  return out;
}

Row8 r8(std::initializer_list<double> v) {
  Row8 r{};
  std::copy(v.begin(), v.end(), r.begin());
  return r;
}

}  // namespace

TEST_CASE("nullity agrees with an elimination rank") {
  const Vec3 n = test::unit_vector();
  const std::vector<ScalarSeed> seeds{
      ScalarSeed::real_plane(1.0, {1.0, 0.0, 0.0, 1.0}),
      ScalarSeed::real_plane(0.7, test::null_k(2.0, n)),
      ScalarSeed::complex_plane(1.1, test::null_k(1.3, n)),
      ScalarSeed::cylindrical(1.0, 1.0, 0.5, 1),
      ScalarSeed::cylindrical(2.0, 1.5, -0.3, 0),
  };
  for (const auto& s : seeds) {
    const auto pts = sample_points(s, kDefaultSamplePoints);
    const ConstraintSystem cs = assemble_constraints(s, pts);
    const PhysicalBasis pb = solve_null_space(cs);
    CHECK(pb.nullity == 8 - elimination_rank(cs.rows, 1e-9));
    CHECK_FALSE(pb.rank_ambiguous);
    CHECK(pb.dim_physical + pb.kernel_dim == pb.nullity);
    CHECK(static_cast<int>(pb.basis.size()) == pb.dim_physical);
    CHECK(static_cast<int>(pb.kernel.size()) == pb.kernel_dim);
    double rmax = 0.0;
    for (const auto& r : cs.rows)
      for (double v : r) rmax = std::max(rmax, std::abs(v));
    for (const auto* set : {&pb.basis, &pb.kernel})
      for (const auto& l : *set)
        for (const auto& r : cs.rows) CHECK(std::abs(row_dot(r, l)) < 1e-12 * rmax);
  }
}

TEST_CASE("physical directions give psi0 = 0 at fresh points, kernel gives zero") {
  const Vec3 n = test::unit_vector();
  const std::vector<ScalarSeed> seeds{
      ScalarSeed::real_plane(1.0, {1.0, 0.0, 0.0, 1.0}),
      ScalarSeed::real_plane(1.0, test::null_k(1.7, n)),
      ScalarSeed::complex_plane(0.9, test::null_k(0.6, n)),
      ScalarSeed::cylindrical(1.0, 1.2, 0.8, 2),
  };
  for (const auto& s : seeds) {
    const PhysicalBasis pb = solve_physical(s);
    REQUIRE(pb.dim_physical > 0);
    for (int t = 0; t < 100; ++t) {
      const SpacetimePoint p = s.is_plane() ? test::plane_point() : test::cylinder_point();
      const double g = seed_gradient(s, p).max_abs();
      for (const auto& l : pb.basis) CHECK(std::abs(combine(s, l, p)[0]) < 1e-12 * std::max(g, 1.0));
      for (const auto& l : pb.kernel) CHECK(combine(s, l, p).max_abs() < 1e-12 * std::max(g, 1.0));
    }
  }
}

TEST_CASE("z-directed real seed: constraint structure and split") {
  const ScalarSeed s = ScalarSeed::real_plane(1.0, {1.0, 0.0, 0.0, 1.0});
  const PhysicalBasis pb = solve_physical(s);
  CHECK(pb.nullity == 6);
  CHECK(pb.kernel_dim == 4);
  CHECK(pb.dim_physical == 2);

  // Null space {b0 = -a3, b3 = a0}, a1, b1, a2, b2 free.
  std::vector<Row8> expect_null{r8({1, 0, 0, 0, 0, 0, 0, 1}), r8({0, 0, 0, 1, -1, 0, 0, 0}),
                                r8({0, 1, 0, 0, 0, 0, 0, 0}), r8({0, 0, 1, 0, 0, 0, 0, 0}),
                                r8({0, 0, 0, 0, 0, 1, 0, 0}), r8({0, 0, 0, 0, 0, 0, 1, 0})};
  std::vector<Row8> got_null = as_rows(pb.basis);
  for (const auto& k : as_rows(pb.kernel)) got_null.push_back(k);
  CHECK(max_principal_angle(expect_null, got_null) < 1e-10);

  // Physical: lambda1 = -i lambda2, i.e. a1 = b2, b1 = -a2.
  const std::vector<Row8> expect_phys{r8({0, 1, 0, 0, 0, 0, 1, 0}), r8({0, 0, 1, 0, 0, -1, 0, 0})};
  CHECK(max_principal_angle(expect_phys, as_rows(pb.basis)) < 1e-10);
}

TEST_CASE("plane seeds: sampled null space matches the closed form") {
  for (int t = 0; t < 20; ++t) {
    const Vec3 n = test::unit_vector();
    const ScalarSeed s = ScalarSeed::real_plane(test::uniform(0.5, 2.0),
                                                test::null_k(test::uniform(0.5, 3.0), n));
    const PhysicalBasis pb = solve_physical(s);
    std::vector<Row8> got = as_rows(pb.basis);
    for (const auto& k : as_rows(pb.kernel)) got.push_back(k);
    const auto alg = algebraic_plane_null_space(s);
    REQUIRE(got.size() == alg.size());
    CHECK(max_principal_angle(alg, got) < 1e-8);
    // Closed-form vectors satisfy a0 = b.n, b0 = -(a.n).
    for (const auto& v : alg) {
      CHECK(v[0] == doctest::Approx(v[5] * n.x + v[6] * n.y + v[7] * n.z).epsilon(1e-12));
      CHECK(v[4] == doctest::Approx(-(v[1] * n.x + v[2] * n.y + v[3] * n.z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("cylindrical seed: one admissible complex ray") {
  const double E = 1.0, k = 0.5;
  const ScalarSeed s = ScalarSeed::cylindrical(1.0, E, k, 1);
  const PhysicalBasis pb = solve_physical(s);
  CHECK(pb.nullity == 2);
  CHECK(pb.dim_physical == 2);
  const Lambda ray = cylindrical_ray(E, k);
  CHECK(ray[3] == Complex(1.0, 0.0));
  CHECK(std::abs(ray[0] - Complex(0.0, 0.5)) < 1e-15);
  const Lambda iray = ray * kI;
  const std::vector<Row8> expect{ray.to_real8(), iray.to_real8()};
  CHECK(max_principal_angle(expect, as_rows(pb.basis)) < 1e-8);
  CHECK(pb.singular_values[5] > 1e-3 * pb.singular_values[0]);
  CHECK_THROWS_AS(cylindrical_ray(0.0, 1.0), UsageError);
}

TEST_CASE("degenerate and invalid systems") {
  ConstraintSystem zero;
  zero.rows.assign(4, Row8{});
  const PhysicalBasis pb = solve_null_space(zero);
  CHECK(pb.all_zero);
  CHECK(pb.nullity == 8);
  CHECK(pb.dim_physical == 8);

  const ScalarSeed s = ScalarSeed::real_plane(1.0, {1.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS(assemble_constraints(s, std::vector<SpacetimePoint>{}), UsageError);
  CHECK_THROWS_AS(solve_null_space(assemble_constraints(s, sample_points(s, 4)), 0.0),
                  UsageError);
  CHECK_THROWS_AS(
      assemble_real_seed_constraints(ScalarSeed::complex_plane(1.0, {1, 0, 0, 1}),
                                     sample_points(s, 4)),
      UsageError);
  ConstraintSystem bad;
  bad.rows.push_back(Row8{std::nan(""), 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(solve_null_space(bad), NumericError);
}

TEST_CASE("solve is deterministic") {
  const ScalarSeed s = ScalarSeed::complex_plane(1.0, {2.0, 0.0, 1.2, 1.6});
  const PhysicalBasis a = solve_physical(s), b = solve_physical(s);
  CHECK(as_rows(a.basis) == as_rows(b.basis));
  CHECK(as_rows(a.kernel) == as_rows(b.kernel));
  CHECK(a.singular_values == b.singular_values);
}

TEST_CASE("dependence determinant vanishes for unit n") {
  for (int t = 0; t < 50; ++t) {
    const Vec3 n = test::unit_vector(), a = test::box(2.0), b = test::box(2.0);
    CHECK(std::abs(check_linear_dependence_3x3(n, a, b)) < 1e-12);
  }
  // n = z, a = (1, 0, 0), b = (0, 1, 0): columns (0, -1, 0), (0, -1, 0), 0.
  const auto m = dependence_matrix({0, 0, 1}, {1, 0, 0}, {0, 1, 0});
  CHECK(m[0][0] == 0.0);
  CHECK(m[1][0] == -1.0);
  CHECK(m[1][1] == -1.0);
  CHECK(m[2][2] == 0.0);
  // A non-unit n breaks the identity.
  CHECK(check_linear_dependence_3x3({0, 0, 2}, {1, 1, 1}, {1, 1, 1}) == doctest::Approx(15.0));
}
