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

// Separation of physical solutions: find every lambda for which the
// combination sum_c lambda_c Psi^c has an identically vanishing zeroth
// component, i.e. d_c psi_0 = 0 for c = 0..3.
//
// Real seeds:    [b0 d0 - a_j d_j] F_c = 0,  [a0 d0 + b_j d_j] F_c = 0
// Complex seeds: Re and Im of [-lambda_0 d0 + i lambda_j d_j] F_c = 0
//
// Both are enforced at sampled spacetime points using analytic second
// derivatives of Phi. The stacked real system over (a0..a3, b0..b3) is solved
// by SVD; null directions whose combination vanishes at every sample point
// form the kernel, the rest are physical.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "rsmax/seeds.hpp"
#include "rsmax/squaring.hpp"

namespace rsmax {

inline constexpr double kDefaultTolRank = 1e-9;
inline constexpr int kDefaultSamplePoints = 32;

enum class ConstraintFamily {
  BTime,        // [b0 d0 - a_j d_j] F_c
  ATime,        // [a0 d0 + b_j d_j] F_c
  ComplexReal,  // Re [-lambda_0 d0 + i lambda_j d_j] F_c
  ComplexImag,  // Im [-lambda_0 d0 + i lambda_j d_j] F_c
};

struct RowTag {
  int point = 0;
  int component = 0;
  ConstraintFamily family = ConstraintFamily::BTime;
};

using Row8 = std::array<double, 8>;

struct ConstraintSystem {
  std::vector<Row8> rows;
  std::vector<RowTag> tags;
  std::vector<SpacetimePoint> points;
  /// Real map lambda -> (Re psi_r, Im psi_r), r = 0..3, eight rows per point.
  std::vector<Row8> field_rows;
  /// max |F_a| over the sample points.
  double gradient_scale = 0.0;
};

/// Quasi-random (Halton) sample points in a box scaled to the seed's
/// wavelength. Cylindrical seeds are sampled at rho in [0.5, 5].
std::vector<SpacetimePoint> sample_points(const ScalarSeed& s, int count, int offset = 1);

ConstraintSystem assemble_real_seed_constraints(const ScalarSeed& s,
                                                std::span<const SpacetimePoint> points);
ConstraintSystem assemble_complex_seed_constraints(const ScalarSeed& s,
                                                   std::span<const SpacetimePoint> points);
/// Real-seed system for RealPlane, complex-seed system otherwise.
ConstraintSystem assemble_constraints(const ScalarSeed& s,
                                      std::span<const SpacetimePoint> points);

struct PhysicalBasis {
  std::vector<Lambda> basis;   // physical directions (orthonormal in R^8)
  std::vector<Lambda> kernel;  // directions giving an identically zero field
  int nullity = 0;             // real dimension of the constraint null space
  int kernel_dim = 0;
  int dim_physical = 0;        // nullity - kernel_dim, real
  std::vector<double> singular_values;  // descending, absolute
  double tol_rank = kDefaultTolRank;
  bool all_zero = false;        // every constraint row vanished
  bool rank_ambiguous = false;  // some sigma/sigma_max within 10x of tol_rank
};

PhysicalBasis solve_null_space(const ConstraintSystem& cs,
                               double tol_rank = kDefaultTolRank);

struct SolveOptions {
  double tol_rank = kDefaultTolRank;
  int sample_count = kDefaultSamplePoints;
  std::vector<SpacetimePoint> extra_points;
};

/// Sample, assemble and solve in one call.
PhysicalBasis solve_physical(const ScalarSeed& s, const SolveOptions& options = {});

/// Closed-form null space of the plane-seed system, b0 = -(a.n), a0 = b.n,
/// as six orthonormal real 8-vectors.
std::vector<Row8> algebraic_plane_null_space(const ScalarSeed& s);

/// The admissible cylindrical direction lambda_1 = lambda_2 = 0,
/// -i lambda_0 E - lambda_3 k = 0, normalised to lambda_3 = 1.
Lambda cylindrical_ray(double frequency, double axial_wavenumber);

/// Largest principal angle (radians) between the spans of two sets of
/// 8-vectors. Both sets are orthonormalised internally.
double max_principal_angle(std::span<const Row8> a, std::span<const Row8> b);

/// Columns E_(1), E_(2), E_(3) of the three elementary plane solutions built
/// from coefficients (a_j, b_j) along unit direction n.
std::array<std::array<double, 3>, 3> dependence_matrix(const Vec3& n, const Vec3& a,
                                                       const Vec3& b);
/// det of dependence_matrix; identically zero for unit n.
double check_linear_dependence_3x3(const Vec3& n, const Vec3& a, const Vec3& b);

}  // namespace rsmax
