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

#include "rsmax/physicality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace rsmax {

namespace {

using Mat = Eigen::MatrixXd;
using Vec8 = Eigen::Matrix<double, 8, 1>;

// Pivot order of the canonical basis: a1, b1, a2, b2, a3, b3, a0, b0.
constexpr std::array<int, 8> kAxisOrder{1, 5, 2, 6, 3, 7, 0, 4};

double radical_inverse(int index, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * (index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

Lambda to_lambda(const Vec8& v) {
  std::array<double, 8> a{};
  for (int i = 0; i < 8; ++i) a[i] = v(i);
  return Lambda::from_real8(a);
}

Mat stack(const std::vector<Row8>& rows) {
  Mat m(static_cast<Eigen::Index>(rows.size()), 8);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < 8; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][c];
  return m;
}

// Orthonormal columns spanning the same space as `cols`, in a form that does
// not depend on how the SVD happened to rotate the subspace.
Mat canonical_basis(const Mat& cols) {
  const Eigen::Index d = cols.cols();
  if (d == 0) return cols;
  Mat r = cols.transpose();  // d x 8, row-reduce
  Eigen::Index row = 0;
  for (int axis : kAxisOrder) {
    if (row == d) break;
    Eigen::Index best = row;
    for (Eigen::Index i = row + 1; i < d; ++i)
      if (std::abs(r(i, axis)) > std::abs(r(best, axis))) best = i;
    if (std::abs(r(best, axis)) < 1e-10) continue;
    r.row(row).swap(r.row(best));
    r.row(row) /= r(row, axis);
    for (Eigen::Index i = 0; i < d; ++i)
      if (i != row) r.row(i) -= r(i, axis) * r.row(row);
    ++row;
  }
  Mat q(8, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Vec8 v = r.row(j).transpose();
    for (Eigen::Index i = 0; i < j; ++i) v -= q.col(i).dot(v) * q.col(i);
    v.normalize();
    for (int i = 0; i < 8; ++i)
      if (std::abs(v(i)) < 1e-14) v(i) = 0.0;
    for (int axis : kAxisOrder)
      if (v(axis) != 0.0) {
        if (v(axis) < 0.0) v = -v;
        break;
      }
    q.col(j) = v;
  }
  return q;
}

Mat orthonormal(std::span<const Row8> vs) {
  Mat m(8, static_cast<Eigen::Index>(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j)
    for (int i = 0; i < 8; ++i) m(i, static_cast<Eigen::Index>(j)) = vs[j][i];
  Eigen::HouseholderQR<Mat> qr(m);
  return qr.householderQ() * Mat::Identity(8, m.cols());
}

void append_field_rows(ConstraintSystem& cs, const GradientSample& g) {
  const FormalMatrix fm = formal_solutions_from_gradient(g);
  for (int r = 0; r < 4; ++r) {
    Row8 re{}, im{};
    for (int c = 0; c < 4; ++c) {
      const double x = fm[r][c].real(), y = fm[r][c].imag();
      // (a + ib)(x + iy) = (a x - b y) + i (a y + b x)
      re[c] = x;
      re[c + 4] = -y;
      im[c] = y;
      im[c + 4] = x;
    }
    cs.field_rows.push_back(re);
    cs.field_rows.push_back(im);
  }
  cs.gradient_scale = std::max(cs.gradient_scale, g.max_abs());
}

void require_points(std::span<const SpacetimePoint> points) {
  if (points.empty()) throw UsageError("constraint assembly needs at least one sample point");
  for (const auto& p : points)
    if (!p.finite()) throw UsageError("non-finite sample point " + p.str());
}

}  // namespace

std::vector<SpacetimePoint> sample_points(const ScalarSeed& s, int count, int offset) {
  std::vector<SpacetimePoint> pts;
  pts.reserve(static_cast<size_t>(std::max(count, 0)));
  const double half = kPi / s.wave_scale();
  for (int i = 0; i < count; ++i) {
    const int idx = offset + i;
    const double u0 = radical_inverse(idx, 2), u1 = radical_inverse(idx, 3);
    const double u2 = radical_inverse(idx, 5), u3 = radical_inverse(idx, 7);
    SpacetimePoint p;
    p.x0 = half * (2.0 * u0 - 1.0);
    p.x3 = half * (2.0 * u3 - 1.0);
    if (s.kind() == SeedKind::Cylindrical) {
      const double rho = 0.5 + 4.5 * u1;
      const double phi = 2.0 * kPi * u2;
      p.x1 = rho * std::cos(phi);
      p.x2 = rho * std::sin(phi);
    } else {
      p.x1 = half * (2.0 * u1 - 1.0);
      p.x2 = half * (2.0 * u2 - 1.0);
    }
    pts.push_back(p);
  }
  return pts;
}

ConstraintSystem assemble_real_seed_constraints(const ScalarSeed& s,
                                                std::span<const SpacetimePoint> points) {
  if (s.kind() != SeedKind::RealPlane)
    throw UsageError("real-seed constraints need a real-valued seed");
  require_points(points);
  ConstraintSystem cs;
  cs.points.assign(points.begin(), points.end());
  for (size_t ip = 0; ip < points.size(); ++ip) {
    const Hessian H = seed_hessian(s, points[ip]);
    for (int c = 0; c < 4; ++c) {
      // d_a F_c = H[a][c]
      Row8 bt{}, at{};
      bt[4] = H[0][c].real();
      at[0] = H[0][c].real();
      for (int j = 1; j <= 3; ++j) {
        bt[j] = -H[j][c].real();
        at[j + 4] = H[j][c].real();
      }
      const int pi = static_cast<int>(ip);
      cs.rows.push_back(bt);
      cs.tags.push_back({pi, c, ConstraintFamily::BTime});
      cs.rows.push_back(at);
      cs.tags.push_back({pi, c, ConstraintFamily::ATime});
    }
    append_field_rows(cs, seed_gradient(s, points[ip]));
  }
  return cs;
}

ConstraintSystem assemble_complex_seed_constraints(const ScalarSeed& s,
                                                   std::span<const SpacetimePoint> points) {
  require_points(points);
  ConstraintSystem cs;
  cs.points.assign(points.begin(), points.end());
  for (size_t ip = 0; ip < points.size(); ++ip) {
    const Hessian H = seed_hessian(s, points[ip]);
    for (int c = 0; c < 4; ++c) {
      // -(a0 + i b0) H0c + i (aj + i bj) Hjc, split into real and imaginary rows.
      Row8 re{}, im{};
      const double h0r = H[0][c].real(), h0i = H[0][c].imag();
      re[0] = -h0r;
      re[4] = h0i;
      im[0] = -h0i;
      im[4] = -h0r;
      for (int j = 1; j <= 3; ++j) {
        const double hr = H[j][c].real(), hi = H[j][c].imag();
        re[j] = -hi;
        re[j + 4] = -hr;
        im[j] = hr;
        im[j + 4] = -hi;
      }
      const int pi = static_cast<int>(ip);
      cs.rows.push_back(re);
      cs.tags.push_back({pi, c, ConstraintFamily::ComplexReal});
      cs.rows.push_back(im);
      cs.tags.push_back({pi, c, ConstraintFamily::ComplexImag});
    }
    append_field_rows(cs, seed_gradient(s, points[ip]));
  }
  return cs;
}

ConstraintSystem assemble_constraints(const ScalarSeed& s,
                                      std::span<const SpacetimePoint> points) {
  return s.kind() == SeedKind::RealPlane ? assemble_real_seed_constraints(s, points)
                                         : assemble_complex_seed_constraints(s, points);
}

PhysicalBasis solve_null_space(const ConstraintSystem& cs, double tol_rank) {
  if (!(tol_rank > 0.0)) throw UsageError("tol_rank must be positive");
  for (const auto& r : cs.rows)
    for (double v : r)
      if (!std::isfinite(v)) throw NumericError("non-finite constraint row");

  PhysicalBasis out;
  out.tol_rank = tol_rank;

  const Mat A = stack(cs.rows);
  Eigen::JacobiSVD<Mat> svd(A.rows() > 0 ? A : Mat::Zero(1, 8), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = sv.size() > 0 ? sv(0) : 0.0;

  if (!(smax > 0.0)) {
    out.all_zero = true;
    out.nullity = out.dim_physical = 8;
    for (int i = 0; i < 8; ++i) out.basis.push_back(to_lambda(Vec8::Unit(i)));
    return out;
  }

  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double rel = sv(i) / smax;
    if (rel > tol_rank) ++rank;
    if (rel >= tol_rank / 10.0 && rel <= tol_rank * 10.0) out.rank_ambiguous = true;
  }
  out.nullity = 8 - rank;
  const Mat N = svd.matrixV().rightCols(out.nullity);

  Mat phys = N, kern(8, 0);
  if (out.nullity > 0 && !cs.field_rows.empty()) {
    const Mat G = stack(cs.field_rows) * N;
    Eigen::JacobiSVD<Mat> gsvd(G, Eigen::ComputeFullV);
    const auto& gs = gsvd.singularValues();
    const double thresh = 1e-10 * std::max(cs.gradient_scale, 1e-300) *
                          std::sqrt(static_cast<double>(cs.points.size()));
    int live = 0;
    for (Eigen::Index i = 0; i < gs.size(); ++i)
      if (gs(i) > thresh) ++live;
    phys = N * gsvd.matrixV().leftCols(live);
    kern = N * gsvd.matrixV().rightCols(out.nullity - live);
  }
  out.kernel_dim = static_cast<int>(kern.cols());
  out.dim_physical = out.nullity - out.kernel_dim;

  const Mat pc = canonical_basis(phys), kc = canonical_basis(kern);
  for (Eigen::Index j = 0; j < pc.cols(); ++j) out.basis.push_back(to_lambda(pc.col(j)));
  for (Eigen::Index j = 0; j < kc.cols(); ++j) out.kernel.push_back(to_lambda(kc.col(j)));
  return out;
}

PhysicalBasis solve_physical(const ScalarSeed& s, const SolveOptions& options) {
  std::vector<SpacetimePoint> pts = sample_points(s, options.sample_count);
  pts.insert(pts.end(), options.extra_points.begin(), options.extra_points.end());
  return solve_null_space(assemble_constraints(s, pts), options.tol_rank);
}

std::vector<Row8> algebraic_plane_null_space(const ScalarSeed& s) {
  if (!s.is_plane()) throw UsageError("algebraic null space is defined for plane seeds");
  const auto& k = s.wave_vector();
  if (k[0] == 0.0) throw UsageError("plane seed with k0 = 0 has no direction");
  const Vec3 n{k[1] / k[0], k[2] / k[0], k[3] / k[0]};
  // Free unknowns a1..a3, b1..b3; a0 = b.n, b0 = -(a.n).
  std::vector<Row8> raw;
  for (int j = 1; j <= 3; ++j) {
    Row8 va{}, vb{};
    va[j] = 1.0;
    va[4] = -n[j - 1];
    vb[j + 4] = 1.0;
    vb[0] = n[j - 1];
    raw.push_back(va);
    raw.push_back(vb);
  }
  const Mat q = orthonormal(raw);
  std::vector<Row8> out(6);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 8; ++i) out[j][i] = q(i, j);
  return out;
}

Lambda cylindrical_ray(double frequency, double axial_wavenumber) {
  if (frequency == 0.0) throw UsageError("cylindrical ray needs E != 0");
  Lambda l;
  l[3] = 1.0;
  l[0] = kI * axial_wavenumber / frequency;
  return l;
}

double max_principal_angle(std::span<const Row8> a, std::span<const Row8> b) {
  if (a.size() != b.size()) return kPi / 2.0;
  if (a.empty()) return 0.0;
  const Mat qa = orthonormal(a), qb = orthonormal(b);
  // sin(theta_max) = || (I - P_a) Q_b ||_2, accurate for tiny angles.
  const Mat resid = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Mat> svd(resid);
  return std::asin(std::min(1.0, svd.singularValues().maxCoeff()));
}

std::array<std::array<double, 3>, 3> dependence_matrix(const Vec3& n, const Vec3& a,
                                                       const Vec3& b) {
  const double n1 = n.x, n2 = n.y, n3 = n.z;
  return {{{b.x * n1 * n1 - b.x, b.y * n2 * n1 + a.y * n3, b.z * n3 * n1 - a.z * n2},
           {b.x * n1 * n2 - a.x * n3, b.y * n2 * n2 - b.y, b.z * n3 * n2 + a.z * n1},
           {b.x * n1 * n3 + a.x * n2, b.y * n2 * n3 - a.y * n1, b.z * n3 * n3 - b.z}}};
}

double check_linear_dependence_3x3(const Vec3& n, const Vec3& a, const Vec3& b) {
  const auto m = dependence_matrix(n, a, b);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace rsmax
