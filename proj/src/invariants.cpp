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

#include "rsmax/invariants.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <random>

#include "rsmax/algebra.hpp"
#include "rsmax/dual.hpp"
#include "rsmax/physicality.hpp"
#include "rsmax/seeds.hpp"
#include "rsmax/squaring.hpp"
#include "rsmax/verify.hpp"
#include "rsmax/waves.hpp"

namespace rsmax {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Tally {
 public:
  Tally(int id, std::string title) {
    r_.id = id;
    r_.title = std::move(title);
  }

  // Records measured <= limit; NaN fails.
  void bound(const std::string& what, double measured, double limit) {
    if (!(measured <= limit)) fail(what + ": " + fmt(measured) + " > " + fmt(limit));
    const double ratio = limit > 0.0 ? measured / limit
                                     : (measured > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    if (worst_.empty() || !(ratio <= worst_ratio_)) {
      worst_ratio_ = ratio;
      worst_ = what + " = " + fmt(measured) + " (limit " + fmt(limit) + ")";
    }
  }
  void require(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  InvariantResult finish() {
    r_.passed = r_.failures.empty() && dropped_ == 0;
    r_.detail = worst_.empty() ? notes_ : "worst " + worst_ + (notes_.empty() ? "" : "; " + notes_);
    if (dropped_ > 0) r_.failures.push_back("... " + std::to_string(dropped_) + " more");
    return r_;
  }

 private:
  void fail(std::string msg) {
    if (r_.failures.size() < 12)
      r_.failures.push_back(std::move(msg));
    else
      ++dropped_;
  }

  InvariantResult r_;
  std::string worst_;
  std::string notes_;
  double worst_ratio_ = 0.0;
  int dropped_ = 0;
};

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Vec3 unit() {
    std::normal_distribution<double> nd;
    for (;;) {
      const Vec3 v{nd(gen), nd(gen), nd(gen)};
      const double l = norm(v);
      if (l > 1e-3) return v / l;
    }
  }
  Vec3 box(double half) { return {uniform(-half, half), uniform(-half, half), uniform(-half, half)}; }
  SpacetimePoint plane_point(double k0) {
    const double half = kPi / k0;
    return {uniform(-half, half), uniform(-half, half), uniform(-half, half), uniform(-half, half)};
  }
  SpacetimePoint cylinder_point(double frequency) {
    const double rho = uniform(0.5, 5.0), phi = uniform(0.0, 2.0 * kPi);
    const double half = kPi / std::abs(frequency);
    return {uniform(-half, half), rho * std::cos(phi), rho * std::sin(phi), uniform(-half, half)};
  }
  std::mt19937_64 gen;
};

std::array<double, 4> null_vector(double k0, const Vec3& n) {
  return {k0, k0 * n.x, k0 * n.y, k0 * n.z};
}

double max_abs(const FieldSample& f) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max({m, std::abs(f.E[i]), std::abs(f.cB[i])});
  return m;
}

double max_diff(const FieldSample& a, const FieldSample& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    m = std::max({m, std::abs(a.E[i] - b.E[i]), std::abs(a.cB[i] - b.cB[i])});
  return m;
}

const std::vector<double> kConvergenceSteps{1e-2, 5e-3, 2.5e-3};

InvariantResult alpha_table() {
  Tally t(1, "alpha algebra table");
  const AlphaMatrix I = AlphaMatrix::identity();
  int checked = 0;
  for (int j = 1; j <= 3; ++j) {
    t.require("(alpha^" + std::to_string(j) + ")^2 = -I", alpha(j) * alpha(j) == -I);
    ++checked;
  }
  // (j, k, l) cyclic: alpha^j alpha^k = -alpha^k alpha^j = alpha^l.
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& c : cyc) {
    const AlphaMatrix a = alpha(c[0]), b = alpha(c[1]), l = alpha(c[2]);
    const std::string jk = std::to_string(c[0]) + std::to_string(c[1]);
    t.require("alpha" + jk + " = alpha^" + std::to_string(c[2]), a * b == l);
    t.require("-alpha" + jk.substr(1) + jk.substr(0, 1) + " = alpha^" + std::to_string(c[2]),
              -(b * a) == l);
    t.require("alpha" + jk + " = -alpha" + jk.substr(1) + jk.substr(0, 1), a * b == -(b * a));
    checked += 3;
  }
  t.note(std::to_string(checked) + " relations in integer arithmetic");
  return t.finish();
}

InvariantResult squaring_validity(Rng& rng) {
  Tally t(2, "formal columns solve the matrix Maxwell equation");
  struct Case {
    std::string name;
    ScalarSeed seed;
  };
  const Vec3 n1 = rng.unit(), n2 = rng.unit();
  std::vector<Case> cases{
      {"real plane", ScalarSeed::real_plane(1.1, null_vector(1.3, n1))},
      {"complex plane", ScalarSeed::complex_plane(0.8, null_vector(0.9, n2))},
      {"cylindrical m=2", ScalarSeed::cylindrical(1.0, 1.2, 0.5, 2)},
      {"cylindrical m=-1", ScalarSeed::cylindrical(0.7, 0.9, -0.3, -1)},
      {"cylindrical m=0", ScalarSeed::cylindrical(1.0, -1.5, 1.0, 0)}};
  double worst_slope_dev = 0.0;
  int floor_hits = 0;
  for (const auto& cs : cases) {
    const bool plane = cs.seed.is_plane();
    const double h = plane ? 1e-4 : 1e-5;
    const double scale = cs.seed.wave_scale();
    for (int ip = 0; ip < 4; ++ip) {
      const SpacetimePoint p = plane ? rng.plane_point(scale) : rng.cylinder_point(scale);
      for (int c = 0; c < 4; ++c) {
        const RSFieldFn col = formal_column_field(cs.seed, c);
        const std::string tag = cs.name + " column " + std::to_string(c);
        t.bound(tag + " relative residual", matrix_residual(col, p, h, scale).relative, 1e-6);
        const ConvergenceResult conv = matrix_convergence_order(col, p, kConvergenceSteps, scale);
        if (conv.floor_limited) {
          ++floor_hits;
          continue;
        }
        worst_slope_dev = std::max(worst_slope_dev, std::abs(conv.slope - 2.0));
        t.require(tag + " slope " + fmt(conv.slope) + " outside 2 +- 0.1",
                  std::abs(conv.slope - 2.0) <= 0.1);
      }
    }
  }
  t.note("max |slope - 2| = " + fmt(worst_slope_dev));
  if (floor_hits > 0) t.note(std::to_string(floor_hits) + " floor-limited");
  return t.finish();
}

std::vector<Row8> full_null_space(const PhysicalBasis& pb) {
  std::vector<Row8> v;
  for (const auto& l : pb.basis) v.push_back(l.to_real8());
  for (const auto& l : pb.kernel) v.push_back(l.to_real8());
  return v;
}

// Distance of x from span(vs), vs orthonormal.
double distance_from_span(const Row8& x, const std::vector<Row8>& vs) {
  Row8 r = x;
  for (const auto& v : vs) {
    double d = 0.0;
    for (int i = 0; i < 8; ++i) d += v[i] * x[i];
    for (int i = 0; i < 8; ++i) r[i] -= d * v[i];
  }
  double s = 0.0;
  for (double e : r) s += e * e;
  return std::sqrt(s);
}

InvariantResult plane_physicality(Rng& rng) {
  Tally t(3, "plane-seed physical/kernel separation");
  for (int trial = 0; trial < 8; ++trial) {
    const Vec3 n = trial == 0 ? Vec3{0, 0, 1} : rng.unit();
    const double k0 = rng.uniform(0.5, 3.0), A = rng.uniform(0.5, 2.0);
    const ScalarSeed s = trial % 2 == 0 ? ScalarSeed::real_plane(A, null_vector(k0, n))
                                        : ScalarSeed::complex_plane(A, null_vector(k0, n));
    const PhysicalBasis pb = solve_physical(s);
    const std::string tag = std::string(to_string(s.kind())) + " trial " + std::to_string(trial);
    t.require(tag + ": nullity " + std::to_string(pb.nullity) + " != 6", pb.nullity == 6);
    t.bound(tag + " principal angle to algebraic null space",
            max_principal_angle(full_null_space(pb), algebraic_plane_null_space(s)), 1e-8);
  }

  const ScalarSeed z = ScalarSeed::real_plane(1.0, {1.0, 0.0, 0.0, 1.0});
  const PhysicalBasis pb = solve_physical(z);
  t.require("z seed nullity " + std::to_string(pb.nullity) + " != 6", pb.nullity == 6);
  std::vector<Row8> kernel;
  for (const auto& l : pb.kernel) kernel.push_back(l.to_real8());
  Lambda ray;
  ray[0] = 1.0;
  ray[3] = kI;
  auto ray8 = ray.to_real8();
  for (double& e : ray8) e /= std::sqrt(2.0);
  t.bound("z seed: distance of lambda_3 = i lambda_0 from kernel", distance_from_span(ray8, kernel),
          1e-10);

  std::vector<Lambda> probes = pb.kernel;
  probes.push_back(ray);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const SpacetimePoint p = rng.plane_point(1.0);
    for (const auto& l : probes) worst = std::max(worst, combine(z, l, p).norm());
  }
  t.bound("z seed: kernel field norm at 100 fresh points", worst, 1e-10);

  t.note("z seed dim_physical = " + std::to_string(pb.dim_physical) + " real, kernel " +
         std::to_string(pb.kernel_dim) + " real");
  t.require("z seed dim_physical " + std::to_string(pb.dim_physical) +
                " real != 4 real (2 complex); Psi^2 = -i Psi^1 makes lambda_1 = i lambda_2 a "
                "kernel direction",
            pb.dim_physical == 4);
  return t.finish();
}

InvariantResult cylindrical_physicality(Rng& rng) {
  Tally t(4, "cylindrical-seed admissible ray");
  for (int trial = 0; trial < 20; ++trial) {
    const double E = rng.uniform(0.5, 2.0) * (rng.integer(0, 1) ? 1.0 : -1.0);
    const double k = rng.uniform(-0.95, 0.95) * std::abs(E);
    const int m = rng.integer(-3, 3);
    const ScalarSeed s = ScalarSeed::cylindrical(rng.uniform(0.5, 2.0), E, k, m);
    const PhysicalBasis pb = solve_physical(s);
    const std::string tag = "E=" + fmt(E) + " k=" + fmt(k) + " m=" + std::to_string(m);
    t.require(tag + ": nullity " + std::to_string(pb.nullity) + " != 2", pb.nullity == 2);
    t.require(tag + ": kernel not empty", pb.kernel_dim == 0);
    const Lambda ray = cylindrical_ray(E, k);
    const std::vector<Row8> expect{ray.to_real8(), (ray * kI).to_real8()};
    t.bound(tag + " principal angle to ray", max_principal_angle(full_null_space(pb), expect),
            1e-8);
    for (const auto& l : pb.basis) {
      t.bound(tag + " |lambda_1| + |lambda_2|", std::abs(l[1]) + std::abs(l[2]), 1e-8);
      t.bound(tag + " |-i lambda_0 E - lambda_3 k|", std::abs(-kI * l[0] * E - l[3] * k), 1e-8);
    }
    const double smax = pb.singular_values.front();
    for (size_t i = 0; i + 2 < pb.singular_values.size(); ++i)
      t.require(tag + ": retained singular value " + fmt(pb.singular_values[i] / smax) +
                    " not above 1e3 tol_rank",
                pb.singular_values[i] / smax > 1e3 * pb.tol_rank);
  }
  return t.finish();
}

InvariantResult determinant_identity(Rng& rng) {
  Tally t(5, "3x3 dependence determinant vanishes");
  for (int i = 0; i < 1000; ++i) {
    const double sa = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const double sb = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const Vec3 n = rng.unit(), a = rng.box(sa), b = rng.box(sb);
    const double scale = std::max(norm(a), norm(b));
    t.bound("|det| / scale^3", std::abs(check_linear_dependence_3x3(n, a, b)) /
                                   (scale * scale * scale), 1e-12);
  }
  return t.finish();
}

InvariantResult lc_identities(Rng& rng) {
  Tally t(6, "L/C frame identities");
  for (int i = 0; i < 1000; ++i) {
    const Vec3 n = rng.unit(), a = rng.box(rng.uniform(0.1, 5.0)), b = rng.box(rng.uniform(0.1, 5.0));
    const LCFrame f = lc_frame(n, a, b);
    const double s = norm(a) + norm(b), s2 = s * s;
    const double l2 = dot(f.L, f.L);
    t.bound("|L.C| / s^2", std::abs(dot(f.L, f.C)) / s2, 1e-12);
    t.bound("||L|^2 - |C|^2| / s^2", std::abs(l2 - dot(f.C, f.C)) / s2, 1e-12);
    t.bound("|L.n| / s", std::abs(dot(f.L, n)) / s, 1e-12);
    t.bound("|C.n| / s", std::abs(dot(f.C, n)) / s, 1e-12);
    const double formula = dot(a, a) + dot(b, b) - dot(n, a) * dot(n, a) - dot(n, b) * dot(n, b) +
                           2.0 * dot(n, cross(a, b));
    t.bound("||L|^2 - formula| / s^2", std::abs(l2 - formula) / s2, 1e-12);

    const double k0 = rng.uniform(0.5, 3.0), A = rng.uniform(0.5, 2.0);
    const SpacetimePoint p = rng.plane_point(k0);
    const FieldSample w = plane_wave_lc(f, k0, A, p);
    const double ws = k0 * A * s;
    t.bound("wave |E.cB| / scale^2", std::abs(dot(w.E, w.cB)) / (ws * ws), 1e-12);
    t.bound("wave ||E|^2 - |cB|^2| / scale^2",
            std::abs(dot(w.E, w.E) - dot(w.cB, w.cB)) / (ws * ws), 1e-12);
    t.bound("wave |E.n| / scale", std::abs(dot(w.E, n)) / ws, 1e-12);
    t.bound("wave |cB.n| / scale", std::abs(dot(w.cB, n)) / ws, 1e-12);

    // b = a: the b = 0 and a = 0 waves are orthogonal.
    const FieldSample w1 = plane_wave_lc(lc_frame(n, a, {}), k0, A, p);
    const FieldSample w2 = plane_wave_lc(lc_frame(n, {}, a), k0, A, p);
    const double s1 = k0 * A * norm(a);
    t.bound("b = a pair |E1.E2| / scale^2", std::abs(dot(w1.E, w2.E)) / (s1 * s1), 1e-12);
    t.bound("b = a pair |cB1.cB2| / scale^2", std::abs(dot(w1.cB, w2.cB)) / (s1 * s1), 1e-12);
  }
  return t.finish();
}

InvariantResult poynting(Rng& rng) {
  Tally t(7, "Poynting direction and polarization coefficients");
  for (int i = 0; i < 1000; ++i) {
    const double k0 = rng.uniform(0.5, 3.0), A = rng.uniform(0.5, 2.0);
    const SpacetimePoint p = rng.plane_point(k0);
    const double c = std::cos(k0 * p.x0 - k0 * p.x3);
    const double sz = k0 * A;
    for (PlaneVariant v : {PlaneVariant::I, PlaneVariant::II}) {
      const FieldSample f = plane_wave_z(v, k0, A, p);
      const Vec3 s = cross(f.E, f.cB);
      const Vec3 expect{0.0, 0.0, k0 * k0 * A * A * c * c};
      t.bound("z wave |E x cB - k3 k0 A^2 cos^2 e3| / scale^2", norm(s - expect) / (sz * sz), 1e-12);
    }
    const FieldSample zi = plane_wave_z(PlaneVariant::I, k0, A, p);
    const FieldSample zii = plane_wave_z(PlaneVariant::II, k0, A, p);
    t.bound("z wave |E_I.E_II| / scale^2", std::abs(dot(zi.E, zii.E)) / (sz * sz), 1e-12);
    t.bound("z wave |cB_I.cB_II| / scale^2", std::abs(dot(zi.cB, zii.cB)) / (sz * sz), 1e-12);

    const Vec3 n = rng.unit();
    const Vec3 x{p.x1, p.x2, p.x3};
    const double g = k0 * A * std::cos(k0 * (p.x0 - dot(n, x)));
    const FieldSample gi = plane_wave_general(PlaneVariant::I, n, k0, A, p);
    const FieldSample gii = plane_wave_general(PlaneVariant::II, n, k0, A, p);
    t.bound("general I |E x cB - (1 - n1^2) n g^2| / scale^2",
            norm(cross(gi.E, gi.cB) - n * ((1.0 - n.x * n.x) * g * g)) / (sz * sz), 1e-12);
    t.bound("general II |E x cB - (1 - n2^2) n g^2| / scale^2",
            norm(cross(gii.E, gii.cB) - n * ((1.0 - n.y * n.y) * g * g)) / (sz * sz), 1e-12);
    t.bound("general |E_I.E_II + n1 n2 g^2| / scale^2",
            std::abs(dot(gi.E, gii.E) + n.x * n.y * g * g) / (sz * sz), 1e-12);
  }
  const PolarizationReport r = polarization_report(plane_wave_z(PlaneVariant::I, 1.0, 1.0, {}));
  t.require("plane_wave_z I Poynting direction not +e3",
            r.direction_defined && norm(r.poynting_direction - Vec3{0, 0, 1}) < 1e-12);
  return t.finish();
}

InvariantResult dual_symmetry(Rng& rng) {
  Tally t(8, "dual symmetry");
  double sign_sum = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double k0 = rng.uniform(0.5, 3.0), A = rng.uniform(0.5, 2.0);
    const SpacetimePoint p = rng.plane_point(k0);
    const FieldSample d = dual_transform(plane_wave_z(PlaneVariant::I, k0, A, p));
    const FieldSample ii = plane_wave_z(PlaneVariant::II, k0, A, p);
    sign_sum += dot(d.E, ii.E) + dot(d.cB, ii.cB);
  }
  const double sigma = sign_sum >= 0.0 ? 1.0 : -1.0;
  t.note("fitted sign " + std::string(sigma > 0 ? "+1" : "-1"));
  for (int i = 0; i < 200; ++i) {
    const double k0 = rng.uniform(0.5, 3.0), A = rng.uniform(0.5, 2.0);
    const SpacetimePoint p = rng.plane_point(k0);
    const FieldSample f = plane_wave_z(PlaneVariant::I, k0, A, p);
    FieldSample ii = plane_wave_z(PlaneVariant::II, k0, A, p);
    ii.E = ii.E * sigma;
    ii.cB = ii.cB * sigma;
    const double sc = k0 * A;
    t.bound("|dual(I) - sign * II| / scale", max_diff(dual_transform(f), ii) / sc, 1e-12);
    FieldSample neg = f;
    neg.E = -f.E;
    neg.cB = -f.cB;
    t.bound("|dual^2 + id| / scale", max_diff(dual_transform(dual_transform(f)), neg) / sc, 1e-15);
    t.bound("|phase(pi/2) - dual| / scale",
            max_diff(phase_transform(f, kPi / 2.0), dual_transform(f)) / sc, 1e-15);
  }

  struct Named {
    std::string name;
    FieldFn fn;
    double scale;
    bool cylindrical;
  };
  const Vec3 n = rng.unit();
  std::vector<Named> fields{
      {"lc wave", plane_wave_lc_field(lc_frame(n, rng.box(1.0), rng.box(1.0)), 1.4, 0.9), 1.4, false},
      {"general plane II", plane_wave_general_field(PlaneVariant::II, rng.unit(), 0.8, 1.2), 0.8, false},
      {"cylindrical", cylindrical_wave_field(1.1, 0.4, 2, Complex(0.3, -0.8)), 1.1, true}};
  for (const auto& f : fields) {
    const FieldFn d = dual_field(f.fn);
    for (int i = 0; i < 20; ++i) {
      const SpacetimePoint p = f.cylindrical ? rng.cylinder_point(f.scale) : rng.plane_point(f.scale);
      const ResidualReport r0 = maxwell_residual(f.fn, p, 1e-4, std::nullopt, f.scale);
      const ResidualReport r1 = maxwell_residual(d, p, 1e-4, std::nullopt, f.scale);
      t.bound(f.name + " residual", r0.relative, 1e-6);
      t.bound(f.name + " dual residual", r1.relative, 1e-6);
      t.bound(f.name + " |dual residual - residual| / scale",
              std::abs(r1.max_residual - r0.max_residual) / r0.scale, 1e-14);
    }
  }
  return t.finish();
}

InvariantResult cylindrical_special_cases(Rng& rng) {
  Tally t(9, "cylindrical k = +-E closed forms");
  int nonzero = 0;
  for (int i = 0; i < 200; ++i) {
    const double E = rng.uniform(0.5, 2.0) * (rng.integer(0, 1) ? 1.0 : -1.0);
    const int m = rng.integer(-3, 3);
    const Complex l3(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const double A = rng.uniform(0.5, 2.0);
    const SpacetimePoint p = rng.cylinder_point(E);
    const FieldSample gf = cylindrical_wave(E, E, m, l3, p, A);
    const FieldSample cf = cylindrical_wave_forward(E, m, l3, p, A);
    const FieldSample gb = cylindrical_wave(E, -E, m, l3, p, A);
    const FieldSample cb = cylindrical_wave_backward(E, m, l3, p, A);
    const double sf = std::max(max_abs(gf), std::abs(l3) * A * std::pow(std::hypot(p.x1, p.x2), std::abs(m)) / std::hypot(p.x1, p.x2));
    const double sb = std::max(max_abs(gb), std::abs(l3) * A * std::pow(std::hypot(p.x1, p.x2), std::abs(m)) / std::hypot(p.x1, p.x2));
    t.bound("k = +E |closed form - generic| / scale", max_diff(cf, gf) / sf, 1e-12);
    t.bound("k = -E |closed form - generic| / scale", max_diff(cb, gb) / sb, 1e-12);
    t.require("k = +E: E3 + i cB3 not exactly zero", gf.E.z == 0.0 && gf.cB.z == 0.0);
    t.require("k = -E: E3 + i cB3 not exactly zero", gb.E.z == 0.0 && gb.cB.z == 0.0);
    if (max_abs(gf) > 0.0 || max_abs(gb) > 0.0) ++nonzero;
  }
  t.note(std::to_string(nonzero) + "/200 draws with a nonzero field");
  t.require("no draw produced a nonzero field", nonzero > 0);
  return t.finish();
}

InvariantResult cross_form(Rng& rng) {
  Tally t(10, "matrix-form and component-form residuals agree");
  struct Named {
    std::string name;
    FieldFn fn;
    double scale;
    bool cylindrical;
  };
  const Vec3 n = rng.unit();
  const FieldFn lc = plane_wave_lc_field(lc_frame(n, rng.box(1.0), rng.box(1.0)), 1.2, 1.0);
  std::vector<Named> fields{
      {"lc wave", lc, 1.2, false},
      {"corrupted lc wave", corrupt_field(lc), 1.2, false},
      {"cylindrical", cylindrical_wave_field(0.9, -0.3, 1, Complex(1.0, 0.5)), 0.9, true},
      {"corrupted z wave", corrupt_field(plane_wave_z_field(PlaneVariant::I, 1.0, 1.0)), 1.0, false}};
  for (const auto& f : fields) {
    const RSFieldFn column = [fn = f.fn](const SpacetimePoint& p) { return to_rs_vector(fn(p)); };
    for (int i = 0; i < 25; ++i) {
      const SpacetimePoint p = f.cylindrical ? rng.cylinder_point(f.scale) : rng.plane_point(f.scale);
      for (double h : {1e-2, 1e-4}) {
        const RSVector m = maxwell_operator_apply(column, p, h);
        const ResidualReport r = maxwell_residual(f.fn, p, h, std::nullopt, f.scale);
        const ResidualComponents& c = r.components;
        const std::array<Complex, 4> expect{Complex(c.div_E, c.div_cB),
                                            Complex(c.faraday.x, c.ampere.x),
                                            Complex(c.faraday.y, c.ampere.y),
                                            Complex(c.faraday.z, c.ampere.z)};
        double d = 0.0;
        for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(m[k] - expect[k]));
        t.bound(f.name + " |matrix - component| / scale", d / r.scale, 1e-12);
      }
    }
  }
  return t.finish();
}

}  // namespace

InvariantResult run_invariant(int id, const InvariantOptions& options) {
  Rng rng(options.seed + static_cast<std::uint64_t>(id));
  switch (id) {
    case 1: return alpha_table();
    case 2: return squaring_validity(rng);
    case 3: return plane_physicality(rng);
    case 4: return cylindrical_physicality(rng);
    case 5: return determinant_identity(rng);
    case 6: return lc_identities(rng);
    case 7: return poynting(rng);
    case 8: return dual_symmetry(rng);
    case 9: return cylindrical_special_cases(rng);
    case 10: return cross_form(rng);
    default:
      throw UsageError("invariant id must be 1.." + std::to_string(kInvariantCount));
  }
}

std::vector<InvariantResult> run_invariants(const InvariantOptions& options) {
  std::vector<InvariantResult> out;
  for (int id = 1; id <= kInvariantCount; ++id) out.push_back(run_invariant(id, options));
  return out;
}

}  // namespace rsmax
