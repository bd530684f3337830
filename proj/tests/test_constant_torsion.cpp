/*
 * Copyright 2026 The torsionkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "torsionkit/constant_torsion.hpp"
#include "torsionkit/families.hpp"
#include "torsionkit/frenet.hpp"

using namespace torsionkit;
using oracle::kPi;
using oracle::kTwoPi;

namespace {

constexpr std::size_t N = 2048;

PeriodicCurve plane_circle(double rho, double cx = 0, double cy = 0, std::size_t n = N) {
  return PeriodicCurve::sample([=](double t) { return Vec3{cx + rho * std::cos(t), cy + rho * std::sin(t), 0}; },
                               kTwoPi, n);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

KoenigsResult gamma_r(double r) { return koenigs_curve(vertical_lift(beta_curve(r, N)), r); }

CurveSampler projection(const CurveSampler& c) {
  std::vector<Vec3> p(c.positions().begin(), c.positions().end());
  for (Vec3& v : p) v.z = 0;
  return CurveSampler::sampled(PeriodicCurve(std::move(p), c.period()));
}

}  // namespace

TEST_CASE("beta curve") {
  const Vec3 b0 = beta_point(1.0, 0.0);
  CHECK(b0.x == doctest::Approx(0.5 + std::sqrt(2.0) / 4).epsilon(1e-15));
  CHECK(b0.y == 0.0);
  CHECK(b0.z == 0.0);
  CHECK(norm(beta_point(0.5, 1.1) - 0.5 * beta_point(1.0, 1.1)) < 1e-16);
  for (double r : {0.0, -0.3, 1.5}) CHECK(code_of([&] { beta_curve(r); }) == ErrorCode::InvalidArgument);
  const BetaCurve b = beta_curve(1.0, 256);
  double peak = 0;
  for (const Vec3& p : b.samples) peak = std::max(peak, norm(p));
  CHECK(peak < 1.0);
}

TEST_CASE("beta_1 has a 120 degree rotation symmetry") {
  const std::size_t n = 1536;  // divisible by 3 so the rotation maps samples to samples
  const BetaCurve b = beta_curve(1.0, n);
  const double c = std::cos(kTwoPi / 3), s = std::sin(kTwoPi / 3);
  double hausdorff = 0;
  for (const Vec3& p : b.samples) {
    const Vec3 q{c * p.x - s * p.y, s * p.x + c * p.y, 0};
    double nearest = INFINITY;
    for (const Vec3& r : b.samples) nearest = std::min(nearest, norm(q - r));
    hausdorff = std::max(hausdorff, nearest);
  }
  CHECK(hausdorff < 1e-8);
}

TEST_CASE("signed area") {
  CHECK(signed_area(family_circle(1.0, 512)) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(signed_area(family_ellipse(2, 0.5, 512)) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(std::abs(signed_area(family_figure_eight(512))) < 1e-12);
  for (double r : {1.0, 0.5, 0.25}) {
    CHECK(std::abs(signed_area(family_beta(r, N))) < 1e-10);
    CHECK(std::abs(signed_area(beta_curve(r, N).samples)) < 1e-10);
  }
  // Translation does not change it; reversing orientation flips it.
  CHECK(signed_area(plane_circle(0.3, 5, -2, 256)) == doctest::Approx(2 * kPi * 0.09).epsilon(1e-13));
  const PeriodicCurve reversed =
      PeriodicCurve::sample([](double t) { return Vec3{std::cos(t), -std::sin(t), 0}; }, kTwoPi, 256);
  CHECK(signed_area(reversed) == doctest::Approx(-kTwoPi).epsilon(1e-14));
  CHECK(code_of([] { signed_area(family_torus_coil(2, 0.5, 3, 256)); }) == ErrorCode::NotPlanar);
  CHECK(code_of([] { signed_area(family_helix(1, 1, 256)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("vertical lift") {
  const SphericalCurve pole = vertical_lift(PeriodicCurve(std::vector<Vec3>(64), kTwoPi));
  for (const Vec3& p : pole.points()) CHECK(p == Vec3{0, 0, 1});
  const SphericalCurve lat = vertical_lift(plane_circle(0.5, 0, 0, 64));
  for (const Vec3& p : lat.points()) CHECK(p.z == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  const SphericalCurve quarter = vertical_lift(beta_curve(0.25, N));
  for (const Vec3& p : quarter.points()) {
    CHECK(p.z > 0.9);
    CHECK(std::abs(dot(p, p) - 1) < 1e-12);
  }
  CHECK(code_of([] { vertical_lift(plane_circle(1.2, 0, 0, 64)); }) == ErrorCode::OutsideDisk);
  CHECK(code_of([] { vertical_lift(plane_circle(0.5, 0.6, 0, 64)); }) == ErrorCode::OutsideDisk);
  CHECK_THROWS_AS(SphericalCurve(plane_circle(0.9, 0, 0, 64)), Error);
}

TEST_CASE("Koenigs construction: great circle degenerates to a segment") {
  const SphericalCurve equator(plane_circle(1.0, 0, 0, 256));
  const KoenigsResult k = koenigs_curve(equator, 1.0);
  for (std::size_t j = 0; j < k.curve.size(); ++j) {
    CHECK(norm(k.curve.positions()[j] - Vec3{0, 0, k.curve.parameter(j)}) < 1e-12);
    CHECK(std::isnan(k.tau_profile[j]));
  }
  CHECK(k.kappa_min < 1e-12);
  CHECK(norm(k.closure_defect - Vec3{0, 0, kTwoPi}) < 1e-12);
}

TEST_CASE("Koenigs construction errors") {
  const SphericalCurve lat = vertical_lift(plane_circle(0.5, 0, 0, 64));
  CHECK(code_of([&] { koenigs_curve(lat, 0.0); }) == ErrorCode::ZeroTorsionTarget);
  const SphericalCurve pole = vertical_lift(PeriodicCurve(std::vector<Vec3>(64), kTwoPi));
  CHECK(code_of([&] { koenigs_curve(pole, 1.0); }) == ErrorCode::DegenerateSpeed);
}

TEST_CASE("Koenigs curves from the beta family are closed with constant torsion") {
  for (double r : {1.0, 0.5, 0.25}) {
    const KoenigsResult k = gamma_r(r);
    CHECK(norm(k.closure_defect) < 1e-6);
    CHECK(k.tau_target == r);
    CHECK(k.kappa_min > 0);
    CHECK(k.tau_stdev < 1e-6 * r);
    for (double t : k.tau_profile) CHECK(t == doctest::Approx(r).epsilon(1e-6));
    // The Frenet binormal is the input lift up to one global sign.
    CHECK(k.orientation_consistent);
    CHECK(k.binormal_deviation < 1e-6);
    CHECK(std::abs(k.binormal_orientation) == 1);
  }
}

TEST_CASE("Koenigs binormal is -B: direct check") {
  const BetaCurve beta = beta_curve(0.5, 512);
  const SphericalCurve b = vertical_lift(beta);
  const KoenigsResult k = koenigs_curve(b, 0.5);
  const FrenetData fr = frenet_apparatus(k.curve, MetricSignature::Euclidean3);
  CHECK(k.binormal_orientation == -1);
  for (std::size_t j = 0; j < fr.size(); ++j) CHECK(norm(fr.binormal[j] + b.points()[j]) < 1e-9);
}

TEST_CASE("Koenigs torsion is the target on arbitrary spherical curves") {
  // Off-centre ellipse lift: the curve is open but its torsion is still constant.
  const PeriodicCurve ellipse = PeriodicCurve::sample(
      [](double t) { return Vec3{0.1 + 0.5 * std::cos(t), 0.05 + 0.3 * std::sin(t) + 0.1 * std::cos(3 * t), 0}; },
      kTwoPi, 1024);
  for (double tau : {0.3, -2.0}) {
    const KoenigsResult k = koenigs_curve(vertical_lift(ellipse), tau);
    CHECK(k.kappa_min > 0);
    CHECK(k.tau_stdev < 1e-9);
    for (double t : k.tau_profile) CHECK(t == doctest::Approx(tau).epsilon(1e-8));
    CHECK(norm(k.closure_defect) > 0.1);
  }
}

TEST_CASE("vertical closure defect equals signed area over tau") {
  for (double rho : {0.2, 0.6, 0.9}) {
    for (double tau : {0.5, 1.0, 3.0}) {
      const KoenigsResult k = koenigs_curve(vertical_lift(plane_circle(rho, 0, 0, 256)), tau);
      // (B x B')_z = rho^2 for the latitude circle
      CHECK(k.closure_defect.z == doctest::Approx(kTwoPi * rho * rho / tau).epsilon(1e-13));
      CHECK(std::abs(k.closure_defect.x) < 1e-13);
      CHECK(std::abs(k.closure_defect.y) < 1e-13);
    }
  }
  for (double r : {1.0, 0.5, 0.25}) {
    const BetaCurve beta = beta_curve(r, N);
    const KoenigsResult k = koenigs_curve(vertical_lift(beta), r);
    CHECK(std::abs(k.closure_defect.z - signed_area(beta.samples) / r) < 1e-12);
  }
}

TEST_CASE("binormal spread") {
  CHECK(binormal_spread(family_ellipse(2, 1, 256)) < 1e-12);
  // Helix binormal (b sin t, -b cos t, a) / sqrt(a^2 + b^2): mean (0, 0, 1)
  // over a full turn, so the spread is atan(b / a).
  CHECK(binormal_spread(family_helix(1, 1, 256)) == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(binormal_spread(family_helix(2, 1, 256)) == doctest::Approx(std::atan(0.5)).epsilon(1e-12));

  double previous = INFINITY;
  for (double r : {1.0, 0.5, 0.25, 0.125}) {
    const double spread = binormal_spread(gamma_r(r).curve);
    CHECK(spread < previous);
    previous = spread;
  }
}

TEST_CASE("min self distance") {
  CHECK(min_self_distance(family_circle(1.0, 512)) > 0.5);
  CHECK(min_self_distance(family_circle(1.0, 512)) == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(min_self_distance(family_beta(1.0, N)) < 1e-2);
  CHECK(min_self_distance(family_figure_eight(512)) < 1e-2);
  for (double r : {1.0, 0.5, 0.25, 0.125}) CHECK(min_self_distance(projection(gamma_r(r).curve)) < 1e-2);
}

TEST_CASE("small-r curves approach beta_1 up to a rotation") {
  const PeriodicCurve beta1 = beta_curve(1.0, N).samples;
  double previous = INFINITY;
  for (double r : {0.5, 0.25, 0.125, 0.0625}) {
    const double residual = rotation_fit_residual(gamma_r(r).curve, beta1);
    CHECK(residual < previous);
    previous = residual;
  }
  CHECK(previous < 0.02);
  // An exact rotated copy fits perfectly.
  std::vector<Vec3> turned;
  for (const Vec3& p : beta1) turned.push_back({-p.y + 3, p.x - 1, 0});
  CHECK(rotation_fit_residual(CurveSampler::sampled(PeriodicCurve(turned, kTwoPi)), beta1) < 1e-14);
}
