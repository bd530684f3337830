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

#include "torsionkit/constant_torsion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "torsionkit/polyline.hpp"

namespace torsionkit {
namespace {

constexpr const char* kModule = "constant-torsion";

void require_planar(std::span<const Vec3> points) {
  double extent = 0.0;
  double off = 0.0;
  for (const Vec3& p : points) {
    extent = std::max(extent, std::hypot(p.x, p.y));
    off = std::max(off, std::abs(p.z));
  }
  if (off > 1e-12 * std::max(extent, 1.0)) throw Error(ErrorCode::NotPlanar, kModule, "curve leaves the z = 0 plane");
}

}  // namespace

Vec3 beta_point(double r, double t) {
  const double a = std::numbers::sqrt2 / 4.0;
  return {r * (0.5 * std::cos(t) + a * std::cos(2.0 * t)), r * (0.5 * std::sin(t) - a * std::sin(2.0 * t)), 0.0};
}

BetaCurve beta_curve(double r, std::size_t samples) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, kModule, "r must lie in (0, 1], got " + std::to_string(r));
  }
  return {r, PeriodicCurve::sample([r](double t) { return beta_point(r, t); }, 2.0 * std::numbers::pi, samples)};
}

SphericalCurve::SphericalCurve(PeriodicCurve points) : points_(std::move(points)) {
  for (const Vec3& b : points_) {
    if (!(std::abs(dot(b, b) - 1.0) <= 1e-12)) {
      throw Error(ErrorCode::InvalidArgument, kModule, "spherical curve samples must have unit length");
    }
  }
}

SphericalCurve vertical_lift(const PeriodicCurve& plane) {
  std::vector<Vec3> b(plane.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    const double rho2 = plane[j].x * plane[j].x + plane[j].y * plane[j].y;
    if (!(rho2 < 1.0)) {
      throw Error(ErrorCode::OutsideDisk, kModule, "sample " + std::to_string(j) + " lies outside the unit disk");
    }
    b[j] = {plane[j].x, plane[j].y, std::sqrt(1.0 - rho2)};
  }
  return SphericalCurve(PeriodicCurve(std::move(b), plane.period()));
}

SphericalCurve vertical_lift(const BetaCurve& beta) { return vertical_lift(beta.samples); }

SphericalCurve vertical_lift(const CurveSampler& plane) { return vertical_lift(as_periodic(plane)); }

KoenigsResult koenigs_curve(const SphericalCurve& binormal, double tau_target, const KoenigsOptions& options) {
  if (tau_target == 0.0) throw Error(ErrorCode::ZeroTorsionTarget, kModule, "torsion target must be nonzero");
  const PeriodicCurve& b = binormal.points();
  const PeriodicCurve db = spectral_derivative(b, 1);

  std::vector<Vec3> velocity(b.size());
  double peak = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    velocity[j] = cross(b[j], db[j]) / tau_target;
    peak = std::max(peak, norm(velocity[j]));
  }
  if (!(peak > 1e-14)) throw Error(ErrorCode::DegenerateSpeed, kModule, "B x B' vanishes identically");

  const PeriodicCurve d1(std::move(velocity), b.period());
  const auto anti = spectral_antiderivative(d1);
  std::vector<Vec3> position(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    position[j] = anti.periodic[j] - anti.periodic[0] + anti.mean * d1.parameter(j);
  }
  const Vec3 defect = anti.mean * b.period();
  const bool closed = norm(defect) <= options.closure_tol;

  CurveSampler curve = CurveSampler::from_jet(std::move(position), d1, spectral_derivative(d1, 1),
                                              spectral_derivative(d1, 2), closed);
  const FrenetData frame = frenet_apparatus(curve, MetricSignature::Euclidean3, options.frenet);

  double sum = 0.0;
  double alignment = 0.0;
  std::size_t defined = 0;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (!frame.tau_defined[j]) continue;
    sum += frame.tau[j];
    alignment += dot(frame.binormal[j], b[j]);
    ++defined;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double mean = defined ? sum / static_cast<double>(defined) : nan;
  const int orientation = alignment < 0.0 ? -1 : 1;
  double var = 0.0;
  double deviation = defined ? 0.0 : nan;
  bool consistent = true;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (!frame.tau_defined[j]) continue;
    var += (frame.tau[j] - mean) * (frame.tau[j] - mean);
    deviation = std::max(deviation, norm(frame.binormal[j] - static_cast<double>(orientation) * b[j]));
    consistent = consistent && orientation * dot(frame.binormal[j], b[j]) > 0.0;
  }

  KoenigsResult result{std::move(curve),
                       tau_target,
                       defect,
                       PeriodicSamples(frame.tau, b.period()),
                       defined ? std::sqrt(var / static_cast<double>(defined)) : nan,
                       frame.kappa_min(),
                       orientation,
                       deviation,
                       consistent && defined > 0};
  return result;
}

double signed_area(const CurveSampler& plane) {
  if (!plane.closed()) throw Error(ErrorCode::InvalidArgument, kModule, "signed area needs a closed curve");
  const auto x = plane.derivative(0);
  const auto dx = plane.derivative(1);
  require_planar(x);
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) sum += x[j].x * dx[j].y - x[j].y * dx[j].x;
  return sum * plane.period() / static_cast<double>(x.size());
}

double signed_area(const PeriodicCurve& plane) { return signed_area(CurveSampler::sampled(plane)); }

double binormal_spread(const CurveSampler& c) {
  const FrenetData frame = frenet_apparatus(c, MetricSignature::Euclidean3);
  Vec3 mean;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (frame.tau_defined[j]) mean += frame.binormal[j];
  }
  const double len = norm(mean);
  if (!(len > 0.0)) {
    throw Error(ErrorCode::DegenerateCurve, kModule, "mean binormal direction is undefined");
  }
  mean = mean / len;
  double spread = 0.0;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (!frame.tau_defined[j]) continue;
    const Vec3& b = frame.binormal[j];
    spread = std::max(spread, std::atan2(norm(cross(b, mean)), dot(b, mean)));
  }
  return spread;
}

double min_self_distance(const CurveSampler& plane, std::size_t window) {
  return polyline::min_self_distance(plane.positions(), window);
}

double rotation_fit_residual(const CurveSampler& c, const PeriodicCurve& reference) {
  const auto p = c.positions();
  if (p.size() != reference.size()) {
    throw Error(ErrorCode::InvalidArgument, kModule, "rotation fit needs matching sample counts");
  }
  const double n = static_cast<double>(p.size());
  double ax = 0, ay = 0, bx = 0, by = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    ax += p[j].x / n, ay += p[j].y / n;
    bx += reference[j].x / n, by += reference[j].y / n;
  }
  // 2D Procrustes: the angle maximizing sum <R a_j, b_j>.
  double sdot = 0, scross = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double x = p[j].x - ax, y = p[j].y - ay, u = reference[j].x - bx, v = reference[j].y - by;
    sdot += x * u + y * v;
    scross += x * v - y * u;
  }
  const double phi = std::atan2(scross, sdot);
  const double cs = std::cos(phi), sn = std::sin(phi);
  double worst = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double x = p[j].x - ax, y = p[j].y - ay;
    worst = std::max(worst, std::hypot(cs * x - sn * y - (reference[j].x - bx), sn * x + cs * y - (reference[j].y - by)));
  }
  return worst;
}

}  // namespace torsionkit
