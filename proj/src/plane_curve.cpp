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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "torsionkit/graph_curve.hpp"
#include "torsionkit/polyline.hpp"

namespace torsionkit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr const char* kModule = "graph-curve";

struct PlaneJet {
  std::vector<Vec3> x, d1, d2;
};

PlaneJet reversed(const CurveSampler& c) {
  const std::size_t n = c.size();
  PlaneJet out{std::vector<Vec3>(n), std::vector<Vec3>(n), std::vector<Vec3>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = (n - j) % n;
    out.x[j] = c.derivative(0)[k];
    out.d1[j] = -c.derivative(1)[k];
    out.d2[j] = c.derivative(2)[k];
  }
  return out;
}

double turning_density(const Vec3& d1, const Vec3& d2) {
  return (d1.x * d2.y - d1.y * d2.x) / (d1.x * d1.x + d1.y * d1.y);
}

// Solve theta(t) = target on [lo, hi], where theta is increasing and
// theta(lo) <= target <= theta(hi). Newton steps that leave the bracket fall
// back to bisection.
template <class F, class DF>
double invert_monotone(F&& theta, DF&& dtheta, double target, double lo, double hi) {
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double r = theta(t) - target;
    if (r > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    const double slope = dtheta(t);
    double next = slope > 0.0 ? t - r / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-15 * (1.0 + std::abs(t)) || hi - lo <= 1e-15 * (1.0 + std::abs(t))) return next;
    t = next;
  }
  return t;
}

}  // namespace

BaseCurve base_from_plane_curve(const CurveSampler& c, std::size_t samples, const BaseCurveOptions& options) {
  if (!c.closed()) throw Error(ErrorCode::InvalidArgument, kModule, "base curve must be closed");
  const std::size_t n = c.size();

  double extent = 0.0;
  double off_plane = 0.0;
  for (int order = 0; order <= 2; ++order) {
    for (const Vec3& v : c.derivative(order)) {
      extent = std::max(extent, std::hypot(v.x, v.y));
      off_plane = std::max(off_plane, std::abs(v.z));
    }
  }
  if (off_plane > 1e-10 * extent) {
    throw Error(ErrorCode::NotPlanar, kModule, "base curve leaves the z = 0 plane");
  }

  PlaneJet jet{std::vector<Vec3>(c.derivative(0).begin(), c.derivative(0).end()),
               std::vector<Vec3>(c.derivative(1).begin(), c.derivative(1).end()),
               std::vector<Vec3>(c.derivative(2).begin(), c.derivative(2).end())};
  double turning_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) turning_sum += turning_density(jet.d1[j], jet.d2[j]);
  if (turning_sum < 0.0) jet = reversed(c);

  std::vector<double> kappa(n), density(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double speed = std::hypot(jet.d1[j].x, jet.d1[j].y);
    density[j] = turning_density(jet.d1[j], jet.d2[j]);
    kappa[j] = density[j] / speed;
    if (!(kappa[j] > 0.0)) {
      throw Error(ErrorCode::NonConvex, kModule,
                  "signed curvature changes sign (kappa0 = " + std::to_string(kappa[j]) + " at sample " +
                      std::to_string(j) + ")");
    }
  }

  if (auto crossing = polyline::find_self_crossing(jet.x)) {
    throw Error(ErrorCode::NotSimple, kModule,
                "segments " + std::to_string(crossing->first) + " and " + std::to_string(crossing->second) +
                    " intersect");
  }

  const double period = c.period();
  const double turning = period / static_cast<double>(n) * [&] {
    double s = 0.0;
    for (double d : density) s += d;
    return s;
  }();
  if (std::abs(turning - kTwoPi) > 1e-6) {
    throw Error(ErrorCode::NonConvex, kModule, "total turning is " + std::to_string(turning) + ", not 2 pi");
  }

  // theta(t) = theta0 + 2 pi t / P + q(t) with q periodic.
  std::vector<double> unwrapped(n);
  unwrapped[0] = std::atan2(jet.d1[0].y, jet.d1[0].x);
  for (std::size_t j = 1; j < n; ++j) {
    const double raw = std::atan2(jet.d1[j].y, jet.d1[j].x);
    double step = raw - std::remainder(unwrapped[j - 1], kTwoPi);
    step = std::remainder(step, kTwoPi);
    unwrapped[j] = unwrapped[j - 1] + step;
  }
  const double theta0 = unwrapped[0];
  std::vector<double> q(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = static_cast<double>(j) * period / static_cast<double>(n);
    q[j] = unwrapped[j] - theta0 - kTwoPi * t / period;
  }
  const TrigInterpolant q_interp(PeriodicSamples(q, period));
  const TrigInterpolant kappa_interp(PeriodicSamples(kappa, period));
  auto theta_at = [&](double t) { return theta0 + kTwoPi * t / period + q_interp(t); };
  auto dtheta_at = [&](double t) { return kTwoPi / period + q_interp.derivative(t, 1); };

  const double dt = period / static_cast<double>(n);
  std::vector<double> kappa0(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double grid_theta = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
    double target = grid_theta + kTwoPi * std::ceil((theta0 - grid_theta) / kTwoPi);
    if (target >= theta0 + kTwoPi) target -= kTwoPi;
    auto upper = std::upper_bound(unwrapped.begin(), unwrapped.end(), target);
    const std::size_t j = static_cast<std::size_t>(std::distance(unwrapped.begin(), upper)) - 1;
    const double lo = static_cast<double>(j) * dt;
    const double t = invert_monotone(theta_at, dtheta_at, target, lo, lo + dt);
    kappa0[i] = kappa_interp(t);
  }
  return base_from_kappa(PeriodicSamples(std::move(kappa0), kTwoPi), options);
}

}  // namespace torsionkit
