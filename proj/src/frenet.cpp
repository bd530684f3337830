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

#include "torsionkit/frenet.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace torsionkit {

std::size_t FrenetData::defined_count() const {
  return static_cast<std::size_t>(std::count(tau_defined.begin(), tau_defined.end(), true));
}

double FrenetData::tau_min() const {
  double r = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t j = 0; j < size(); ++j) {
    if (tau_defined[j] && !(tau[j] >= r)) r = tau[j];
  }
  return r;
}

double FrenetData::tau_max() const {
  double r = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t j = 0; j < size(); ++j) {
    if (tau_defined[j] && !(tau[j] <= r)) r = tau[j];
  }
  return r;
}

double FrenetData::kappa_min() const {
  return kappa.empty() ? std::numeric_limits<double>::quiet_NaN() : *std::min_element(kappa.begin(), kappa.end());
}

FrenetData frenet_apparatus(const CurveSampler& c, MetricSignature m, const FrenetOptions& options) {
  const auto d1 = c.derivative(1);
  const auto d2 = c.derivative(2);
  const auto d3 = c.derivative(3);
  const std::size_t n = c.size();

  double scale = 0.0;
  for (const Vec3& v : d1) scale = std::max(scale, norm(v));
  if (!(scale > 0.0)) throw Error(ErrorCode::DegenerateCurve, "geometry-core", "curve has zero velocity everywhere");
  const double cross_floor = options.kappa_min * scale * scale * scale;

  FrenetData out;
  out.metric = m;
  out.period = c.period();
  out.parameter.resize(n);
  out.tangent.resize(n);
  out.normal.resize(n);
  out.binormal.resize(n);
  out.speed.resize(n);
  out.kappa.resize(n);
  out.tau.resize(n);
  out.tau_defined.resize(n);

  for (std::size_t j = 0; j < n; ++j) {
    out.parameter[j] = c.parameter(j);
    if (norm(d1[j]) <= 1e-14 * scale) {
      throw Error(ErrorCode::DegenerateCurve, "geometry-core",
                  "velocity vanishes at t = " + std::to_string(c.parameter(j)));
    }
    const double speed2 = metric_norm2(d1[j], m);
    if (!(speed2 > 0.0)) {
      throw Error(ErrorCode::NonSpacelikeTangent, "geometry-core",
                  "tangent is not spacelike at t = " + std::to_string(c.parameter(j)));
    }
    const double speed = std::sqrt(speed2);
    const Vec3 tangent = d1[j] / speed;
    const Vec3 cr = metric_cross(d1[j], d2[j], m);
    const double den = metric_norm2(cr, m);
    const double cross_len = std::sqrt(std::abs(den));

    out.speed[j] = speed;
    out.tangent[j] = tangent;
    out.kappa[j] = cross_len / (speed * speed * speed);

    if (cross_len <= cross_floor) {
      out.tau[j] = std::numeric_limits<double>::quiet_NaN();
      out.tau_defined[j] = false;
      continue;
    }
    const Vec3 curvature = d2[j] - metric_dot(d2[j], tangent, m) * tangent;
    const Vec3 normal = curvature / std::sqrt(std::abs(metric_norm2(curvature, m)));
    out.normal[j] = normal;
    out.binormal[j] = metric_cross(tangent, normal, m);
    out.tau[j] = metric_dot(cr, d3[j], m) / den;
    out.tau_defined[j] = true;
  }
  return out;
}

PeriodicSamples torsion_sign_numerator(const CurveSampler& c, MetricSignature m) {
  const auto d1 = c.derivative(1);
  const auto d2 = c.derivative(2);
  const auto d3 = c.derivative(3);
  std::vector<double> v(c.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = metric_dot(metric_cross(d1[j], d2[j], m), d3[j], m);
  return PeriodicSamples(std::move(v), c.period());
}

double plane_fit_residual(const CurveSampler& c) {
  const auto p = c.positions();
  double diameter = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) diameter = std::max(diameter, norm(p[i] - p[j]));
  }
  if (!(diameter > 0.0)) throw Error(ErrorCode::DegenerateCurve, "geometry-core", "all samples coincide");

  Vec3 centroid;
  for (const Vec3& v : p) centroid += v;
  centroid = centroid / static_cast<double>(p.size());

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const Vec3& v : p) {
    const Eigen::Vector3d d(v.x - centroid.x, v.y - centroid.y, v.z - centroid.z);
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
  const Eigen::Vector3d nrm = solver.eigenvectors().col(0);  // smallest eigenvalue
  const Vec3 normal{nrm.x(), nrm.y(), nrm.z()};

  double worst = 0.0;
  for (const Vec3& v : p) worst = std::max(worst, std::abs(dot(v - centroid, normal)));
  return worst / diameter;
}

}  // namespace torsionkit
