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

// Independent reference computations for the tests. Nothing here calls into
// the library's numerics: closed forms, plain finite sums and hand-rolled
// determinants only.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

using V3 = std::array<double, 3>;

inline double det3(const V3& a, const V3& b, const V3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Torsion from a derivative jet. sign = +1 for Euclidean, -1 for
/// Lorentz (x^2 + y^2 - t^2): the Lorentz cross product flips z and the
/// Lorentz inner product flips z again, so the numerator is the same
/// determinant while the denominator picks up -(cross_z)^2.
inline double torsion(const V3& d1, const V3& d2, const V3& d3, double sign = 1.0) {
  const V3 c = cross(d1, d2);
  return det3(d1, d2, d3) / (c[0] * c[0] + c[1] * c[1] + sign * c[2] * c[2]);
}

/// Helix (a cos t, a sin t, b t).
inline double helix_curvature(double a, double b) { return a / (a * a + b * b); }
inline double helix_torsion(double a, double b) { return b / (a * a + b * b); }

/// Curvature of the ellipse (a cos t, b sin t) as a function of its tangent
/// angle theta: kappa = (a^2 sin^2 theta + b^2 cos^2 theta)^{3/2} / (a^2 b^2).
inline double ellipse_kappa_at_angle(double a, double b, double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return std::pow(a * a * s * s + b * b * c * c, 1.5) / (a * a * b * b);
}

/// Periodic solution of f'' + f = sum over m >= 2 of (a_m cos m t + b_m sin m t)
/// plus the constant p0: each mode divides by 1 - m^2.
inline double kernel_solution(double p0, const std::vector<std::array<double, 3>>& modes, double t) {
  double f = p0;
  for (const auto& [m, a, b] : modes) f += (a * std::cos(m * t) + b * std::sin(m * t)) / (1.0 - m * m);
  return f;
}

/// Graph over a circle of radius R parametrized by tangent angle theta
/// (position (R sin theta, -R cos theta)) with height h. `hd` holds h', h'', h'''.
inline V3 circle_graph_d(int order, double R, double theta, const std::array<double, 3>& hd) {
  const double s = std::sin(theta), c = std::cos(theta);
  switch (order) {
    case 1: return {R * c, R * s, hd[0]};
    case 2: return {-R * s, R * c, hd[1]};
    default: return {-R * c, -R * s, hd[2]};
  }
}

inline double circle_graph_torsion(double R, double theta, const std::array<double, 3>& hd, double sign = 1.0) {
  return torsion(circle_graph_d(1, R, theta, hd), circle_graph_d(2, R, theta, hd), circle_graph_d(3, R, theta, hd),
                 sign);
}

/// Plain trapezoid sum over one period of uniformly spaced samples.
inline double trapezoid(const std::vector<double>& v, double period) {
  double s = 0.0;
  for (double x : v) s += x;
  return s * period / static_cast<double>(v.size());
}

/// Unit eigenvector of the smallest eigenvalue of a symmetric 3x3 matrix:
/// eigenvalue from the trigonometric solution of the characteristic cubic,
/// vector from the cross product of two rows of A - lambda I.
inline V3 min_eigvec3(const std::array<V3, 3>& A) {
  const double q = (A[0][0] + A[1][1] + A[2][2]) / 3.0;
  const double p1 = A[0][1] * A[0][1] + A[0][2] * A[0][2] + A[1][2] * A[1][2];
  const double p2 = (A[0][0] - q) * (A[0][0] - q) + (A[1][1] - q) * (A[1][1] - q) + (A[2][2] - q) * (A[2][2] - q) +
                    2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  std::array<V3, 3> B = A;
  for (int i = 0; i < 3; ++i) {
    B[i][i] -= q;
    for (int j = 0; j < 3; ++j) B[i][j] /= p;
  }
  const double r = std::clamp(det3(B[0], B[1], B[2]) / 2.0, -1.0, 1.0);
  const double lambda = q + 2.0 * p * std::cos(std::acos(r) / 3.0 + 2.0 * kPi / 3.0);
  std::array<V3, 3> M = A;
  for (int i = 0; i < 3; ++i) M[i][i] -= lambda;
  V3 best{};
  double best_norm = 0.0;
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    const V3 c = cross(M[i], M[j]);
    const double nc = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    if (nc > best_norm) best_norm = nc, best = c;
  }
  return {best[0] / best_norm, best[1] / best_norm, best[2] / best_norm};
}

}  // namespace oracle
