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

#pragma once

#include <cmath>

namespace torsionkit {

/// Quadratic form used for dot and cross products. Lorentz21 is
/// x^2 + y^2 - t^2 with the third coordinate as time.
enum class MetricSignature { Euclidean3, Lorentz21 };

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

/// Euclidean dot and cross products; the metric-aware versions build on them.
constexpr double dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

constexpr Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

constexpr double metric_dot(const Vec3& u, const Vec3& v, MetricSignature m) {
  return m == MetricSignature::Euclidean3 ? dot(u, v) : u.x * v.x + u.y * v.y - u.z * v.z;
}

/// Lorentz21 flips the time component of the Euclidean cross product, which
/// makes <u x v, w> = det(u, v, w) in either metric.
constexpr Vec3 metric_cross(const Vec3& u, const Vec3& v, MetricSignature m) {
  Vec3 c = cross(u, v);
  if (m == MetricSignature::Lorentz21) c.z = -c.z;
  return c;
}

/// Squared length in the metric; negative for timelike vectors.
constexpr double metric_norm2(const Vec3& v, MetricSignature m) { return metric_dot(v, v, m); }

constexpr bool is_spacelike(const Vec3& v) { return metric_norm2(v, MetricSignature::Lorentz21) > 0.0; }

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace torsionkit
