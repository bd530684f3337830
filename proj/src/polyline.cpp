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

#include "torsionkit/polyline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace torsionkit::polyline {
namespace {

double orient(const Vec3& a, const Vec3& b, const Vec3& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const Vec3& a, const Vec3& b, const Vec3& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

double planar_distance(const Vec3& a, const Vec3& b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::size_t cyclic_gap(std::size_t i, std::size_t j, std::size_t n) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

}  // namespace

bool segments_intersect(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
    return false;
  }
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double s = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(p.x - (a.x + s * dx), p.y - (a.y + s * dy));
}

double segment_distance(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

std::optional<std::pair<std::size_t, std::size_t>> find_self_crossing(std::span<const Vec3> chain) {
  const std::size_t n = chain.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = chain[i];
    const Vec3& b = chain[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(a, b, chain[j], chain[(j + 1) % n])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

namespace {

// Common zero of two bilinear functions on the unit square, given by their
// corner values (s, u) = (0,0), (1,0), (0,1), (1,1).
std::optional<std::pair<double, double>> bilinear_root(const std::array<double, 4>& g, const std::array<double, 4>& h) {
  auto value = [](const std::array<double, 4>& f, double s, double u) {
    return f[0] * (1 - s) * (1 - u) + f[1] * s * (1 - u) + f[2] * (1 - s) * u + f[3] * s * u;
  };
  auto ds = [](const std::array<double, 4>& f, double u) { return (f[1] - f[0]) * (1 - u) + (f[3] - f[2]) * u; };
  auto du = [](const std::array<double, 4>& f, double s) { return (f[2] - f[0]) * (1 - s) + (f[3] - f[1]) * s; };
  double s = 0.5, u = 0.5;
  for (int it = 0; it < 30; ++it) {
    const double a = ds(g, u), b = du(g, s), c = ds(h, u), d = du(h, s);
    const double det = a * d - b * c;
    const double big = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (!(std::abs(det) > 1e-14 * big * big)) return std::nullopt;
    const double rg = value(g, s, u), rh = value(h, s, u);
    const double step_s = (-rg * d + rh * b) / det;
    const double step_u = (-rh * a + rg * c) / det;
    s += step_s;
    u += step_u;
    if (std::abs(step_s) + std::abs(step_u) < 1e-12) return std::pair{s, u};
  }
  return std::nullopt;
}

}  // namespace

double min_self_distance(std::span<const Vec3> chain, std::size_t window) {
  const std::size_t n = chain.size();
  auto at = [&](std::size_t i, std::ptrdiff_t off) -> const Vec3& {
    return chain[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i + n) + off) % n];
  };
  // (p_i - p_j) . T_i with a central-difference tangent; its zero set in
  // both arguments marks double normals.
  auto slope = [&](std::size_t i, std::size_t j) {
    const Vec3 d = chain[i % n] - chain[j % n];
    const Vec3 t = at(i % n, 1) - at(i % n, -1);
    return d.x * t.x + d.y * t.y;
  };
  auto straddles = [](const std::array<double, 4>& v) {
    return *std::min_element(v.begin(), v.end()) <= 0.0 && *std::max_element(v.begin(), v.end()) >= 0.0;
  };
  double best = std::numeric_limits<double>::infinity();
  double fallback = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cyclic_gap(i, j, n) <= window) continue;
      if (segments_intersect(chain[i], at(i, 1), chain[j], at(j, 1))) return 0.0;
      const double dij = segment_distance(chain[i], at(i, 1), chain[j], at(j, 1));
      fallback = std::min(fallback, dij);
      // Double normal inside the cell [i, i+1] x [j, j+1]: the chord is
      // perpendicular to the curve at both ends (local minima, saddles and
      // maxima of the pairwise distance alike).
      const std::array<double, 4> g = {slope(i, j), slope(i + 1, j), slope(i, j + 1), slope(i + 1, j + 1)};
      const std::array<double, 4> h = {slope(j, i), slope(j, i + 1), slope(j + 1, i), slope(j + 1, i + 1)};
      if (!straddles(g) || !straddles(h)) continue;
      // Bilinear zero of (g, h) in the cell by Newton. A singular Jacobian
      // means a continuum of double normals (round arcs); the cell's segment
      // distance is then already accurate.
      const auto root = bilinear_root(g, h);
      if (!root) {
        best = std::min(best, dij);
      } else if (root->first >= -1e-9 && root->first <= 1 + 1e-9 && root->second >= -1e-9 &&
                 root->second <= 1 + 1e-9) {
        const Vec3 a = chain[i] + root->first * (at(i, 1) - chain[i]);
        const Vec3 b = chain[j] + root->second * (at(j, 1) - chain[j]);
        best = std::min(best, planar_distance(a, b));
      }
    }
  }
  return std::isfinite(best) ? best : fallback;
}

}  // namespace torsionkit::polyline
