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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "torsionkit/vec3.hpp"

// Planar polyline geometry on the xy components of Vec3 samples. A closed
// chain of n points has segments p[i] -> p[(i + 1) % n].
namespace torsionkit::polyline {

bool segments_intersect(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

double segment_distance(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// First pair of non-adjacent segments (i < j) of the closed chain that
/// intersect, by brute-force pair sweep.
std::optional<std::pair<std::size_t, std::size_t>> find_self_crossing(std::span<const Vec3> chain);

/// Smallest distance between two parts of the closed chain that are not
/// neighbours along the curve. Pairs of samples closer than `window` steps in
/// parameter are never compared. Among the remaining pairs only crossings and
/// double normals (chords perpendicular to the curve at both ends, i.e.
/// critical points of the pairwise distance) count, so a round circle
/// reports its width rather than the chord at the window edge.
double min_self_distance(std::span<const Vec3> chain, std::size_t window);

}  // namespace torsionkit::polyline
