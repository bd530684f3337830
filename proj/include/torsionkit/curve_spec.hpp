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
#include <string>

#include <json.hpp>

#include "torsionkit/families.hpp"
#include "torsionkit/graph_curve.hpp"

namespace torsionkit {

struct HeightSpec {
  std::string type;  // zero | sine | cosine | plane
  ParamMap params;
};

/// One run's configuration, read from a single JSON document:
///
///   {"family": "circle", "params": {"radius": 1},
///    "height": {"type": "sine", "params": {"amp": 0.25, "freq": 3}},
///    "metric": "euclidean", "samples": 2048, "winding": 1}
struct CurveSpec {
  std::string family;
  ParamMap params;
  std::optional<HeightSpec> height;
  MetricSignature metric = MetricSignature::Euclidean3;
  std::size_t samples = kDefaultSamples;
  int winding = 1;
};

MetricSignature parse_metric(const std::string& name);
std::string metric_name(MetricSignature m);

/// Parses and validates; unknown families and keys are rejected before any
/// computation.
CurveSpec parse_curve_spec(const nlohmann::json& doc);
nlohmann::json to_json(const CurveSpec& spec);

/// Throws InvalidArgument / UnknownFamily.
void validate(const CurveSpec& spec);

/// The base curve of a graph run: exact kappa0 for circles and
/// radius_of_curvature, tangent-angle resampling for other planar families.
BaseCurve make_base(const CurveSpec& spec);

/// sine: amp sin(freq theta + phase); cosine likewise; plane: a x0 + b y0 + c.
/// freq * winding must be an integer so h has period 2 pi k.
HeightFunction make_height(const CurveSpec& spec, const BaseCurve& base);

}  // namespace torsionkit
