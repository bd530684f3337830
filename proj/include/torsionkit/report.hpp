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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsionkit/error.hpp"
#include "torsionkit/vec3.hpp"

namespace torsionkit {

struct SampleRow {
  double t = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
  double kappa = 0.0;
  std::optional<double> tau;  // empty where torsion is undefined
  std::optional<double> f;    // kernel runs only
};

struct Diagnostic {
  std::string module;
  std::string code;
  std::string message;
};

Diagnostic diagnostic_from(const Error& e);

/// Every field is optional; absent values are written as JSON null.
struct RunSummary {
  std::optional<double> identity_value;
  std::optional<std::string> verdict;
  std::optional<int> sign_changes;
  std::optional<Vec3> closure_defect;
  std::optional<double> ode_residual;
  std::optional<double> min_f;
  std::optional<double> tau_min;
  std::optional<double> tau_max;
  std::optional<double> kappa_min;
  std::vector<Diagnostic> diagnostics;
};

struct RunReport {
  nlohmann::json spec;
  std::vector<SampleRow> samples;
  RunSummary summary;

  bool ok() const noexcept { return summary.diagnostics.empty(); }
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);

/// %.17g, with -0 written as 0 so identical runs give identical bytes.
std::string format_number(double v);

/// Header `t,x,y,z,kappa,tau`; undefined torsion is written as NA.
std::string to_csv(const RunReport& report);
/// Top-level keys spec, samples, summary.
nlohmann::json to_json(const RunReport& report);

void emit(const RunReport& report, OutputFormat format, std::ostream& out);
/// Throws Io naming the path.
void emit(const RunReport& report, OutputFormat format, const std::filesystem::path& path);

}  // namespace torsionkit
