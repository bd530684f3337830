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

#include "torsionkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace torsionkit {
namespace {

nlohmann::json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v == 0.0 ? 0.0 : *v;
}

}  // namespace

Diagnostic diagnostic_from(const Error& e) {
  return Diagnostic{e.module(), std::string(to_string(e.code())), e.detail()};
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw Error(ErrorCode::InvalidArgument, "gallery-cli", "output format must be csv or json, got '" + name + "'");
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const RunReport& report) {
  std::string out = "t,x,y,z,kappa,tau\n";
  for (const auto& row : report.samples) {
    out += format_number(row.t) + ',' + format_number(row.x) + ',' + format_number(row.y) + ',' +
           format_number(row.z) + ',' + format_number(row.kappa) + ',' +
           (row.tau && std::isfinite(*row.tau) ? format_number(*row.tau) : "NA") + '\n';
  }
  return out;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& row : report.samples) {
    nlohmann::json s = {{"t", number_or_null(row.t)},         {"x", number_or_null(row.x)},
                        {"y", number_or_null(row.y)},         {"z", number_or_null(row.z)},
                        {"kappa", number_or_null(row.kappa)}, {"tau", number_or_null(row.tau)}};
    if (row.f) s["f"] = number_or_null(row.f);
    samples.push_back(std::move(s));
  }
  const RunSummary& r = report.summary;
  nlohmann::json summary;
  summary["identity_value"] = number_or_null(r.identity_value);
  summary["verdict"] = r.verdict ? nlohmann::json(*r.verdict) : nlohmann::json(nullptr);
  summary["sign_changes"] = r.sign_changes ? nlohmann::json(*r.sign_changes) : nlohmann::json(nullptr);
  if (r.closure_defect) {
    summary["closure_defect"] = {number_or_null(r.closure_defect->x), number_or_null(r.closure_defect->y),
                                 number_or_null(r.closure_defect->z)};
  } else {
    summary["closure_defect"] = nullptr;
  }
  summary["ode_residual"] = number_or_null(r.ode_residual);
  summary["min_f"] = number_or_null(r.min_f);
  summary["tau_min"] = number_or_null(r.tau_min);
  summary["tau_max"] = number_or_null(r.tau_max);
  summary["kappa_min"] = number_or_null(r.kappa_min);
  summary["diagnostics"] = nlohmann::json::array();
  for (const auto& d : r.diagnostics) {
    summary["diagnostics"].push_back({{"module", d.module}, {"code", d.code}, {"message", d.message}});
  }
  return {{"spec", report.spec}, {"samples", std::move(samples)}, {"summary", std::move(summary)}};
}

void emit(const RunReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << to_csv(report);
  } else {
    out << to_json(report).dump(2) << '\n';
  }
}

void emit(const RunReport& report, OutputFormat format, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "gallery-cli", "cannot open '" + path.string() + "' for writing");
  emit(report, format, file);
  file.flush();
  if (!file) throw Error(ErrorCode::Io, "gallery-cli", "write to '" + path.string() + "' failed");
}

}  // namespace torsionkit
