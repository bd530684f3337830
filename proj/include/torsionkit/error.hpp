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

#include <stdexcept>
#include <string>
#include <string_view>

namespace torsionkit {

enum class ErrorCode {
  InvalidArgument,
  NonSpacelikeTangent,
  DegenerateCurve,
  NotClosed,
  NonPositiveCurvature,
  NonConvex,
  NotSimple,
  NotPlanar,
  NotSpacelike,
  NonPositiveSolution,
  OutsideDisk,
  ZeroTorsionTarget,
  DegenerateSpeed,
  NonClosingParameters,
  UnknownFamily,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the toolkit surfaces as this exception. `module()` names
/// the component that raised it (e.g. "graph-curve") so reports can carry
/// provenance.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }
  /// The message without the code prefix that what() carries.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string module_;
  std::string detail_;
};

}  // namespace torsionkit
