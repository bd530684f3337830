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

#include "torsionkit/error.hpp"

namespace torsionkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSpacelikeTangent: return "NonSpacelikeTangent";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NonPositiveCurvature: return "NonPositiveCurvature";
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::NonPositiveSolution: return "NonPositiveSolution";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::ZeroTorsionTarget: return "ZeroTorsionTarget";
    case ErrorCode::DegenerateSpeed: return "DegenerateSpeed";
    case ErrorCode::NonClosingParameters: return "NonClosingParameters";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string module, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      module_(std::move(module)),
      detail_(message) {}

}  // namespace torsionkit
