// Copyright 2026 The specbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specbound/error.hpp"

namespace specbound {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kAliasing: return "Aliasing";
    case ErrorCode::kToeplitzNotPD: return "ToeplitzNotPD";
    case ErrorCode::kNonPositiveQ: return "NonPositiveQ";
    case ErrorCode::kNonPositiveDensity: return "NonPositiveDensity";
    case ErrorCode::kMaxIterations: return "MaxIterations";
    case ErrorCode::kBoundaryApproach: return "BoundaryApproach";
    case ErrorCode::kNoInteriorSolution: return "NoInteriorSolution";
    case ErrorCode::kEmptyFeasibleBox: return "EmptyFeasibleBox";
    case ErrorCode::kNegativeKL: return "NegativeKL";
    case ErrorCode::kNegativeMu: return "NegativeMu";
    case ErrorCode::kNonStationaryModel: return "NonStationaryModel";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kUnknownDistribution: return "UnknownDistribution";
    case ErrorCode::kInvalidMoments: return "InvalidMoments";
  }
  return "Unknown";
}

bool is_solver_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMaxIterations:
    case ErrorCode::kBoundaryApproach:
    case ErrorCode::kNoInteriorSolution:
    case ErrorCode::kNegativeKL:
      return true;
    default:
      return false;
  }
}

}  // namespace specbound
