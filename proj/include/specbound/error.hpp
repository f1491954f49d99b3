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

#ifndef SPECBOUND_ERROR_HPP_
#define SPECBOUND_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace specbound {

// Every failure the library reports carries one of these codes. The C API
// maps them one-to-one onto sb_status values.
enum class ErrorCode {
  kInvalidArgument = 1,
  kGridMismatch,
  kAliasing,
  kToeplitzNotPD,
  kNonPositiveQ,
  kNonPositiveDensity,
  kMaxIterations,
  kBoundaryApproach,
  kNoInteriorSolution,
  kEmptyFeasibleBox,
  kNegativeKL,
  kNegativeMu,
  kNonStationaryModel,
  kOrderTooLarge,
  kUnknownDistribution,
  kInvalidMoments,
};

const char* error_code_name(ErrorCode code);

// True for codes produced by an iterative solver rather than by input
// validation.
bool is_solver_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace specbound

#endif  // SPECBOUND_ERROR_HPP_
