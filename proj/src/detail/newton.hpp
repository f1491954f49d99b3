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

#ifndef SPECBOUND_DETAIL_NEWTON_HPP_
#define SPECBOUND_DETAIL_NEWTON_HPP_

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "specbound/error.hpp"

namespace specbound::detail {

struct NewtonOptions {
  double gradient_tolerance = 1e-10;  // absolute, on the infinity norm
  int max_iterations = 200;
  double armijo = 1e-4;
  double shrink = 0.5;
  double min_step = 1e-14;
  // Raised when the line search cannot find a feasible point.
  ErrorCode infeasible_code = ErrorCode::kBoundaryApproach;
  const char* problem_name = "dual";
};

struct NewtonResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  double gradient_norm = 0.0;
  bool hessian_pd_every_iterate = true;
};

// Smooth convex objective over an open domain. value() returns nullopt
// outside the domain; derivatives() fills gradient and Hessian for a point
// already known to be inside.
struct ConvexObjective {
  std::function<std::optional<double>(const Eigen::VectorXd&)> value;
  std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&, Eigen::MatrixXd&)> derivatives;
};

// Damped Newton with Armijo backtracking and a feasibility guard.
// Throws Error(kMaxIterations) or Error(options.infeasible_code).
NewtonResult minimize_newton(const ConvexObjective& objective, Eigen::VectorXd start,
                             const NewtonOptions& options);

}  // namespace specbound::detail

#endif  // SPECBOUND_DETAIL_NEWTON_HPP_
