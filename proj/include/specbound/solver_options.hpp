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

#ifndef SPECBOUND_SOLVER_OPTIONS_HPP_
#define SPECBOUND_SOLVER_OPTIONS_HPP_

#include <cstddef>

#include "specbound/trig.hpp"

namespace specbound {

// Shared by the estimator, the maximum-entropy solvers and the box search.
struct SolverOptions {
  // Newton stops once the gradient infinity norm is <= tolerance * r0.
  double tolerance = 1e-10;
  int max_iterations = 200;
  std::size_t grid_size = kDefaultGridSize;
  // Coordinate step used to certify a box optimum.
  double step_tol = 1e-6;
};

struct SolverDiagnostics {
  int iterations = 0;
  double gradient_norm = 0.0;
  double moment_residual = 0.0;
  bool hessian_pd_every_iterate = true;
};

}  // namespace specbound

#endif  // SPECBOUND_SOLVER_OPTIONS_HPP_
