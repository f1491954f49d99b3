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

#ifndef SPECBOUND_ESTIMATOR_HPP_
#define SPECBOUND_ESTIMATOR_HPP_

// Covariance-extension estimator Phi = P / Q. For a prior P > 0 and a
// positive definite lag window r0..rn, Q is the unique minimiser over the
// positive cone of
//
//   J(q) = r0 q0 + 2 sum_k rk qk - (1/2pi) integral P log Q,
//
// and the resulting Phi reproduces r0..rn exactly.

#include <optional>
#include <vector>

#include "specbound/solver_options.hpp"
#include "specbound/trig.hpp"

namespace specbound {

class EstimatorProblem {
 public:
  // Throws Error(kInvalidArgument) when the prior is not strictly positive on
  // the grid or the lag order aliases.
  EstimatorProblem(CovarianceSequence lags, TrigPolynomial prior, AngularGrid grid);

  const CovarianceSequence& lags() const { return lags_; }
  const TrigPolynomial& prior() const { return prior_; }
  const AngularGrid& grid() const { return grid_; }

 private:
  CovarianceSequence lags_;
  TrigPolynomial prior_;
  AngularGrid grid_;
};

struct RationalDensity {
  TrigPolynomial numerator;
  TrigPolynomial denominator;
  SolverDiagnostics diagnostics;

  GridDensity on(const AngularGrid& grid) const;
};

struct DualEvaluation {
  double value = 0.0;
  std::vector<double> gradient;
};

// Throws Error(kMaxIterations) or Error(kBoundaryApproach).
RationalDensity solve_dual(const EstimatorProblem& problem, const SolverOptions& options,
                           const std::optional<TrigPolynomial>& start = std::nullopt);

// Throws Error(kNonPositiveQ) if q is not positive at every node.
DualEvaluation dual_value_and_gradient(const TrigPolynomial& q, const EstimatorProblem& problem);

}  // namespace specbound

#endif  // SPECBOUND_ESTIMATOR_HPP_
