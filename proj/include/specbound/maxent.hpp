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

#ifndef SPECBOUND_MAXENT_HPP_
#define SPECBOUND_MAXENT_HPP_

// Shannon-entropy maximisation under trigonometric moment constraints.
//
// The maximiser has the form Phi(t) = exp(-1 - l0 - 2 sum_k lk cos(k t)) and
// its entropy satisfies H = 2 pi r0 + 2 pi (l0 r0 + 2 sum_k lk rk).

#include <optional>
#include <span>
#include <vector>

#include "specbound/solver_options.hpp"
#include "specbound/trig.hpp"

namespace specbound {

struct MaxEntDensity {
  std::vector<double> lambdas;
  SolverDiagnostics diagnostics;

  double operator()(double theta) const;
  GridDensity on(const AngularGrid& grid) const;
};

// Per-lag interval [lower_k, upper_k] for k = 0..n.
class LagBox {
 public:
  // Throws Error(kInvalidArgument) on size mismatch, empty box, non-finite
  // bounds or lower_k > upper_k.
  LagBox(std::vector<double> lower, std::vector<double> upper);

  // [r_k - delta r0, r_k + delta r0] around a centre sequence.
  static LagBox around(std::span<const double> centre, double delta);

  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  std::size_t order() const { return lower_.size() - 1; }
  std::vector<double> centre() const;
  bool contains(std::span<const double> lags) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

// Throws Error(kMaxIterations) or Error(kNoInteriorSolution).
MaxEntDensity solve_maxent(const CovarianceSequence& lags, const AngularGrid& grid,
                           const SolverOptions& options,
                           const std::optional<std::vector<double>>& start = std::nullopt);

struct MaxEntDualEvaluation {
  double value = 0.0;
  std::vector<double> gradient;
};

// mean(exp(-1 - lambda(theta))) + <lambda, r> and its gradient.
MaxEntDualEvaluation maxent_dual_value_and_gradient(std::span<const double> lambdas,
                                                    const CovarianceSequence& lags,
                                                    const AngularGrid& grid);

struct EntropyIdentity {
  double quadrature = 0.0;   // -integral Phi log Phi on the grid
  double closed_form = 0.0;  // 2 pi r0 + 2 pi (l0 r0 + 2 sum lk rk)
};

EntropyIdentity maxent_entropy_identity_check(const MaxEntDensity& density,
                                              const CovarianceSequence& lags,
                                              const AngularGrid& grid);

struct BoxMaxEnt {
  MaxEntDensity density;
  std::vector<double> lags;  // optimal lag vector inside the box
  double entropy = 0.0;
  bool certified = false;    // no improving coordinate step of size step_tol
  int evaluations = 0;
};

// Maximises H over the lag vectors of the box that form a positive definite
// Toeplitz window. Throws Error(kEmptyFeasibleBox).
BoxMaxEnt solve_maxent_box(const LagBox& box, const AngularGrid& grid,
                           const SolverOptions& options);

}  // namespace specbound

#endif  // SPECBOUND_MAXENT_HPP_
