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

#include "specbound/estimator.hpp"

#include <string>

#include "detail/duals.hpp"
#include "detail/eigen_util.hpp"
#include "detail/moment_basis.hpp"
#include "specbound/error.hpp"

namespace specbound {

namespace {

using detail::to_eigen;
using detail::to_std;

Eigen::VectorXd padded(const TrigPolynomial& poly, std::size_t count) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(count));
  for (std::size_t k = 0; k < poly.coeffs.size() && k < count; ++k) {
    out(static_cast<Eigen::Index>(k)) = poly.coeffs[k];
  }
  return out;
}

}  // namespace

EstimatorProblem::EstimatorProblem(CovarianceSequence lags, TrigPolynomial prior,
                                   AngularGrid grid)
    : lags_(std::move(lags)), prior_(std::move(prior)), grid_(grid) {
  if (prior_.coeffs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "prior polynomial has no coefficients");
  }
  if (!prior_.positive_on(grid_)) {
    throw Error(ErrorCode::kInvalidArgument, "prior must be strictly positive on the grid");
  }
  if (2 * lags_.order() >= grid_.size()) {
    throw Error(ErrorCode::kAliasing, "lag order " + std::to_string(lags_.order()) +
                                          " aliases on a grid of " +
                                          std::to_string(grid_.size()) + " nodes");
  }
}

GridDensity RationalDensity::on(const AngularGrid& grid) const {
  const auto p = evaluate(numerator, grid);
  const auto q = evaluate(denominator, grid);
  std::vector<double> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!(q[j] > 0.0)) {
      throw Error(ErrorCode::kNonPositiveQ, "denominator is not positive on the grid");
    }
    values[j] = p[j] / q[j];
  }
  return GridDensity(grid, std::move(values));
}

RationalDensity solve_dual(const EstimatorProblem& problem, const SolverOptions& options,
                           const std::optional<TrigPolynomial>& start) {
  const std::size_t order = problem.lags().order();
  const auto basis = detail::cosine_basis(problem.grid().size(), order);
  const detail::RationalDual dual{basis, to_eigen(problem.lags().lags()),
                                  to_eigen(evaluate(problem.prior(), problem.grid()))};
  Eigen::VectorXd x0 = dual.default_start();
  if (start) {
    x0 = padded(*start, order + 1);
    if (!dual.value(x0)) {
      throw Error(ErrorCode::kNonPositiveQ, "starting denominator is not positive on the grid");
    }
  }
  const auto solution =
      detail::solve_rational(dual, x0, options.tolerance, options.max_iterations);

  RationalDensity out;
  out.numerator = problem.prior();
  out.denominator.coeffs = to_std(solution.coeffs);
  out.diagnostics.iterations = solution.newton.iterations;
  out.diagnostics.gradient_norm = solution.newton.gradient_norm;
  out.diagnostics.moment_residual = solution.moment_residual;
  out.diagnostics.hessian_pd_every_iterate = solution.newton.hessian_pd_every_iterate;
  return out;
}

DualEvaluation dual_value_and_gradient(const TrigPolynomial& q, const EstimatorProblem& problem) {
  const std::size_t order = problem.lags().order();
  const auto basis = detail::cosine_basis(problem.grid().size(), order);
  const detail::RationalDual dual{basis, to_eigen(problem.lags().lags()),
                                  to_eigen(evaluate(problem.prior(), problem.grid()))};
  const Eigen::VectorXd x = padded(q, order + 1);
  const auto value = dual.value(x);
  if (!value) {
    throw Error(ErrorCode::kNonPositiveQ, "Q is not positive at every grid node");
  }
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
  dual.derivatives(x, gradient, hessian);
  return {*value, to_std(gradient)};
}

}  // namespace specbound
