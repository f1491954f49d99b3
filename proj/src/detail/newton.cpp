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

#include "detail/newton.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace specbound::detail {

NewtonResult minimize_newton(const ConvexObjective& objective, Eigen::VectorXd start,
                             const NewtonOptions& options) {
  NewtonResult result;
  result.x = std::move(start);
  auto initial = objective.value(result.x);
  if (!initial || !std::isfinite(*initial)) {
    throw Error(options.infeasible_code,
                std::string(options.problem_name) + ": starting point outside the domain");
  }
  double f = *initial;
  const Eigen::Index dim = result.x.size();
  Eigen::VectorXd gradient(dim);
  Eigen::MatrixXd hessian(dim, dim);
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  for (int iteration = 0;; ++iteration) {
    objective.derivatives(result.x, gradient, hessian);
    result.gradient_norm = gradient.lpNorm<Eigen::Infinity>();
    result.iterations = iteration;
    result.value = f;
    if (!std::isfinite(result.gradient_norm)) {
      throw Error(options.infeasible_code,
                  std::string(options.problem_name) + ": non-finite gradient");
    }
    if (result.gradient_norm <= options.gradient_tolerance) return result;
    if (iteration >= options.max_iterations) {
      throw Error(ErrorCode::kMaxIterations,
                  std::string(options.problem_name) + ": no convergence after " +
                      std::to_string(options.max_iterations) + " Newton iterations (|grad| = " +
                      std::to_string(result.gradient_norm) + ")");
    }

    Eigen::LLT<Eigen::MatrixXd> llt(hessian);
    Eigen::VectorXd direction;
    if (llt.info() == Eigen::Success) {
      direction = -llt.solve(gradient);
    } else {
      result.hessian_pd_every_iterate = false;
      const double shift = 1e-10 * (1.0 + hessian.diagonal().cwiseAbs().maxCoeff());
      Eigen::MatrixXd shifted = hessian;
      shifted.diagonal().array() += shift;
      direction = -shifted.ldlt().solve(gradient);
    }
    const double slope = gradient.dot(direction);
    if (!(slope < 0.0)) direction = -gradient;

    double step = 1.0;
    bool any_feasible = false;
    bool accepted = false;
    // Near the optimum the predicted decrease sinks below the rounding error
    // of the objective and Armijo rejects good steps. There the full step is
    // judged by the gradient norm instead.
    const double decrement = -gradient.dot(direction);
    if (decrement < 1e-12 * (1.0 + std::abs(f))) {
      Eigen::VectorXd candidate = result.x + direction;
      auto fc = objective.value(candidate);
      if (fc && std::isfinite(*fc)) {
        Eigen::VectorXd g(dim);
        Eigen::MatrixXd h(dim, dim);
        objective.derivatives(candidate, g, h);
        if (g.lpNorm<Eigen::Infinity>() < result.gradient_norm) {
          result.x = std::move(candidate);
          f = *fc;
          continue;
        }
      }
    }
    while (step >= options.min_step) {
      Eigen::VectorXd candidate = result.x + step * direction;
      auto fc = objective.value(candidate);
      if (fc && std::isfinite(*fc)) {
        any_feasible = true;
        const double slack = 8.0 * kEps * std::abs(f);
        if (*fc <= f + options.armijo * step * gradient.dot(direction) + slack) {
          result.x = std::move(candidate);
          f = *fc;
          accepted = true;
          break;
        }
      }
      step *= options.shrink;
    }
    if (!accepted) {
      if (!any_feasible) {
        throw Error(options.infeasible_code,
                    std::string(options.problem_name) +
                        ": line search cannot stay inside the domain (approaching its boundary)");
      }
      throw Error(ErrorCode::kMaxIterations,
                  std::string(options.problem_name) + ": line search stalled at |grad| = " +
                      std::to_string(result.gradient_norm));
    }
  }
}

}  // namespace specbound::detail
