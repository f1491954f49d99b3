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

#include "detail/duals.hpp"

#include <cmath>

namespace specbound::detail {

namespace {

// exp() overflows past this exponent; such iterates are outside the domain.
constexpr double kMaxExponent = 700.0;

}  // namespace

std::optional<double> RationalDual::value(const Eigen::VectorXd& q) const {
  const Eigen::VectorXd poly = basis.polynomial(q);
  if (!(poly.minCoeff() > 0.0)) return std::nullopt;
  const double log_term = prior.dot(poly.array().log().matrix()) / static_cast<double>(poly.size());
  return basis.pairing(lags, q) - log_term;
}

void RationalDual::derivatives(const Eigen::VectorXd& q, Eigen::VectorXd& gradient,
                               Eigen::MatrixXd& hessian) const {
  const Eigen::VectorXd poly = basis.polynomial(q);
  const Eigen::VectorXd ratio = prior.cwiseQuotient(poly);
  gradient = basis.multipliers.cwiseProduct(lags - basis.moments(ratio));
  hessian = basis.weighted_gram(ratio.cwiseQuotient(poly));
}

Eigen::VectorXd RationalDual::default_start() const {
  Eigen::VectorXd q = Eigen::VectorXd::Zero(basis.count());
  q(0) = prior.mean() / lags(0);
  return q;
}

std::optional<double> MaxEntDual::value(const Eigen::VectorXd& lambda) const {
  const Eigen::VectorXd exponent = (-1.0 - basis.polynomial(lambda).array()).matrix();
  if (!(exponent.maxCoeff() < kMaxExponent)) return std::nullopt;
  return exponent.array().exp().mean() + basis.pairing(lags, lambda);
}

void MaxEntDual::derivatives(const Eigen::VectorXd& lambda, Eigen::VectorXd& gradient,
                             Eigen::MatrixXd& hessian) const {
  const Eigen::VectorXd phi = density(lambda);
  gradient = basis.multipliers.cwiseProduct(lags - basis.moments(phi));
  hessian = basis.weighted_gram(phi);
}

Eigen::VectorXd MaxEntDual::density(const Eigen::VectorXd& lambda) const {
  return (-1.0 - basis.polynomial(lambda).array()).exp().matrix();
}

Eigen::VectorXd MaxEntDual::default_start() const {
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(basis.count());
  lambda(0) = -1.0 - std::log(lags(0));
  return lambda;
}

DualSolution solve_rational(const RationalDual& dual, const Eigen::VectorXd& start,
                            double tolerance, int max_iterations) {
  NewtonOptions options;
  options.gradient_tolerance = tolerance * dual.lags(0);
  options.max_iterations = max_iterations;
  options.infeasible_code = ErrorCode::kBoundaryApproach;
  options.problem_name = "estimator dual";
  ConvexObjective objective{
      [&](const Eigen::VectorXd& q) { return dual.value(q); },
      [&](const Eigen::VectorXd& q, Eigen::VectorXd& g, Eigen::MatrixXd& h) {
        dual.derivatives(q, g, h);
      }};
  DualSolution out;
  out.newton = minimize_newton(objective, start, options);
  out.coeffs = out.newton.x;
  out.density = dual.prior.cwiseQuotient(dual.basis.polynomial(out.coeffs));
  out.moment_residual = (dual.basis.moments(out.density) - dual.lags).lpNorm<Eigen::Infinity>();
  return out;
}

DualSolution solve_maxent(const MaxEntDual& dual, const Eigen::VectorXd& start,
                          double tolerance, int max_iterations) {
  NewtonOptions options;
  options.gradient_tolerance = tolerance * dual.lags(0);
  options.max_iterations = max_iterations;
  options.infeasible_code = ErrorCode::kNoInteriorSolution;
  options.problem_name = "maximum-entropy dual";
  ConvexObjective objective{
      [&](const Eigen::VectorXd& l) { return dual.value(l); },
      [&](const Eigen::VectorXd& l, Eigen::VectorXd& g, Eigen::MatrixXd& h) {
        dual.derivatives(l, g, h);
      }};
  DualSolution out;
  out.newton = minimize_newton(objective, start, options);
  out.coeffs = out.newton.x;
  out.density = dual.density(out.coeffs);
  out.moment_residual = (dual.basis.moments(out.density) - dual.lags).lpNorm<Eigen::Infinity>();
  return out;
}

}  // namespace specbound::detail
