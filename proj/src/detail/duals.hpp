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

#ifndef SPECBOUND_DETAIL_DUALS_HPP_
#define SPECBOUND_DETAIL_DUALS_HPP_

#include <Eigen/Dense>
#include <optional>

#include "detail/moment_basis.hpp"
#include "detail/newton.hpp"

namespace specbound::detail {

// Dual of the prior-weighted estimator: J(q) = <r, q> - mean(P log Q).
struct RationalDual {
  const MomentBasis& basis;
  Eigen::VectorXd lags;
  Eigen::VectorXd prior;  // P at the nodes

  std::optional<double> value(const Eigen::VectorXd& q) const;
  // Gradient m_k (r_k - moment_k(P/Q)) and Hessian m_j m_k mean(B_j B_k P / Q^2).
  void derivatives(const Eigen::VectorXd& q, Eigen::VectorXd& gradient,
                   Eigen::MatrixXd& hessian) const;
  Eigen::VectorXd default_start() const;
};

// Dual of entropy maximisation: F(l) = mean(exp(-1 - L)) + <r, l>.
struct MaxEntDual {
  const MomentBasis& basis;
  Eigen::VectorXd lags;

  std::optional<double> value(const Eigen::VectorXd& lambda) const;
  void derivatives(const Eigen::VectorXd& lambda, Eigen::VectorXd& gradient,
                   Eigen::MatrixXd& hessian) const;
  Eigen::VectorXd density(const Eigen::VectorXd& lambda) const;
  Eigen::VectorXd default_start() const;
};

struct DualSolution {
  Eigen::VectorXd coeffs;
  Eigen::VectorXd density;  // at the nodes
  NewtonResult newton;
  double moment_residual = 0.0;  // max_k |moment_k(density) - r_k|
};

DualSolution solve_rational(const RationalDual& dual, const Eigen::VectorXd& start,
                            double tolerance, int max_iterations);
DualSolution solve_maxent(const MaxEntDual& dual, const Eigen::VectorXd& start,
                          double tolerance, int max_iterations);

}  // namespace specbound::detail

#endif  // SPECBOUND_DETAIL_DUALS_HPP_
