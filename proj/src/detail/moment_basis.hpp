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

#ifndef SPECBOUND_DETAIL_MOMENT_BASIS_HPP_
#define SPECBOUND_DETAIL_MOMENT_BASIS_HPP_

#include <Eigen/Dense>
#include <cstddef>

namespace specbound::detail {

// Basis functions sampled on a (possibly product) grid together with the
// coefficient multipliers of the polynomial convention:
//   polynomial(c)_j = sum_k multiplier_k c_k B_k(t_j)
//   moment_k(f)     = mean_j B_k(t_j) f_j
//   pairing(r, c)   = sum_k multiplier_k r_k c_k
// so that pairing(moments(f), c) = mean_j f_j polynomial(c)_j.
struct MomentBasis {
  Eigen::MatrixXd values;       // count x nodes
  Eigen::VectorXd multipliers;  // count
  double cell_weight = 0.0;     // quadrature weight of one node

  Eigen::Index count() const { return values.rows(); }
  Eigen::Index nodes() const { return values.cols(); }

  Eigen::VectorXd polynomial(const Eigen::VectorXd& coeffs) const {
    return values.transpose() * multipliers.cwiseProduct(coeffs);
  }
  Eigen::VectorXd moments(const Eigen::VectorXd& f) const {
    return values * f / static_cast<double>(nodes());
  }
  double pairing(const Eigen::VectorXd& r, const Eigen::VectorXd& c) const {
    return multipliers.cwiseProduct(r).dot(c);
  }
  // m_j m_k mean(B_j B_k w)
  Eigen::MatrixXd weighted_gram(const Eigen::VectorXd& w) const {
    const Eigen::MatrixXd scaled = values * w.asDiagonal();
    Eigen::MatrixXd gram = scaled * values.transpose() / static_cast<double>(nodes());
    return multipliers.asDiagonal() * gram * multipliers.asDiagonal();
  }
};

// Cosine basis on a univariate grid: B_k(t) = cos(k t), multipliers (1, 2, ..., 2).
MomentBasis cosine_basis(std::size_t grid_size, std::size_t order);

}  // namespace specbound::detail

#endif  // SPECBOUND_DETAIL_MOMENT_BASIS_HPP_
