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

#ifndef SPECBOUND_TRIG_HPP_
#define SPECBOUND_TRIG_HPP_

// Numeric substrate: uniform angular grids, real symmetric trigonometric
// polynomials, grid-sampled densities and the quadratures built on them.
//
// Conventions used throughout the library:
//   * a trigonometric polynomial c has the value c0 + 2 * sum_k ck cos(k t);
//   * covariance lags are r_k = (1/2pi) * integral of cos(k t) Phi(t) dt, so
//     Phi = r0 + 2 * sum_k rk cos(k t);
//   * integrals over [-pi, pi) use the uniform-grid trapezoidal rule, which
//     is the rectangle rule for periodic integrands.

#include <cstddef>
#include <span>
#include <vector>

namespace specbound {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr std::size_t kDefaultGridSize = 4096;

// Uniform grid t_j = -pi + 2 pi j / size, j = 0..size-1.
class AngularGrid {
 public:
  explicit AngularGrid(std::size_t size = kDefaultGridSize);

  std::size_t size() const { return size_; }
  double weight() const { return kTwoPi / static_cast<double>(size_); }
  double node(std::size_t j) const;
  std::vector<double> nodes() const;

  friend bool operator==(const AngularGrid&, const AngularGrid&) = default;

 private:
  std::size_t size_;
};

// Real symmetric trigonometric polynomial c0 + 2 sum_{k>=1} ck cos(k t).
struct TrigPolynomial {
  std::vector<double> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double operator()(double theta) const;

  // Membership in the open positive cone, tested on a dense grid.
  bool positive_on(const AngularGrid& grid) const;
};

// Finite covariance window r0..rn whose Toeplitz matrix is positive definite.
class CovarianceSequence {
 public:
  // Throws Error(kToeplitzNotPD) unless r0 > 0, |rk| < r0 and T_n is PD.
  explicit CovarianceSequence(std::vector<double> lags);

  const std::vector<double>& lags() const { return lags_; }
  std::size_t order() const { return lags_.size() - 1; }
  double r0() const { return lags_.front(); }
  double operator[](std::size_t k) const { return lags_[k]; }

 private:
  std::vector<double> lags_;
};

// A nonnegative density sampled at the nodes of an AngularGrid.
class GridDensity {
 public:
  // Throws Error(kInvalidArgument) on size mismatch, negative or non-finite
  // values.
  GridDensity(AngularGrid grid, std::vector<double> values);

  const AngularGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

 private:
  AngularGrid grid_;
  std::vector<double> values_;
};

// Values of poly at every grid node; not clamped.
std::vector<double> evaluate(const TrigPolynomial& poly, const AngularGrid& grid);

// Integral of the density over [-pi, pi).
double total_mass(const GridDensity& density);

// r_k for k = 0..order. Throws Error(kAliasing) when order >= size / 2.
std::vector<double> compute_lags(const GridDensity& density, std::size_t order);

// H = -integral Phi log Phi, with 0 log 0 = 0.
double entropy(const GridDensity& density);

// integral p log(p / q). Returns +infinity when q = 0 somewhere p > 0.
double kl_divergence(const GridDensity& p, const GridDensity& q);

// sup over theta of |integral_{-pi}^{theta} (p - q)|, using cumulative
// trapezoidal sums including the closing node at +pi.
double tv_distance(const GridDensity& p, const GridDensity& q);

// Cumulative-prefix supremum for an already differenced, weighted sequence.
// Shared by the univariate and flattened product-grid distances.
double prefix_sup(std::span<const double> difference, double weight, bool trapezoid);

// c_k = (1/2pi) integral cos(k t) log Phi(t) dt for k = 0..order.
// Throws Error(kNonPositiveDensity) when any value is <= 0.
std::vector<double> cepstral_coeffs(const GridDensity& density, std::size_t order);

// True iff the Toeplitz matrix of lags has a Cholesky factorisation with all
// pivots above 1e-12 * r0.
bool toeplitz_positive_definite(std::span<const double> lags);

}  // namespace specbound

#endif  // SPECBOUND_TRIG_HPP_
