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

#include "specbound/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specbound/error.hpp"

namespace specbound {

AngularGrid::AngularGrid(std::size_t size) : size_(size) {
  if (size < 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "angular grid needs at least 4 nodes, got " + std::to_string(size));
  }
}

double AngularGrid::node(std::size_t j) const {
  return -kPi + kTwoPi * static_cast<double>(j) / static_cast<double>(size_);
}

std::vector<double> AngularGrid::nodes() const {
  std::vector<double> out(size_);
  for (std::size_t j = 0; j < size_; ++j) out[j] = node(j);
  return out;
}

double TrigPolynomial::operator()(double theta) const {
  if (coeffs.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    sum += coeffs[k] * std::cos(static_cast<double>(k) * theta);
  }
  return coeffs[0] + 2.0 * sum;
}

bool TrigPolynomial::positive_on(const AngularGrid& grid) const {
  const auto values = evaluate(*this, grid);
  return std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; });
}

CovarianceSequence::CovarianceSequence(std::vector<double> lags) : lags_(std::move(lags)) {
  if (lags_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "covariance sequence is empty");
  }
  for (double r : lags_) {
    if (!std::isfinite(r)) {
      throw Error(ErrorCode::kInvalidArgument, "covariance lags must be finite");
    }
  }
  if (!(lags_[0] > 0.0)) {
    throw Error(ErrorCode::kToeplitzNotPD, "r0 must be positive");
  }
  for (std::size_t k = 1; k < lags_.size(); ++k) {
    if (!(std::abs(lags_[k]) < lags_[0])) {
      throw Error(ErrorCode::kToeplitzNotPD,
                  "|r" + std::to_string(k) + "| must be smaller than r0");
    }
  }
  if (!toeplitz_positive_definite(lags_)) {
    throw Error(ErrorCode::kToeplitzNotPD, "Toeplitz matrix of the lags is not positive definite");
  }
}

GridDensity::GridDensity(AngularGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "density has " + std::to_string(values_.size()) +
                                                 " values for a grid of " +
                                                 std::to_string(grid_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "density values must be finite and nonnegative");
    }
  }
}

std::vector<double> evaluate(const TrigPolynomial& poly, const AngularGrid& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = poly(grid.node(j));
  return out;
}

double total_mass(const GridDensity& density) {
  double sum = 0.0;
  for (double v : density.values()) sum += v;
  return sum * density.grid().weight();
}

namespace {

void require_same_grid(const GridDensity& p, const GridDensity& q) {
  if (!(p.grid() == q.grid())) {
    throw Error(ErrorCode::kGridMismatch, "densities live on different grids (" +
                                              std::to_string(p.grid().size()) + " vs " +
                                              std::to_string(q.grid().size()) + " nodes)");
  }
}

void require_no_aliasing(const AngularGrid& grid, std::size_t order) {
  if (2 * order >= grid.size()) {
    throw Error(ErrorCode::kAliasing, "order " + std::to_string(order) +
                                          " aliases on a grid of " +
                                          std::to_string(grid.size()) + " nodes");
  }
}

// (1/M) sum_j cos(k t_j) f_j for k = 0..order.
std::vector<double> cosine_moments(const AngularGrid& grid, std::span<const double> f,
                                   std::size_t order) {
  const std::size_t m = grid.size();
  std::vector<double> out(order + 1, 0.0);
  for (std::size_t k = 0; k <= order; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      // k * j reduced mod m keeps the argument small and exact.
      const std::size_t phase = (k * j) % m;
      const double angle = kTwoPi * static_cast<double>(phase) / static_cast<double>(m);
      // t_j = -pi + 2 pi j / m, so cos(k t_j) = (-1)^k cos(2 pi k j / m).
      sum += std::cos(angle) * f[j];
    }
    out[k] = ((k % 2 == 0) ? sum : -sum) / static_cast<double>(m);
  }
  return out;
}

}  // namespace

std::vector<double> compute_lags(const GridDensity& density, std::size_t order) {
  require_no_aliasing(density.grid(), order);
  return cosine_moments(density.grid(), density.values(), order);
}

double entropy(const GridDensity& density) {
  double sum = 0.0;
  for (double v : density.values()) {
    if (v > 0.0) sum -= v * std::log(v);
  }
  return sum * density.grid().weight();
}

double kl_divergence(const GridDensity& p, const GridDensity& q) {
  require_same_grid(p, q);
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double pj = p[j];
    if (pj <= 0.0) continue;
    if (q[j] <= 0.0) return std::numeric_limits<double>::infinity();
    sum += pj * std::log(pj / q[j]);
  }
  return sum * p.grid().weight();
}

double prefix_sup(std::span<const double> difference, double weight, bool trapezoid) {
  double best = 0.0;
  double running = 0.0;
  const double first = difference.empty() ? 0.0 : difference.front();
  for (double d : difference) {
    running += d;
    const double partial = trapezoid ? running - 0.5 * first - 0.5 * d : running;
    best = std::max(best, std::abs(partial * weight));
  }
  // Closing node at +pi coincides with the first node by periodicity.
  best = std::max(best, std::abs(running * weight));
  return best;
}

double tv_distance(const GridDensity& p, const GridDensity& q) {
  require_same_grid(p, q);
  std::vector<double> diff(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) diff[j] = p[j] - q[j];
  return prefix_sup(diff, p.grid().weight(), /*trapezoid=*/true);
}

std::vector<double> cepstral_coeffs(const GridDensity& density, std::size_t order) {
  require_no_aliasing(density.grid(), order);
  std::vector<double> logs(density.size());
  for (std::size_t j = 0; j < density.size(); ++j) {
    if (!(density[j] > 0.0)) {
      throw Error(ErrorCode::kNonPositiveDensity,
                  "cepstrum needs a strictly positive density (node " + std::to_string(j) + ")");
    }
    logs[j] = std::log(density[j]);
  }
  return cosine_moments(density.grid(), logs, order);
}

bool toeplitz_positive_definite(std::span<const double> lags) {
  if (lags.empty() || !(lags[0] > 0.0)) return false;
  const std::size_t n = lags.size();
  const double threshold = 1e-12 * lags[0];
  // Plain Cholesky on the (n x n) Toeplitz matrix; n is small.
  std::vector<double> l(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = lags[i - j];
      for (std::size_t k = 0; k < j; ++k) sum -= l[i * n + k] * l[j * n + k];
      if (i == j) {
        if (!(sum > threshold)) return false;
        l[i * n + i] = std::sqrt(sum);
      } else {
        l[i * n + j] = sum / l[j * n + j];
      }
    }
  }
  return true;
}

}  // namespace specbound
