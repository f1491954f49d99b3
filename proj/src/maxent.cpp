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

#include "specbound/maxent.hpp"

#include <cmath>
#include <string>

#include "detail/box_search.hpp"
#include "detail/duals.hpp"
#include "detail/eigen_util.hpp"
#include "detail/moment_basis.hpp"
#include "specbound/error.hpp"

namespace specbound {

using detail::to_eigen;
using detail::to_std;

double MaxEntDensity::operator()(double theta) const {
  double exponent = -1.0;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const double weight = k == 0 ? 1.0 : 2.0;
    exponent -= weight * lambdas[k] * std::cos(static_cast<double>(k) * theta);
  }
  return std::exp(exponent);
}

GridDensity MaxEntDensity::on(const AngularGrid& grid) const {
  TrigPolynomial poly{lambdas};
  auto values = evaluate(poly, grid);
  for (double& v : values) v = std::exp(-1.0 - v);
  return GridDensity(grid, std::move(values));
}

LagBox::LagBox(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "lag box bounds must be nonempty and equally long");
  }
  for (std::size_t k = 0; k < lower_.size(); ++k) {
    if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k]) || lower_[k] > upper_[k]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lag box interval " + std::to_string(k) + " is invalid");
    }
  }
}

LagBox LagBox::around(std::span<const double> centre, double delta) {
  if (centre.empty() || !(delta >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "box centre must be nonempty and delta >= 0");
  }
  std::vector<double> lower(centre.size());
  std::vector<double> upper(centre.size());
  const double half_width = delta * centre[0];
  for (std::size_t k = 0; k < centre.size(); ++k) {
    lower[k] = centre[k] - half_width;
    upper[k] = centre[k] + half_width;
  }
  return LagBox(std::move(lower), std::move(upper));
}

std::vector<double> LagBox::centre() const {
  std::vector<double> out(lower_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = 0.5 * (lower_[k] + upper_[k]);
  return out;
}

bool LagBox::contains(std::span<const double> lags) const {
  if (lags.size() < lower_.size()) return false;
  for (std::size_t k = 0; k < lower_.size(); ++k) {
    if (!(lags[k] >= lower_[k] && lags[k] <= upper_[k])) return false;
  }
  return true;
}

namespace {

MaxEntDensity solve_on_basis(const detail::MomentBasis& basis, const Eigen::VectorXd& lags,
                             const std::optional<Eigen::VectorXd>& start,
                             const SolverOptions& options) {
  const detail::MaxEntDual dual{basis, lags};
  const Eigen::VectorXd x0 = start ? *start : dual.default_start();
  const auto solution =
      detail::solve_maxent(dual, x0, options.tolerance, options.max_iterations);
  MaxEntDensity out;
  out.lambdas = to_std(solution.coeffs);
  out.diagnostics.iterations = solution.newton.iterations;
  out.diagnostics.gradient_norm = solution.newton.gradient_norm;
  out.diagnostics.moment_residual = solution.moment_residual;
  out.diagnostics.hessian_pd_every_iterate = solution.newton.hessian_pd_every_iterate;
  return out;
}

}  // namespace

MaxEntDensity solve_maxent(const CovarianceSequence& lags, const AngularGrid& grid,
                           const SolverOptions& options,
                           const std::optional<std::vector<double>>& start) {
  if (2 * lags.order() >= grid.size()) {
    throw Error(ErrorCode::kAliasing, "lag order aliases on the grid");
  }
  const auto basis = detail::cosine_basis(grid.size(), lags.order());
  std::optional<Eigen::VectorXd> x0;
  if (start) {
    if (start->size() != lags.lags().size()) {
      throw Error(ErrorCode::kInvalidArgument, "starting multipliers have the wrong length");
    }
    x0 = to_eigen(*start);
  }
  return solve_on_basis(basis, to_eigen(lags.lags()), x0, options);
}

MaxEntDualEvaluation maxent_dual_value_and_gradient(std::span<const double> lambdas,
                                                    const CovarianceSequence& lags,
                                                    const AngularGrid& grid) {
  if (lambdas.size() != lags.lags().size()) {
    throw Error(ErrorCode::kInvalidArgument, "multipliers and lags differ in length");
  }
  const auto basis = detail::cosine_basis(grid.size(), lags.order());
  const detail::MaxEntDual dual{basis, to_eigen(lags.lags())};
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(
      lambdas.data(), static_cast<Eigen::Index>(lambdas.size()));
  const auto value = dual.value(x);
  if (!value) throw Error(ErrorCode::kInvalidArgument, "multipliers overflow the exponential");
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
  dual.derivatives(x, gradient, hessian);
  return {*value, to_std(gradient)};
}

EntropyIdentity maxent_entropy_identity_check(const MaxEntDensity& density,
                                              const CovarianceSequence& lags,
                                              const AngularGrid& grid) {
  if (density.lambdas.size() != lags.lags().size()) {
    throw Error(ErrorCode::kInvalidArgument, "multipliers and lags differ in length");
  }
  EntropyIdentity out;
  out.quadrature = entropy(density.on(grid));
  double pairing = 0.0;
  for (std::size_t k = 0; k < lags.lags().size(); ++k) {
    pairing += (k == 0 ? 1.0 : 2.0) * density.lambdas[k] * lags[k];
  }
  out.closed_form = kTwoPi * lags.r0() + kTwoPi * pairing;
  return out;
}

BoxMaxEnt solve_maxent_box(const LagBox& box, const AngularGrid& grid,
                           const SolverOptions& options) {
  const std::size_t order = box.order();
  if (2 * order >= grid.size()) {
    throw Error(ErrorCode::kAliasing, "lag order aliases on the grid");
  }
  const auto basis = detail::cosine_basis(grid.size(), order);
  std::optional<Eigen::VectorXd> warm;

  auto solve_at = [&](const Eigen::VectorXd& r) -> std::optional<MaxEntDensity> {
    if (!toeplitz_positive_definite(std::span<const double>(r.data(), r.size()))) {
      return std::nullopt;
    }
    try {
      return solve_on_basis(basis, r, warm, options);
    } catch (const Error&) {
      if (!warm) return std::nullopt;
    }
    try {
      return solve_on_basis(basis, r, std::nullopt, options);
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  const detail::EntropyOracle oracle = [&](const Eigen::VectorXd& r) -> std::optional<double> {
    auto solved = solve_at(r);
    if (!solved) return std::nullopt;
    warm = to_eigen(solved->lambdas);
    return entropy(solved->on(grid));
  };

  detail::BoxSearchOptions search_options;
  search_options.step_tol = options.step_tol;
  const auto found =
      detail::maximize_over_box(to_eigen(box.lower()), to_eigen(box.upper()), oracle,
                                search_options);

  BoxMaxEnt out;
  out.lags = to_std(found.point);
  warm.reset();
  auto density = solve_at(found.point);
  if (!density) {
    throw Error(ErrorCode::kNoInteriorSolution, "box optimum could not be re-solved");
  }
  out.density = std::move(*density);
  out.entropy = entropy(out.density.on(grid));
  out.certified = found.certified;
  out.evaluations = found.evaluations;
  return out;
}

}  // namespace specbound
