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

#include "specbound/multivariate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail/box_search.hpp"
#include "detail/duals.hpp"
#include "detail/eigen_util.hpp"
#include "detail/moment_basis.hpp"
#include "detail/parallel.hpp"
#include "specbound/bounds.hpp"
#include "specbound/error.hpp"

namespace specbound {

using detail::to_eigen;
using detail::to_std;

MultiBasis::MultiBasis(std::vector<std::vector<int>> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw Error(ErrorCode::kInvalidArgument, "basis has no entries");
  const std::size_t d = exponents_.front().size();
  if (d == 0 || d > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "basis dimension must be between 1 and " + std::to_string(kMaxDimension));
  }
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    const auto& e = exponents_[k];
    if (e.size() != d) {
      throw Error(ErrorCode::kInvalidArgument, "basis entries differ in dimension");
    }
    for (int a : e) {
      if (a < 0) throw Error(ErrorCode::kInvalidArgument, "basis exponents must be >= 0");
      if (k == 0 && a != 0) {
        throw Error(ErrorCode::kInvalidArgument, "basis entry 0 must be the constant function");
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (exponents_[j] == e) {
        throw Error(ErrorCode::kInvalidArgument, "basis has a repeated exponent vector");
      }
    }
  }
}

MultiBasis MultiBasis::axial(std::size_t dimension, std::size_t order) {
  std::vector<std::vector<int>> e{std::vector<int>(dimension, 0)};
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t k = 1; k <= order; ++k) {
      std::vector<int> v(dimension, 0);
      v[i] = static_cast<int>(k);
      e.push_back(std::move(v));
    }
  }
  return MultiBasis(std::move(e));
}

MultiBasis MultiBasis::tensor(std::size_t dimension, std::size_t order) {
  std::vector<std::vector<int>> e;
  std::vector<int> v(dimension, 0);
  while (true) {
    e.push_back(v);
    std::size_t i = dimension;
    while (i > 0 && v[i - 1] == static_cast<int>(order)) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  return MultiBasis(std::move(e));
}

int MultiBasis::max_exponent(std::size_t axis) const {
  int out = 0;
  for (const auto& e : exponents_) out = std::max(out, e.at(axis));
  return out;
}

std::size_t MultiBasis::shift(std::size_t k) const {
  const auto& e = exponents_.at(k);
  return static_cast<std::size_t>(*std::max_element(e.begin(), e.end()));
}

ProductGrid::ProductGrid(std::vector<AngularGrid> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "product grid dimension must be between 1 and " + std::to_string(kMaxDimension));
  }
  size_ = 1;
  for (const auto& a : axes_) size_ *= a.size();
}

ProductGrid ProductGrid::square(std::size_t dimension, std::size_t axis_size) {
  return ProductGrid(std::vector<AngularGrid>(dimension, AngularGrid(axis_size)));
}

double ProductGrid::cell_weight() const {
  double w = 1.0;
  for (const auto& a : axes_) w *= a.weight();
  return w;
}

std::vector<std::size_t> ProductGrid::unflatten(std::size_t flat) const {
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t i = axes_.size(); i-- > 0;) {
    idx[i] = flat % axes_[i].size();
    flat /= axes_[i].size();
  }
  return idx;
}

MultiGridDensity::MultiGridDensity(ProductGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "density has " + std::to_string(values_.size()) +
                                                 " values for a grid of " +
                                                 std::to_string(grid_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "density values must be finite and >= 0");
    }
  }
}

MultiGridDensity tensor_product(std::span<const GridDensity> factors) {
  if (factors.empty()) throw Error(ErrorCode::kInvalidArgument, "no factors");
  std::vector<AngularGrid> axes;
  for (const auto& f : factors) axes.push_back(f.grid());
  ProductGrid grid(std::move(axes));
  std::vector<double> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const auto idx = grid.unflatten(j);
    double v = 1.0;
    for (std::size_t i = 0; i < factors.size(); ++i) v *= factors[i][idx[i]];
    values[j] = v;
  }
  return MultiGridDensity(std::move(grid), std::move(values));
}

namespace {

void require_same_grid(const MultiGridDensity& p, const MultiGridDensity& q) {
  if (!(p.grid() == q.grid())) {
    throw Error(ErrorCode::kGridMismatch, "densities live on different product grids");
  }
}

// cos(a t_j) on an axis grid, with the phase reduced exactly.
std::vector<double> axis_cosines(const AngularGrid& grid, int a) {
  const std::size_t m = grid.size();
  const auto k = static_cast<std::size_t>(a);
  std::vector<double> out(m);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t phase = (k * j) % m;
    out[j] = sign * std::cos(kTwoPi * static_cast<double>(phase) / static_cast<double>(m));
  }
  return out;
}

void require_no_aliasing(const MultiBasis& basis, const ProductGrid& grid) {
  if (basis.dimension() != grid.dimension()) {
    throw Error(ErrorCode::kInvalidArgument, "basis and grid differ in dimension");
  }
  for (std::size_t i = 0; i < grid.dimension(); ++i) {
    const auto need = 4 * (static_cast<std::size_t>(basis.max_exponent(i)) + 1);
    if (grid.axis(i).size() < need) {
      throw Error(ErrorCode::kAliasing, "axis " + std::to_string(i) + " needs at least " +
                                            std::to_string(need) + " nodes for this basis");
    }
  }
}

detail::MomentBasis product_basis(const MultiBasis& basis, const ProductGrid& grid) {
  require_no_aliasing(basis, grid);
  const auto count = static_cast<Eigen::Index>(basis.size());
  const auto nodes = static_cast<Eigen::Index>(grid.size());
  detail::MomentBasis out;
  out.values.resize(count, nodes);
  for (Eigen::Index k = 0; k < count; ++k) {
    const auto& e = basis.exponents()[static_cast<std::size_t>(k)];
    std::vector<std::vector<double>> tables;
    for (std::size_t i = 0; i < e.size(); ++i) tables.push_back(axis_cosines(grid.axis(i), e[i]));
    for (Eigen::Index j = 0; j < nodes; ++j) {
      const auto idx = grid.unflatten(static_cast<std::size_t>(j));
      double v = 1.0;
      for (std::size_t i = 0; i < e.size(); ++i) v *= tables[i][idx[i]];
      out.values(k, j) = v;
    }
  }
  out.multipliers = Eigen::VectorXd::Ones(count);
  out.cell_weight = grid.cell_weight();
  return out;
}

Eigen::MatrixXd gram_of(const detail::MomentBasis& basis) {
  return basis.weighted_gram(Eigen::VectorXd::Ones(basis.nodes()));
}

void require_independent(const detail::MomentBasis& basis) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_of(basis),
                                                           Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 1e-10 * eig.eigenvalues().maxCoeff())) {
    throw Error(ErrorCode::kInvalidArgument,
                "basis functions are linearly dependent on the product grid");
  }
}

Eigen::VectorXd checked_moments(std::span<const double> moments, const MultiBasis& basis) {
  if (moments.size() != basis.size()) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(basis.size()) +
                                                 " moments, got " +
                                                 std::to_string(moments.size()));
  }
  for (double m : moments) {
    if (!std::isfinite(m)) throw Error(ErrorCode::kInvalidArgument, "moments must be finite");
  }
  if (!(moments[0] > 0.0)) throw Error(ErrorCode::kInvalidArgument, "moment r_0 must be > 0");
  return to_eigen(moments);
}

SolverDiagnostics diagnostics_of(const detail::DualSolution& s) {
  SolverDiagnostics d;
  d.iterations = s.newton.iterations;
  d.gradient_norm = s.newton.gradient_norm;
  d.moment_residual = s.moment_residual;
  d.hessian_pd_every_iterate = s.newton.hessian_pd_every_iterate;
  return d;
}

MultiMaxEntDensity maxent_on(const detail::MomentBasis& pb, const MultiBasis& basis,
                             const Eigen::VectorXd& moments,
                             const std::optional<Eigen::VectorXd>& start,
                             const SolverOptions& options) {
  const detail::MaxEntDual dual{pb, moments};
  const auto solution = detail::solve_maxent(dual, start ? *start : dual.default_start(),
                                             options.tolerance, options.max_iterations);
  return MultiMaxEntDensity{basis, to_std(solution.coeffs), diagnostics_of(solution)};
}

}  // namespace

double total_mass(const MultiGridDensity& density) {
  double sum = 0.0;
  for (double v : density.values()) sum += v;
  return sum * density.grid().cell_weight();
}

double entropy(const MultiGridDensity& density) {
  double sum = 0.0;
  for (double v : density.values()) {
    if (v > 0.0) sum -= v * std::log(v);
  }
  return sum * density.grid().cell_weight();
}

double kl_divergence(const MultiGridDensity& p, const MultiGridDensity& q) {
  require_same_grid(p, q);
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] <= 0.0) continue;
    if (q[j] <= 0.0) return std::numeric_limits<double>::infinity();
    sum += p[j] * std::log(p[j] / q[j]);
  }
  return sum * p.grid().cell_weight();
}

double tv_distance(const MultiGridDensity& p, const MultiGridDensity& q) {
  require_same_grid(p, q);
  std::vector<double> diff(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) diff[j] = p[j] - q[j];
  return prefix_sup(diff, p.grid().cell_weight(), /*trapezoid=*/false);
}

MultiPolynomial MultiPolynomial::constant(std::size_t dimension, double value) {
  return MultiPolynomial{MultiBasis({std::vector<int>(dimension, 0)}), {value}};
}

std::vector<double> MultiPolynomial::on(const ProductGrid& grid) const {
  if (coeffs.size() != basis.size()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial coefficients do not match its basis");
  }
  const auto pb = product_basis(basis, grid);
  return to_std(pb.polynomial(to_eigen(coeffs)));
}

std::vector<double> multi_compute_moments(const MultiGridDensity& density,
                                          const MultiBasis& basis) {
  const auto pb = product_basis(basis, density.grid());
  return to_std(pb.moments(to_eigen(density.values())));
}

std::vector<double> multi_basis_gram(const MultiBasis& basis, const ProductGrid& grid) {
  const auto pb = product_basis(basis, grid);
  require_independent(pb);
  const Eigen::MatrixXd g = gram_of(pb);
  return std::vector<double>(g.data(), g.data() + g.size());
}

MultiGridDensity MultiRationalDensity::on(const ProductGrid& grid) const {
  const auto p = numerator.on(grid);
  const auto q = denominator.on(grid);
  std::vector<double> values(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!(q[j] > 0.0)) {
      throw Error(ErrorCode::kNonPositiveQ, "denominator is not positive on the product grid");
    }
    values[j] = p[j] / q[j];
  }
  return MultiGridDensity(grid, std::move(values));
}

MultiRationalDensity multi_solve_dual(std::span<const double> moments,
                                      const MultiPolynomial& prior, const MultiBasis& basis,
                                      const ProductGrid& grid, const SolverOptions& options) {
  const auto r = checked_moments(moments, basis);
  const auto pb = product_basis(basis, grid);
  require_independent(pb);
  const auto p = prior.on(grid);
  for (double v : p) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "prior must be strictly positive on the grid");
    }
  }
  const detail::RationalDual dual{pb, r, to_eigen(p)};
  const auto solution = detail::solve_rational(dual, dual.default_start(), options.tolerance,
                                               options.max_iterations);
  return MultiRationalDensity{prior, MultiPolynomial{basis, to_std(solution.coeffs)},
                              diagnostics_of(solution)};
}

MultiGridDensity MultiMaxEntDensity::on(const ProductGrid& grid) const {
  auto values = MultiPolynomial{basis, lambdas}.on(grid);
  for (double& v : values) v = std::exp(-1.0 - v);
  return MultiGridDensity(grid, std::move(values));
}

MultiMaxEntDensity multi_solve_maxent(std::span<const double> moments, const MultiBasis& basis,
                                      const ProductGrid& grid, const SolverOptions& options,
                                      const std::optional<std::vector<double>>& start) {
  const auto r = checked_moments(moments, basis);
  const auto pb = product_basis(basis, grid);
  require_independent(pb);
  std::optional<Eigen::VectorXd> x0;
  if (start) {
    if (start->size() != basis.size()) {
      throw Error(ErrorCode::kInvalidArgument, "starting multipliers have the wrong length");
    }
    x0 = to_eigen(*start);
  }
  return maxent_on(pb, basis, r, x0, options);
}

MultiBoxMaxEnt multi_solve_maxent_box(const LagBox& box, const MultiBasis& basis,
                                      const ProductGrid& grid, const SolverOptions& options) {
  if (box.lower().size() != basis.size()) {
    throw Error(ErrorCode::kInvalidArgument, "box and basis differ in size");
  }
  const auto pb = product_basis(basis, grid);
  require_independent(pb);
  std::optional<Eigen::VectorXd> warm;

  auto solve_at = [&](const Eigen::VectorXd& r) -> std::optional<MultiMaxEntDensity> {
    if (!(r(0) > 0.0)) return std::nullopt;
    try {
      return maxent_on(pb, basis, r, warm, options);
    } catch (const Error&) {
      if (!warm) return std::nullopt;
    }
    try {
      return maxent_on(pb, basis, r, std::nullopt, options);
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
  // Corners of a moment box are rarely admissible and each failed solve runs
  // to the iteration cap.
  search_options.max_corner_starts = 0;
  const auto found = detail::maximize_over_box(to_eigen(box.lower()), to_eigen(box.upper()),
                                               oracle, search_options);
  warm.reset();
  auto density = solve_at(found.point);
  if (!density) {
    throw Error(ErrorCode::kNoInteriorSolution, "box optimum could not be re-solved");
  }
  MultiBoxMaxEnt out{std::move(*density), to_std(found.point), 0.0, found.certified,
                     found.evaluations};
  out.entropy = entropy(out.density.on(grid));
  return out;
}

MultiNoiseComputation multi_noise_tv_analysis(std::span<const double> clean_moments,
                                              std::span<const double> noise_moments,
                                              const MultiPolynomial& prior,
                                              const MultiBasis& basis, const ProductGrid& grid,
                                              const SolverOptions& options) {
  if (noise_moments.size() != clean_moments.size()) {
    throw Error(ErrorCode::kInvalidArgument, "clean and noise moments differ in length");
  }
  std::vector<double> summed(clean_moments.begin(), clean_moments.end());
  for (std::size_t k = 0; k < summed.size(); ++k) summed[k] += noise_moments[k];

  auto estimate = multi_solve_dual(summed, prior, basis, grid, options).on(grid);
  auto maxent_noisy = multi_solve_maxent(summed, basis, grid, options).on(grid);
  auto maxent_clean = multi_solve_maxent(clean_moments, basis, grid, options).on(grid);

  assembly::NoiseInputs inputs{};
  inputs.entropy_maxent_noisy = entropy(maxent_noisy);
  inputs.entropy_estimate = entropy(estimate);
  inputs.entropy_maxent_clean = entropy(maxent_clean);
  inputs.tv_maxent_noisy_vs_clean = tv_distance(maxent_noisy, maxent_clean);
  inputs.mass_estimate = total_mass(estimate);
  inputs.mass_maxent_noisy = total_mass(maxent_noisy);
  MultiNoiseComputation out{
      assembly::noise_report(inputs, static_cast<int>(grid.dimension())), std::move(estimate),
      std::move(maxent_noisy), std::move(maxent_clean)};
  out.report.add_caveat("multivariate TV uses lexicographic prefixes of the flattened grid");
  out.report.details["basis"] = basis.exponents();
  out.report.details["clean_moments"] = std::vector<double>(clean_moments.begin(),
                                                            clean_moments.end());
  out.report.details["noise_moments"] = std::vector<double>(noise_moments.begin(),
                                                            noise_moments.end());
  return out;
}

BoundReport multi_noise_tv_bound(std::span<const double> clean_moments,
                                 std::span<const double> noise_moments,
                                 const MultiPolynomial& prior, const MultiBasis& basis,
                                 const ProductGrid& grid, const SolverOptions& options) {
  return multi_noise_tv_analysis(clean_moments, noise_moments, prior, basis, grid, options)
      .report;
}

MultiFiniteSampleComputation multi_finite_sample_analysis(
    const LagBox& box, std::span<const double> clean_moments, const MultiBasis& basis,
    const ProductGrid& grid, const SolverOptions& options,
    const ProbabilityAssessment& probability) {
  if (probability.per_lag.size() != basis.size()) {
    throw Error(ErrorCode::kInvalidArgument, "probability assessment does not match the basis");
  }
  auto boxed = multi_solve_maxent_box(box, basis, grid, options);
  auto clean = multi_solve_maxent(clean_moments, basis, grid, options).on(grid);
  assembly::FiniteSampleInputs inputs{boxed.entropy, entropy(clean), boxed.certified};
  MultiFiniteSampleComputation out{
      assembly::finite_sample_report(inputs, probability, static_cast<int>(grid.dimension())),
      std::move(boxed), std::move(clean)};
  out.report.add_caveat(
      "sample moments pair each axis with its own shift: r_k = sum_t prod_i y_{t,i} "
      "y_{t+alpha_{k,i},i} / (N + 1 - max_i alpha_{k,i}); e.g. alpha = (1, 0) gives "
      "y_{t,1} y_{t+1,1} y_{t,2}^2");
  out.report.details["basis"] = basis.exponents();
  out.report.details["box_lower"] = box.lower();
  out.report.details["box_upper"] = box.upper();
  out.report.details["box_optimum_moments"] = out.box_maxent.moments;
  return out;
}

BoundReport multi_finite_sample_bound(const LagBox& box, std::span<const double> clean_moments,
                                      const MultiBasis& basis, const ProductGrid& grid,
                                      const SolverOptions& options,
                                      const ProbabilityAssessment& probability) {
  return multi_finite_sample_analysis(box, clean_moments, basis, grid, options, probability)
      .report;
}

BoundReport multi_kl_lower_bound(const MultiGridDensity& true_density, const LagBox& box,
                                 const MultiBasis& basis,
                                 const std::optional<ProbabilityAssessment>& probability) {
  if (box.upper().size() != basis.size()) {
    throw Error(ErrorCode::kInvalidArgument, "box and basis differ in size");
  }
  for (double v : true_density.values()) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::kNonPositiveDensity, "true density must be strictly positive");
    }
  }
  const auto pb = product_basis(basis, true_density.grid());
  require_independent(pb);
  const Eigen::VectorXd f = to_eigen(true_density.values());
  const Eigen::VectorXd r = pb.moments(f);
  Eigen::VectorXd mu = gram_of(pb).ldlt().solve(r);
  const double noise_floor = 1e-12 * r(0);
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (mu(k) < -noise_floor) {
      throw Error(ErrorCode::kNegativeMu, "projection coefficient mu_" + std::to_string(k) +
                                              " = " + std::to_string(mu(k)) + " is negative");
    }
    mu(k) = std::max(0.0, mu(k));
  }
  const double residual = (pb.polynomial(mu) - f).lpNorm<Eigen::Infinity>();
  const auto mu_std = to_std(mu);
  auto report = assembly::kl_lower_report(mu_std, box.upper(), entropy(true_density),
                                          probability,
                                          static_cast<int>(true_density.grid().dimension()));
  report.details["basis"] = basis.exponents();
  report.details["projection_residual_sup"] = residual;
  return report;
}

MultiSeries simulate_independent(std::span<const ProcessModel> models, std::size_t length,
                                 std::uint64_t seed) {
  if (models.empty() || models.size() > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument, "need between 1 and " +
                                                 std::to_string(kMaxDimension) + " axis models");
  }
  MultiSeries out;
  out.seed = seed;
  for (std::size_t i = 0; i < models.size(); ++i) {
    out.columns.push_back(simulate(models[i], length, derive_seed(seed, i)).values);
  }
  return out;
}

std::vector<double> multi_estimate_moments(const MultiSeries& series, const MultiBasis& basis) {
  if (series.dimension() != basis.dimension()) {
    throw Error(ErrorCode::kInvalidArgument, "series and basis differ in dimension");
  }
  const std::size_t length = series.length();
  for (const auto& c : series.columns) {
    if (c.size() != length) throw Error(ErrorCode::kInvalidArgument, "ragged series columns");
  }
  std::vector<double> out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t s = basis.shift(k);
    if (s >= length) {
      throw Error(ErrorCode::kOrderTooLarge,
                  "basis shift " + std::to_string(s) + " needs more than " +
                      std::to_string(length) + " samples");
    }
    const auto& e = basis.exponents()[k];
    double sum = 0.0;
    for (std::size_t t = 0; t + s < length; ++t) {
      double prod = 1.0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        prod *= series.columns[i][t] * series.columns[i][t + static_cast<std::size_t>(e[i])];
      }
      sum += prod;
    }
    out[k] = sum / static_cast<double>(length - s);
  }
  return out;
}

MultiGridDensity independent_spectrum(std::span<const ProcessModel> models,
                                      const ProductGrid& grid) {
  if (models.size() != grid.dimension()) {
    throw Error(ErrorCode::kInvalidArgument, "one model per grid axis is required");
  }
  std::vector<GridDensity> factors;
  for (std::size_t i = 0; i < models.size(); ++i) {
    factors.push_back(models[i].spectral_density(grid.axis(i)));
  }
  return tensor_product(factors);
}

ProbabilityAssessment multi_moment_assessment(const MultiSeries& series, const MultiBasis& basis,
                                              const LagBox& box) {
  if (box.lower().size() != basis.size()) {
    throw Error(ErrorCode::kInvalidArgument, "box and basis differ in size");
  }
  const std::size_t length = series.length();
  std::vector<LagProbability> per_lag;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t s = basis.shift(k);
    if (s >= length) throw Error(ErrorCode::kOrderTooLarge, "basis shift exceeds the series");
    const auto& e = basis.exponents()[k];
    double m1 = 0.0;
    double m2 = 0.0;
    const std::size_t count = length - s;
    for (std::size_t t = 0; t < count; ++t) {
      double x = 1.0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        x *= series.columns[i][t] * series.columns[i][t + static_cast<std::size_t>(e[i])];
      }
      m1 += x;
      m2 += x * x;
    }
    m1 /= static_cast<double>(count);
    m2 /= static_cast<double>(count);
    const double moments[2] = {m1, m2};
    LagProbability lag;
    lag.lower = box.lower()[k];
    lag.upper = box.upper()[k];
    lag.method = ProbabilityMethod::kMomentCantelli;
    lag.probability = moment_interval_probability(moments, lag.lower, lag.upper, length - 1, s);
    per_lag.push_back(lag);
  }
  return ProbabilityAssessment::from_lags(std::move(per_lag));
}

ProbabilityAssessment multi_monte_carlo_interval_probability(
    std::span<const ProcessModel> models, const MultiBasis& basis, const LagBox& box,
    std::size_t n_samples, std::size_t trials, std::uint64_t seed) {
  if (trials < 100) {
    throw Error(ErrorCode::kInvalidArgument, "Monte Carlo assessment needs at least 100 trials");
  }
  const std::size_t count = basis.size();
  if (box.lower().size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "box and basis differ in size");
  }
  std::vector<unsigned char> inside(trials * count, 0);
  detail::parallel_for(trials, [&](std::size_t t) {
    const auto series = simulate_independent(models, n_samples + 1, derive_seed(seed, t));
    const auto r = multi_estimate_moments(series, basis);
    for (std::size_t k = 0; k < count; ++k) {
      inside[t * count + k] = r[k] >= box.lower()[k] && r[k] <= box.upper()[k];
    }
  });
  std::vector<std::size_t> hits(count, 0);
  std::size_t joint = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    bool all = true;
    for (std::size_t k = 0; k < count; ++k) {
      const bool in = inside[t * count + k] != 0;
      hits[k] += in;
      all = all && in;
    }
    joint += all;
  }
  std::vector<LagProbability> per_lag;
  for (std::size_t k = 0; k < count; ++k) {
    LagProbability lag;
    lag.lower = box.lower()[k];
    lag.upper = box.upper()[k];
    lag.method = ProbabilityMethod::kMonteCarlo;
    lag.probability = static_cast<double>(hits[k]) / static_cast<double>(trials);
    lag.wilson = wilson_interval(hits[k], trials);
    per_lag.push_back(lag);
  }
  auto out = ProbabilityAssessment::from_lags(std::move(per_lag));
  out.joint_frequency = static_cast<double>(joint) / static_cast<double>(trials);
  out.joint_wilson = wilson_interval(joint, trials);
  out.trials = trials;
  return out;
}

}  // namespace specbound
