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

#ifndef SPECBOUND_MULTIVARIATE_HPP_
#define SPECBOUND_MULTIVARIATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "specbound/maxent.hpp"
#include "specbound/report.hpp"
#include "specbound/sampling.hpp"
#include "specbound/solver_options.hpp"
#include "specbound/trig.hpp"

namespace specbound {

inline constexpr std::size_t kMaxDimension = 2;
inline constexpr std::size_t kMaxAxisGridSize = 256;
inline constexpr std::size_t kMaxMultiOrder = 8;

// Exponent vectors alpha_k; entry k stands for prod_i cos(alpha_{k,i} theta_i).
// Entry 0 must be the zero vector.
class MultiBasis {
 public:
  explicit MultiBasis(std::vector<std::vector<int>> exponents);

  // Constant, then (k, 0, ..), (0, k, ..), .. for k = 1..order on each axis.
  static MultiBasis axial(std::size_t dimension, std::size_t order);
  // All exponent vectors with entries in 0..order, lexicographic.
  static MultiBasis tensor(std::size_t dimension, std::size_t order);

  std::size_t dimension() const { return exponents_.front().size(); }
  std::size_t size() const { return exponents_.size(); }
  std::size_t order() const { return exponents_.size() - 1; }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }
  int max_exponent(std::size_t axis) const;
  // Largest exponent over all axes of entry k.
  std::size_t shift(std::size_t k) const;

  friend bool operator==(const MultiBasis&, const MultiBasis&) = default;

 private:
  std::vector<std::vector<int>> exponents_;
};

// Product of per-axis grids, flattened with the last axis varying fastest.
class ProductGrid {
 public:
  explicit ProductGrid(std::vector<AngularGrid> axes);
  static ProductGrid square(std::size_t dimension, std::size_t axis_size);

  std::size_t dimension() const { return axes_.size(); }
  const AngularGrid& axis(std::size_t i) const { return axes_[i]; }
  std::size_t size() const { return size_; }
  double cell_weight() const;
  // Per-axis node indices of a flat index.
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  friend bool operator==(const ProductGrid&, const ProductGrid&) = default;

 private:
  std::vector<AngularGrid> axes_;
  std::size_t size_ = 0;
};

class MultiGridDensity {
 public:
  MultiGridDensity(ProductGrid grid, std::vector<double> values);

  const ProductGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

 private:
  ProductGrid grid_;
  std::vector<double> values_;
};

// f(theta_1) g(theta_2) ... on the product of the factor grids.
MultiGridDensity tensor_product(std::span<const GridDensity> factors);

double total_mass(const MultiGridDensity& density);
double entropy(const MultiGridDensity& density);
double kl_divergence(const MultiGridDensity& p, const MultiGridDensity& q);
// sup over lexicographic prefixes of the flattened grid of the cumulative
// difference.
double tv_distance(const MultiGridDensity& p, const MultiGridDensity& q);

// sum_k c_k alpha_k.
struct MultiPolynomial {
  MultiBasis basis;
  std::vector<double> coeffs;

  static MultiPolynomial constant(std::size_t dimension, double value);
  std::vector<double> on(const ProductGrid& grid) const;
};

// (1/(2 pi)^d) integral alpha_k Phi. Throws Error(kAliasing) when an axis has
// fewer than 4 (max exponent + 1) nodes.
std::vector<double> multi_compute_moments(const MultiGridDensity& density,
                                          const MultiBasis& basis);

// Gram matrix mean(alpha_j alpha_k) on the grid; throws Error(kInvalidArgument)
// when it is not positive definite.
std::vector<double> multi_basis_gram(const MultiBasis& basis, const ProductGrid& grid);

struct MultiRationalDensity {
  MultiPolynomial numerator;
  MultiPolynomial denominator;
  SolverDiagnostics diagnostics;

  MultiGridDensity on(const ProductGrid& grid) const;
};

MultiRationalDensity multi_solve_dual(std::span<const double> moments,
                                      const MultiPolynomial& prior, const MultiBasis& basis,
                                      const ProductGrid& grid, const SolverOptions& options);

// exp(-1 - sum_k lambda_k alpha_k).
struct MultiMaxEntDensity {
  MultiBasis basis;
  std::vector<double> lambdas;
  SolverDiagnostics diagnostics;

  MultiGridDensity on(const ProductGrid& grid) const;
};

MultiMaxEntDensity multi_solve_maxent(std::span<const double> moments, const MultiBasis& basis,
                                      const ProductGrid& grid, const SolverOptions& options,
                                      const std::optional<std::vector<double>>& start =
                                          std::nullopt);

struct MultiBoxMaxEnt {
  MultiMaxEntDensity density;
  std::vector<double> moments;
  double entropy = 0.0;
  bool certified = false;
  int evaluations = 0;
};

// Box points are feasible when the inner maximum-entropy solve converges.
MultiBoxMaxEnt multi_solve_maxent_box(const LagBox& box, const MultiBasis& basis,
                                      const ProductGrid& grid, const SolverOptions& options);

struct MultiNoiseComputation {
  BoundReport report;
  MultiGridDensity estimate;
  MultiGridDensity maxent_noisy;
  MultiGridDensity maxent_clean;
};

MultiNoiseComputation multi_noise_tv_analysis(std::span<const double> clean_moments,
                                              std::span<const double> noise_moments,
                                              const MultiPolynomial& prior,
                                              const MultiBasis& basis, const ProductGrid& grid,
                                              const SolverOptions& options);

BoundReport multi_noise_tv_bound(std::span<const double> clean_moments,
                                 std::span<const double> noise_moments,
                                 const MultiPolynomial& prior, const MultiBasis& basis,
                                 const ProductGrid& grid, const SolverOptions& options);

struct MultiFiniteSampleComputation {
  BoundReport report;
  MultiBoxMaxEnt box_maxent;
  MultiGridDensity maxent_clean;
};

MultiFiniteSampleComputation multi_finite_sample_analysis(
    const LagBox& box, std::span<const double> clean_moments, const MultiBasis& basis,
    const ProductGrid& grid, const SolverOptions& options,
    const ProbabilityAssessment& probability);

BoundReport multi_finite_sample_bound(const LagBox& box, std::span<const double> clean_moments,
                                      const MultiBasis& basis, const ProductGrid& grid,
                                      const SolverOptions& options,
                                      const ProbabilityAssessment& probability);

// mu = least-squares projection of the density onto the basis (Gram solve).
// Throws Error(kNegativeMu).
BoundReport multi_kl_lower_bound(const MultiGridDensity& true_density, const LagBox& box,
                                 const MultiBasis& basis,
                                 const std::optional<ProbabilityAssessment>& probability =
                                     std::nullopt);

// Column-per-axis sample y_{t,i}, t = 0..N.
struct MultiSeries {
  std::vector<std::vector<double>> columns;
  std::uint64_t seed = 0;

  std::size_t dimension() const { return columns.size(); }
  std::size_t length() const { return columns.empty() ? 0 : columns.front().size(); }
};

// Independent axes, axis i driven by derive_seed(seed, i): a VAR with
// diagonal coefficients when every model is autoregressive.
MultiSeries simulate_independent(std::span<const ProcessModel> models, std::size_t length,
                                 std::uint64_t seed);

// r_k = (1/(N+1-s_k)) sum_t prod_i y_{t,i} y_{t+alpha_{k,i},i}, s_k the largest
// exponent of entry k. Throws Error(kOrderTooLarge) when s_k > N.
std::vector<double> multi_estimate_moments(const MultiSeries& series, const MultiBasis& basis);

// Spectrum of independent axes: the product of the axis spectra.
MultiGridDensity independent_spectrum(std::span<const ProcessModel> models,
                                      const ProductGrid& grid);

// Cantelli assessment from the empirical moments of the per-k products.
ProbabilityAssessment multi_moment_assessment(const MultiSeries& series, const MultiBasis& basis,
                                              const LagBox& box);

ProbabilityAssessment multi_monte_carlo_interval_probability(
    std::span<const ProcessModel> models, const MultiBasis& basis, const LagBox& box,
    std::size_t n_samples, std::size_t trials, std::uint64_t seed);

}  // namespace specbound

#endif  // SPECBOUND_MULTIVARIATE_HPP_
