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

#ifndef SPECBOUND_BOUNDS_HPP_
#define SPECBOUND_BOUNDS_HPP_

// Error bounds for the covariance-extension estimator:
//   * total-variation upper bound under additive noise,
//   * total-variation upper bound from a box of finite-sample lags,
//   * Kullback-Leibler lower bound from the box upper ends.

#include <optional>

#include "specbound/estimator.hpp"
#include "specbound/maxent.hpp"
#include "specbound/report.hpp"
#include "specbound/sampling.hpp"

namespace specbound {

// 3 sqrt(-1 + sqrt(1 + (4/9) kl)). Throws Error(kNegativeKL) for kl < 0.
double tv_from_kl(double kl);

// Everything computed on the way to a noise bound, for callers that want to
// compare the estimate against a known truth.
struct NoiseBoundComputation {
  BoundReport report;
  RationalDensity estimator;   // fitted to clean + noise lags
  GridDensity estimate;        // the estimate on the grid
  GridDensity maxent_noisy;    // maximum entropy for clean + noise lags
  GridDensity maxent_clean;    // maximum entropy for clean lags
};

NoiseBoundComputation noise_tv_analysis(const CovarianceSequence& clean_lags,
                                        std::span<const double> noise_lags,
                                        const TrigPolynomial& prior, const AngularGrid& grid,
                                        const SolverOptions& options);

// Throws Error(kToeplitzNotPD) when the summed lags are not a valid window and
// Error(kNegativeKL) when H[maxent noisy] < H[estimate] beyond solver noise.
BoundReport noise_tv_upper_bound(const CovarianceSequence& clean_lags,
                                 std::span<const double> noise_lags, const TrigPolynomial& prior,
                                 const AngularGrid& grid, const SolverOptions& options);

struct FiniteSampleComputation {
  BoundReport report;
  BoxMaxEnt box_maxent;
  GridDensity maxent_clean;
};

FiniteSampleComputation finite_sample_analysis(const LagBox& box,
                                               const CovarianceSequence& clean_lags,
                                               const AngularGrid& grid,
                                               const SolverOptions& options,
                                               const ProbabilityAssessment& probability);

BoundReport finite_sample_tv_upper_bound(const LagBox& box, const CovarianceSequence& clean_lags,
                                         const AngularGrid& grid, const SolverOptions& options,
                                         const ProbabilityAssessment& probability);

// -sum_k mu_k b_k - H[true] with mu_0 = r_0 and mu_k = 2 r_k of the true
// density. Throws Error(kNegativeMu) if any mu_k is negative and
// Error(kNonPositiveDensity) unless the density is strictly positive.
BoundReport kl_lower_bound(const GridDensity& true_density, const LagBox& box,
                           const std::optional<ProbabilityAssessment>& probability =
                               std::nullopt);

// Shared assembly for the univariate and product-grid variants.
namespace assembly {

struct NoiseInputs {
  double entropy_maxent_noisy;
  double entropy_estimate;
  double entropy_maxent_clean;
  double tv_maxent_noisy_vs_clean;
  double mass_estimate;
  double mass_maxent_noisy;
};
BoundReport noise_report(const NoiseInputs& inputs, int dimension);

struct FiniteSampleInputs {
  double entropy_maxent_box;
  double entropy_maxent_clean;
  bool box_optimum_certified;
};
BoundReport finite_sample_report(const FiniteSampleInputs& inputs,
                                 const ProbabilityAssessment& probability, int dimension);

BoundReport kl_lower_report(std::span<const double> mu, std::span<const double> upper,
                            double entropy_true,
                            const std::optional<ProbabilityAssessment>& probability,
                            int dimension);

}  // namespace assembly

}  // namespace specbound

#endif  // SPECBOUND_BOUNDS_HPP_
