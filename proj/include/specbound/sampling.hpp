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

#ifndef SPECBOUND_SAMPLING_HPP_
#define SPECBOUND_SAMPLING_HPP_

// Statistical layer: stationary Gaussian process models with known spectra,
// sample covariance lags, additive noise and per-lag interval probability
// assessments.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "specbound/maxent.hpp"
#include "specbound/trig.hpp"

namespace specbound {

enum class ProcessKind { kWhiteGaussian, kAR, kMA, kARMA };

const char* process_kind_name(ProcessKind kind);

// y_t = sum_i ar_i y_{t-i} + e_t + sum_j ma_j e_{t-j},  e_t ~ N(0, variance).
struct ProcessModel {
  ProcessKind kind = ProcessKind::kWhiteGaussian;
  std::vector<double> ar;
  std::vector<double> ma;
  double innovation_variance = 1.0;

  static ProcessModel white(double variance);
  static ProcessModel autoregressive(std::vector<double> ar, double variance);
  static ProcessModel moving_average(std::vector<double> ma, double variance);
  static ProcessModel arma(std::vector<double> ar, std::vector<double> ma, double variance);

  // Throws Error(kNonStationaryModel) when the AR polynomial has a root on or
  // inside the unit circle, Error(kInvalidArgument) for a bad variance, a
  // kind/coefficient mismatch or a spectrum with a zero.
  void validate() const;

  std::size_t order() const;
  std::string id() const;

  // sigma^2 |1 + sum ma_j e^{-ij t}|^2 / |1 - sum ar_i e^{-ii t}|^2, the
  // density whose (1/2pi)-normalised cosine coefficients are the lags.
  double spectral_density(double theta) const;
  GridDensity spectral_density(const AngularGrid& grid) const;

  // Exact autocovariances r_0..r_n (quadrature on a fine grid).
  std::vector<double> autocovariance(std::size_t order) const;
};

struct SampleSeries {
  std::vector<double> values;
  std::string model_id;
  std::uint64_t seed = 0;
};

// Deterministic stream seed for trial `stream` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Stationary draw of `length` values after a burn-in of max(1000, 50 order)
// steps. Throws Error(kNonStationaryModel).
SampleSeries simulate(const ProcessModel& model, std::size_t length, std::uint64_t seed);

// r_k = (1 / (N + 1 - k)) sum_{t=0}^{N-k} y_t y_{t+k} for a series y_0..y_N.
// No positive-definite projection. Throws Error(kOrderTooLarge) unless
// order < length.
std::vector<double> estimate_lags(std::span<const double> series, std::size_t order);

enum class ProbabilityMethod { kMarginal, kMomentMarkov, kMomentCantelli, kMonteCarlo };

const char* probability_method_name(ProbabilityMethod method);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

// 95% Wilson score interval for `successes` out of `trials`.
Interval wilson_interval(std::size_t successes, std::size_t trials);

struct LagProbability {
  double lower = 0.0;
  double upper = 0.0;
  double probability = 1.0;
  ProbabilityMethod method = ProbabilityMethod::kMarginal;
  std::optional<Interval> wilson;
};

// Per-lag interval probabilities and their product. The analytic methods
// produce an assessment that is an upper bound on each interval
// probability; the product treats the lags as independent.
struct ProbabilityAssessment {
  std::vector<LagProbability> per_lag;
  double product = 1.0;
  std::optional<double> joint_frequency;  // Monte Carlo only
  std::optional<Interval> joint_wilson;
  std::size_t trials = 0;

  static ProbabilityAssessment from_lags(std::vector<LagProbability> per_lag);
  // product recomputed from per_lag
  double recompute_product() const;
};

// Law of the pair (y_t, y_{t+k}) for a zero-mean Gaussian process.
struct GaussianPairLaw {
  double variance = 1.0;    // r_0
  double covariance = 0.0;  // r_k
};
struct UnknownPairLaw {};
using PairDistribution = std::variant<GaussianPairLaw, UnknownPairLaw>;

// P{X <= s} and P{X >= s} for X = y_t y_{t+k} under a Gaussian pair law.
double product_cdf(const GaussianPairLaw& law, double s);
double product_survival(const GaussianPairLaw& law, double s);

// 1 - P{X <= a}^{N+1-k} - P{X >= b}^{N+1-k}, clamped to [0, 1].
// Throws Error(kUnknownDistribution) for UnknownPairLaw and
// Error(kOrderTooLarge) when k > N.
double marginal_interval_probability(const PairDistribution& pair, double lower, double upper,
                                     std::size_t n_samples, std::size_t k);

enum class MomentBound { kCantelli, kMarkov };

// Same chain with moment-based tail bounds. moments = (m1, m2) of X.
// Cantelli: P{X >= b} <= var / (var + (b - m1)^2) for b > m1, mirrored for a.
// Markov (X >= 0 only): P{X >= b} <= m1 / b.
// Throws Error(kInvalidMoments) unless m2 >= m1^2 and both are finite.
double moment_interval_probability(std::span<const double> moments, double lower, double upper,
                                   std::size_t n_samples, std::size_t k,
                                   MomentBound bound = MomentBound::kCantelli);

// Analytic assessment of a box for a Gaussian process model (marginal law).
ProbabilityAssessment marginal_assessment(const ProcessModel& model, const LagBox& box,
                                          std::size_t n_samples);

// Cantelli assessment from the empirical first two moments of the products
// y_t y_{t+k} of an observed series.
ProbabilityAssessment moment_assessment(std::span<const double> series, const LagBox& box);

// Empirical frequencies of {a_k <= r_k <= b_k} over independent simulations
// of length N + 1. Requires trials >= 100.
ProbabilityAssessment monte_carlo_interval_probability(const ProcessModel& model,
                                                       const LagBox& box, std::size_t n_samples,
                                                       std::size_t trials, std::uint64_t seed);

}  // namespace specbound

#endif  // SPECBOUND_SAMPLING_HPP_
