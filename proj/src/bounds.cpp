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

#include "specbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specbound/error.hpp"

namespace specbound {

namespace {

constexpr const char* kTvCaveat =
    "TV is the Kolmogorov-style sup of partial integrals; the entropy-to-TV inequality "
    "was established for probability densities and is applied to unnormalised spectra";

// Entropy-dominance differences below this are solver noise rather than a violation.
double entropy_slack(double h) { return 1e-8 * (1.0 + std::abs(h)); }

}  // namespace

double tv_from_kl(double kl) {
  if (std::isnan(kl) || kl < 0.0) {
    throw Error(ErrorCode::kNegativeKL,
                "KL input to the TV bound is negative (" + std::to_string(kl) + ")");
  }
  return 3.0 * std::sqrt(-1.0 + std::sqrt(1.0 + (4.0 / 9.0) * kl));
}

namespace assembly {

BoundReport noise_report(const NoiseInputs& in, int dimension) {
  BoundReport report;
  report.kind = BoundKind::kNoiseTVUpper;
  report.dimension = dimension;
  report.add_term("entropy_maxent_noisy", in.entropy_maxent_noisy,
                  "H[me_noisy], maximum entropy density for clean + noise lags");
  report.add_term("entropy_estimate", in.entropy_estimate,
                  "H[est], est = P/Q fitted to clean + noise lags");
  report.add_term("entropy_maxent_clean", in.entropy_maxent_clean,
                  "H[me_clean], maximum entropy density for clean lags");

  double kl_first = in.entropy_maxent_noisy - in.entropy_estimate;
  if (kl_first < -entropy_slack(in.entropy_maxent_noisy)) {
    throw Error(ErrorCode::kNegativeKL,
                "H[maxent noisy] < H[estimate] by " + std::to_string(-kl_first) +
                    "; both match the same lags, so this signals a numerical failure");
  }
  if (kl_first < 0.0) {
    report.add_caveat("H[me_noisy] - H[est] was negative within solver tolerance; clamped to 0");
    kl_first = 0.0;
  }
  report.add_term("kl_estimate_vs_maxent_noisy", kl_first,
                  "KL(est || me_noisy) = H[me_noisy] - H[est]");
  report.add_term("tv_estimate_vs_maxent_noisy", tv_from_kl(kl_first), "tvkl(kl_estimate_vs_maxent_noisy)");
  report.add_term("tv_maxent_noisy_vs_maxent_clean", in.tv_maxent_noisy_vs_clean,
                  "V(me_noisy, me_clean) by cumulative quadrature");

  double kl_third = in.entropy_maxent_clean;
  if (kl_third < 0.0) {
    report.add_caveat(
        "H[me_clean] < 0: the H[true] >= 0 relaxation cannot hold for this spectrum; the "
        "third term is clamped to tvkl(0) = 0");
    kl_third = 0.0;
  }
  report.add_term("kl_maxent_clean_relaxed", kl_third, "max(0, H[me_clean]) using H[true] >= 0");
  report.add_term("tv_maxent_clean_vs_truth", tv_from_kl(kl_third), "tvkl(kl_maxent_clean_relaxed)");

  if (std::abs(in.mass_estimate - in.mass_maxent_noisy) >
      1e-9 * std::max(1.0, std::abs(in.mass_estimate))) {
    report.add_caveat("KL arguments have different total mass; the KL term may be negative");
  }
  report.add_caveat(kTvCaveat);
  report.bound_value = report.recompute();
  report.probability_level = 1.0;
  return report;
}

BoundReport finite_sample_report(const FiniteSampleInputs& in,
                                 const ProbabilityAssessment& probability, int dimension) {
  BoundReport report;
  report.kind = BoundKind::kFiniteSampleTVUpper;
  report.dimension = dimension;
  report.add_term("entropy_maxent_box", in.entropy_maxent_box,
                  "H[me_box], largest maximum entropy over the lag box");
  report.add_term("entropy_maxent_clean", in.entropy_maxent_clean,
                  "H[me_clean], maximum entropy density for clean lags");

  auto clamp_with_caveat = [&](double value, const std::string& what) {
    if (value < 0.0) {
      report.add_caveat(what + " was negative (" + std::to_string(value) + "); clamped to 0");
      return 0.0;
    }
    return value;
  };
  const double kl_box = clamp_with_caveat(in.entropy_maxent_box, "H[me_box]");
  const double kl_mid =
      clamp_with_caveat(in.entropy_maxent_box - in.entropy_maxent_clean, "H[me_box] - H[me_clean]");
  const double kl_clean = clamp_with_caveat(in.entropy_maxent_clean, "H[me_clean]");

  report.add_term("kl_maxent_box_relaxed", kl_box, "max(0, H[me_box]) standing in for H[me_box] - H[est]");
  report.add_term("kl_maxent_box_vs_clean", kl_mid, "max(0, H[me_box] - H[me_clean])");
  report.add_term("kl_maxent_clean_relaxed", kl_clean, "max(0, H[me_clean]) using H[true] >= 0");
  report.add_term("tv_first", tv_from_kl(kl_box), "tvkl(kl_maxent_box_relaxed)");
  report.add_term("tv_middle", tv_from_kl(kl_mid), "tvkl(kl_maxent_box_vs_clean)");
  report.add_term("tv_last", tv_from_kl(kl_clean), "tvkl(kl_maxent_clean_relaxed)");

  report.add_caveat(
      "H[est] is unavailable for sampled lags; the first term uses tvkl(H[me_box]) as printed");
  report.add_caveat(
      "probability_level is the product of per-lag interval assessments and assumes "
      "independent lag estimates");
  if (!in.box_optimum_certified) {
    report.add_caveat("box maximum-entropy optimum failed the coordinate-step certificate");
  }
  report.add_caveat(kTvCaveat);
  report.assessment = probability;
  report.probability_level = std::clamp(probability.product, 0.0, 1.0);
  report.bound_value = report.recompute();
  return report;
}

BoundReport kl_lower_report(std::span<const double> mu, std::span<const double> upper,
                            double entropy_true,
                            const std::optional<ProbabilityAssessment>& probability,
                            int dimension) {
  BoundReport report;
  report.kind = BoundKind::kKLLower;
  report.dimension = dimension;
  double dot = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) dot += mu[k] * upper[k];
  report.add_term("mu_dot_upper", dot, "sum_k mu_k b_k");
  report.add_term("entropy_true", entropy_true, "H[true]");
  report.details["mu"] = std::vector<double>(mu.begin(), mu.end());
  report.details["upper"] = std::vector<double>(upper.begin(), upper.end());
  report.bound_value = report.recompute();
  if (report.bound_value <= 0.0) {
    report.add_caveat("trivial bound: the KL lower bound is not positive");
  }
  report.add_caveat("KL is unnormalised; it can be negative when the masses differ");
  if (probability) {
    report.assessment = *probability;
    report.probability_level = std::clamp(probability->product, 0.0, 1.0);
    report.add_caveat(
        "probability_level is the product of per-lag interval assessments and assumes "
        "independent lag estimates");
  } else {
    report.probability_level = 1.0;
    report.add_caveat("no probability assessment supplied; probability_level set to 1");
  }
  return report;
}

}  // namespace assembly

NoiseBoundComputation noise_tv_analysis(const CovarianceSequence& clean_lags,
                                        std::span<const double> noise_lags,
                                        const TrigPolynomial& prior, const AngularGrid& grid,
                                        const SolverOptions& options) {
  if (noise_lags.size() != clean_lags.lags().size()) {
    throw Error(ErrorCode::kInvalidArgument, "clean and noise lag windows differ in length");
  }
  std::vector<double> summed(clean_lags.lags());
  for (std::size_t k = 0; k < summed.size(); ++k) summed[k] += noise_lags[k];
  const CovarianceSequence noisy(std::move(summed));

  auto estimator = solve_dual(EstimatorProblem(noisy, prior, grid), options);
  auto estimate = estimator.on(grid);
  auto maxent_noisy = solve_maxent(noisy, grid, options).on(grid);
  auto maxent_clean = solve_maxent(clean_lags, grid, options).on(grid);

  assembly::NoiseInputs inputs{};
  inputs.entropy_maxent_noisy = entropy(maxent_noisy);
  inputs.entropy_estimate = entropy(estimate);
  inputs.entropy_maxent_clean = entropy(maxent_clean);
  inputs.tv_maxent_noisy_vs_clean = tv_distance(maxent_noisy, maxent_clean);
  inputs.mass_estimate = total_mass(estimate);
  inputs.mass_maxent_noisy = total_mass(maxent_noisy);

  NoiseBoundComputation out{assembly::noise_report(inputs, 1), std::move(estimator),
                            std::move(estimate), std::move(maxent_noisy),
                            std::move(maxent_clean)};
  out.report.details["clean_lags"] = clean_lags.lags();
  out.report.details["noise_lags"] = std::vector<double>(noise_lags.begin(), noise_lags.end());
  out.report.details["prior"] = prior.coeffs;
  out.report.details["grid_size"] = grid.size();
  out.report.details["estimator_denominator"] = out.estimator.denominator.coeffs;
  return out;
}

BoundReport noise_tv_upper_bound(const CovarianceSequence& clean_lags,
                                 std::span<const double> noise_lags, const TrigPolynomial& prior,
                                 const AngularGrid& grid, const SolverOptions& options) {
  return noise_tv_analysis(clean_lags, noise_lags, prior, grid, options).report;
}

FiniteSampleComputation finite_sample_analysis(const LagBox& box,
                                               const CovarianceSequence& clean_lags,
                                               const AngularGrid& grid,
                                               const SolverOptions& options,
                                               const ProbabilityAssessment& probability) {
  if (box.order() != clean_lags.order()) {
    throw Error(ErrorCode::kInvalidArgument, "box and clean lags differ in order");
  }
  if (probability.per_lag.size() != box.order() + 1) {
    throw Error(ErrorCode::kInvalidArgument, "probability assessment does not match the box");
  }
  auto boxed = solve_maxent_box(box, grid, options);
  auto clean = solve_maxent(clean_lags, grid, options).on(grid);

  assembly::FiniteSampleInputs inputs{};
  inputs.entropy_maxent_box = boxed.entropy;
  inputs.entropy_maxent_clean = entropy(clean);
  inputs.box_optimum_certified = boxed.certified;
  FiniteSampleComputation out{assembly::finite_sample_report(inputs, probability, 1),
                              std::move(boxed), std::move(clean)};
  out.report.details["box_lower"] = box.lower();
  out.report.details["box_upper"] = box.upper();
  out.report.details["box_optimum_lags"] = out.box_maxent.lags;
  out.report.details["clean_lags"] = clean_lags.lags();
  out.report.details["grid_size"] = grid.size();
  return out;
}

BoundReport finite_sample_tv_upper_bound(const LagBox& box, const CovarianceSequence& clean_lags,
                                         const AngularGrid& grid, const SolverOptions& options,
                                         const ProbabilityAssessment& probability) {
  return finite_sample_analysis(box, clean_lags, grid, options, probability).report;
}

BoundReport kl_lower_bound(const GridDensity& true_density, const LagBox& box,
                           const std::optional<ProbabilityAssessment>& probability) {
  for (double v : true_density.values()) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::kNonPositiveDensity, "true density must be strictly positive");
    }
  }
  const std::size_t order = box.order();
  const auto lags = compute_lags(true_density, order);
  std::vector<double> mu(order + 1);
  // Quadrature leaves ~1e-16 r0 of noise on lags that vanish analytically.
  const double noise_floor = 1e-12 * lags[0];
  for (std::size_t k = 0; k <= order; ++k) {
    const double m = k == 0 ? lags[0] : 2.0 * lags[k];
    if (m < -noise_floor) {
      throw Error(ErrorCode::kNegativeMu, "cosine coefficient mu_" + std::to_string(k) + " = " +
                                              std::to_string(m) + " is negative");
    }
    mu[k] = std::max(0.0, m);
  }
  auto report = assembly::kl_lower_report(mu, box.upper(), entropy(true_density), probability, 1);
  report.details["grid_size"] = true_density.grid().size();
  return report;
}

}  // namespace specbound
