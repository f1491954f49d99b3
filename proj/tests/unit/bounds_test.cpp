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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "specbound/bounds.hpp"
#include "specbound/error.hpp"

namespace specbound {
namespace {

using doctest::Approx;

const SolverOptions kOptions{};
const TrigPolynomial kFlat{{1.0}};

std::vector<double> ar1_lags(std::size_t n) {
  return ProcessModel::autoregressive({0.5}, 1.0).autocovariance(n);
}

void check_log_inequality(const std::vector<double>& values) {
  for (double v : values) {
    if (v > 0.0) CHECK(std::log(v) <= v - 1.0 + 1e-12);
  }
}

TEST_CASE("tv_from_kl values") {
  CHECK(tv_from_kl(0.0) == 0.0);
  CHECK(tv_from_kl(1.0) == Approx(1.347833011315559).epsilon(1e-14));
  CHECK(tv_from_kl(1.044225) == Approx(1.3747727084867518).epsilon(1e-14));
  CHECK_THROWS_AS(tv_from_kl(-0.1), Error);
  CHECK_THROWS_AS(tv_from_kl(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST_CASE("tv_from_kl is increasing and concave") {
  double prev = 0.0;
  double prev_slope = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 100; ++i) {
    const double kl = 0.05 * i;
    const double tv = tv_from_kl(kl);
    const double slope = (tv - prev) / 0.05;
    CHECK(tv > prev);
    CHECK(slope <= prev_slope + 1e-12);
    prev = tv;
    prev_slope = slope;
  }
}

TEST_CASE("noise bound for white signal and white noise is the mass gap") {
  for (double s2 : {0.1, 0.25}) {
    const auto report = noise_tv_upper_bound(CovarianceSequence({1.0, 0.0, 0.0}),
                                             std::vector<double>{s2, 0.0, 0.0}, kFlat,
                                             AngularGrid(2048), kOptions);
    CHECK(report.kind == BoundKind::kNoiseTVUpper);
    CHECK(report.term("tv_maxent_noisy_vs_maxent_clean") == Approx(kTwoPi * s2));
    CHECK(report.bound_value == Approx(kTwoPi * s2));
  }
}

TEST_CASE("noise bound dominates the realised error via the triangle inequality") {
  const AngularGrid grid(2048);
  const auto truth = ProcessModel::autoregressive({0.5}, 1.0).spectral_density(grid);
  const auto clean = CovarianceSequence(ar1_lags(2));
  for (double s2 : {0.1, 0.25}) {
    const std::vector<double> noise = {s2, 0.0, 0.0};
    const auto c = noise_tv_analysis(clean, noise, kFlat, grid, kOptions);
    const double direct = tv_distance(c.estimate, truth);
    const double chain = tv_distance(c.estimate, c.maxent_noisy) +
                         tv_distance(c.maxent_noisy, c.maxent_clean) +
                         tv_distance(c.maxent_clean, truth);
    CHECK(direct <= chain + 1e-12);
    CHECK(tv_distance(c.estimate, c.maxent_noisy) <=
          c.report.term("tv_estimate_vs_maxent_noisy") + 1e-9);
    CHECK(direct <= c.report.bound_value);
    check_log_inequality(c.estimate.values());
    check_log_inequality(c.maxent_noisy.values());
    check_log_inequality(c.maxent_clean.values());
  }
}

TEST_CASE("reports recompute to the same bit pattern") {
  const auto noise = noise_tv_upper_bound(CovarianceSequence(ar1_lags(2)),
                                          std::vector<double>{0.1, 0.0, 0.0}, kFlat,
                                          AngularGrid(1024), kOptions);
  CHECK(noise.recompute() == noise.bound_value);

  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto box = LagBox::around(ar1_lags(2), 0.05);
  const auto fs = finite_sample_tv_upper_bound(box, CovarianceSequence(ar1_lags(2)),
                                               AngularGrid(1024), kOptions,
                                               marginal_assessment(model, box, 10000));
  CHECK(fs.recompute() == fs.bound_value);
  CHECK(fs.probability_level > 0.0);
  CHECK(fs.probability_level <= 1.0);

  const auto kl = kl_lower_bound(model.spectral_density(AngularGrid(4096)), box);
  CHECK(kl.recompute() == kl.bound_value);
}

TEST_CASE("finite-sample bound grows with the box") {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const CovarianceSequence clean(ar1_lags(2));
  double prev = -1.0;
  for (double delta : {0.01, 0.03, 0.05}) {
    const auto box = LagBox::around(clean.lags(), delta);
    const auto r = finite_sample_tv_upper_bound(box, clean, AngularGrid(1024), kOptions,
                                                marginal_assessment(model, box, 10000));
    CHECK(r.bound_value >= prev);
    prev = r.bound_value;
  }
}

TEST_CASE("finite-sample assembly follows the three-term rule") {
  const auto a = ProbabilityAssessment::from_lags(
      {LagProbability{0, 1, 0.9, ProbabilityMethod::kMarginal, std::nullopt}});
  const auto r = assembly::finite_sample_report({0.5, 0.2, true}, a, 1);
  const double expected = tv_from_kl(0.5) + tv_from_kl(0.3) + tv_from_kl(0.2);
  CHECK(r.bound_value == Approx(expected));
  CHECK(r.probability_level == Approx(0.9));
  const auto negative = assembly::finite_sample_report({-1.0, -2.0, true}, a, 1);
  CHECK(negative.bound_value == Approx(tv_from_kl(1.0)));
}

TEST_CASE("KL lower bound for the AR(1) scenario") {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto box = LagBox::around(ar1_lags(2), 0.05);
  const auto r = kl_lower_bound(model.spectral_density(AngularGrid(8192)), box);
  CHECK(r.kind == BoundKind::kKLLower);
  CHECK(r.bound_value == Approx(1.7090482776035634).epsilon(1e-9));
  CHECK(r.probability_level == 1.0);
  CHECK_FALSE(r.caveats.empty());
}

TEST_CASE("KL lower bound rejects densities with zeros") {
  const AngularGrid grid(64);
  std::vector<double> v(64, 1.0);
  v[3] = 0.0;
  try {
    kl_lower_bound(GridDensity(grid, v), LagBox({0.9}, {1.1}));
    FAIL("expected NonPositiveDensity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonPositiveDensity);
  }
}

TEST_CASE("a vacuous KL lower bound is flagged") {
  const std::vector<double> mu = {1.0};
  const std::vector<double> upper = {1.0};
  const auto r = assembly::kl_lower_report(mu, upper, 2.0, std::nullopt, 1);
  CHECK(r.bound_value == Approx(-3.0));
  bool flagged = false;
  for (const auto& c : r.caveats) flagged = flagged || c.find("trivial") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("report json carries terms and conventions") {
  const auto r = noise_tv_upper_bound(CovarianceSequence({1.0, 0.0}),
                                      std::vector<double>{0.1, 0.0}, kFlat, AngularGrid(256),
                                      kOptions);
  const auto j = r.to_json();
  CHECK(j.at("schema") == kReportSchema);
  CHECK(j.at("kind") == "NoiseTVUpper");
  CHECK(j.at("terms").size() == r.terms.size());
  CHECK(j.contains("conventions"));
  CHECK_THROWS_AS(r.term("no_such_term"), Error);
}

TEST_CASE("log inequality holds on random estimates") {
  std::mt19937_64 rng(77);
  const AngularGrid grid(1024);
  for (int trial = 0; trial < 20; ++trial) {
    const CovarianceSequence lags(testing::random_pd_lags(rng, testing::random_order(rng, 1, 6)));
    check_log_inequality(
        solve_dual(EstimatorProblem(lags, kFlat, grid), kOptions).on(grid).values());
    check_log_inequality(solve_maxent(lags, grid, kOptions).on(grid).values());
  }
}

}  // namespace
}  // namespace specbound
