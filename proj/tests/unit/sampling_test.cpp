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
#include <vector>

#include "doctest.h"
#include "specbound/error.hpp"
#include "specbound/sampling.hpp"

namespace specbound {
namespace {

using doctest::Approx;

TEST_CASE("model autocovariance matches the AR(1) closed form") {
  const auto lags = ProcessModel::autoregressive({0.5}, 2.0).autocovariance(3);
  for (int k = 0; k < 4; ++k) CHECK(lags[k] == Approx(2.0 * std::pow(0.5, k) / 0.75));
  const auto ma = ProcessModel::moving_average({0.5}, 1.0).autocovariance(2);
  CHECK(ma[0] == Approx(1.25));
  CHECK(ma[1] == Approx(0.5));
  CHECK(std::abs(ma[2]) < 1e-12);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(ProcessModel::autoregressive({1.0}, 1.0).validate(), Error);
  CHECK_THROWS_AS(ProcessModel::white(-1.0).validate(), Error);
  try {
    ProcessModel::autoregressive({1.2}, 1.0).validate();
    FAIL("expected NonStationaryModel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonStationaryModel);
  }
}

TEST_CASE("simulation is reproducible and seed dependent") {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto a = simulate(model, 1000, 42);
  const auto b = simulate(model, 1000, 42);
  const auto c = simulate(model, 1000, 43);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  CHECK(a.model_id == model.id());
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("sample lags of a long AR(1) series") {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto series = simulate(model, 200001, 9);
  const auto lags = estimate_lags(series.values, 2);
  CHECK(lags[0] == Approx(4.0 / 3).epsilon(0.03));
  CHECK(lags[1] == Approx(2.0 / 3).epsilon(0.05));
}

TEST_CASE("sample lags use 1/(N+1-k)") {
  const std::vector<double> y = {1.0, 2.0, 3.0};
  const auto lags = estimate_lags(y, 2);
  CHECK(lags[0] == Approx(14.0 / 3));
  CHECK(lags[1] == Approx(8.0 / 2));
  CHECK(lags[2] == Approx(3.0));
  CHECK_THROWS_AS(estimate_lags(y, 3), Error);
}

TEST_CASE("marginal interval probability for a squared Gaussian") {
  // X = U^2 with U ~ N(0, 1); the upper end is the chi-square median.
  const double p = marginal_interval_probability(GaussianPairLaw{1.0, 1.0}, -1.0,
                                                 0.454936423119572, 9, 0);
  CHECK(p == Approx(0.9990234375).epsilon(1e-9));
  CHECK_THROWS_AS(marginal_interval_probability(UnknownPairLaw{}, -1.0, 1.0, 9, 0), Error);
}

TEST_CASE("product law of independent normals is symmetric") {
  const GaussianPairLaw law{1.0, 0.0};
  CHECK(product_cdf(law, 0.0) == Approx(0.5).epsilon(1e-10));
  CHECK(product_cdf(law, -0.7) == Approx(product_survival(law, 0.7)).epsilon(1e-10));
}

TEST_CASE("Cantelli interval probability") {
  const std::vector<double> moments = {0.0, 1.0};
  CHECK(moment_interval_probability(moments, -2.0, 2.0, 4, 0) == Approx(0.99936));
  const std::vector<double> bad = {2.0, 1.0};
  CHECK_THROWS_AS(moment_interval_probability(bad, -2.0, 2.0, 4, 0), Error);
}

TEST_CASE("Wilson interval brackets the frequency") {
  const auto w = wilson_interval(50, 100);
  CHECK(w.low < 0.5);
  CHECK(w.high > 0.5);
  const auto all = wilson_interval(100, 100);
  CHECK(all.high == Approx(1.0));
  CHECK(all.low > 0.95);
}

TEST_CASE("Monte Carlo coverage grows with the sample size") {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto box = LagBox::around(model.autocovariance(1), 0.1);
  const auto small = monte_carlo_interval_probability(model, box, 1000, 200, 4);
  const auto large = monte_carlo_interval_probability(model, box, 10000, 200, 4);
  CHECK(*small.joint_frequency <= *large.joint_frequency);
  CHECK(large.per_lag.size() == 2);
  CHECK(small.product == Approx(small.recompute_product()));
}

TEST_CASE("assessment products multiply the per-lag levels") {
  const auto a = ProbabilityAssessment::from_lags(
      {LagProbability{0, 1, 0.9, ProbabilityMethod::kMarginal, std::nullopt},
       LagProbability{0, 1, 0.5, ProbabilityMethod::kMarginal, std::nullopt}});
  CHECK(a.product == Approx(0.45));
}

}  // namespace
}  // namespace specbound
