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
#include <random>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "specbound/error.hpp"
#include "specbound/estimator.hpp"
#include "specbound/maxent.hpp"

namespace specbound {
namespace {

using doctest::Approx;

const SolverOptions kOptions{};

TEST_CASE("maxent of AR(1) lags, n = 1 and n = 2") {
  const AngularGrid grid(4096);
  const auto one = solve_maxent(CovarianceSequence({4.0 / 3, 2.0 / 3}), grid, kOptions);
  CHECK(one.lambdas[0] == Approx(-0.97630291).epsilon(1e-7));
  CHECK(one.lambdas[1] == Approx(-0.57965996).epsilon(1e-7));
  CHECK(entropy(one.on(grid)) == Approx(-4.6576236224491385).epsilon(1e-9));

  const auto two = solve_maxent(CovarianceSequence({4.0 / 3, 2.0 / 3, 1.0 / 3}), grid, kOptions);
  CHECK(two.lambdas[0] == Approx(-0.99730696).epsilon(1e-7));
  CHECK(two.lambdas[1] == Approx(-0.50030213).epsilon(1e-7));
  CHECK(two.lambdas[2] == Approx(-0.15084862).epsilon(1e-7));
  CHECK(entropy(two.on(grid)) == Approx(-4.800633361478349).epsilon(1e-9));
}

TEST_CASE("flat lags give the flat maxent density") {
  const AngularGrid grid(256);
  const auto me = solve_maxent(CovarianceSequence({1.0, 0.0}), grid, kOptions);
  const auto density = me.on(grid);
  for (double v : density.values()) CHECK(v == Approx(1.0));
}

TEST_CASE("entropy identity of the maxent density") {
  std::mt19937_64 rng(5);
  const AngularGrid grid(2048);
  for (int trial = 0; trial < 20; ++trial) {
    const CovarianceSequence lags(testing::random_pd_lags(rng, testing::random_order(rng, 1, 6)));
    const auto me = solve_maxent(lags, grid, kOptions);
    const auto id = maxent_entropy_identity_check(me, lags, grid);
    CHECK(id.quadrature == Approx(id.closed_form).epsilon(1e-9));
  }
}

TEST_CASE("maxent dominates the rational estimate with the same lags") {
  std::mt19937_64 rng(23);
  const AngularGrid grid(2048);
  for (int trial = 0; trial < 40; ++trial) {
    const CovarianceSequence lags(testing::random_pd_lags(rng, testing::random_order(rng, 1, 6)));
    const auto me = solve_maxent(lags, grid, kOptions).on(grid);
    const auto est =
        solve_dual(EstimatorProblem(lags, TrigPolynomial{{1.0, 0.25}}, grid), kOptions).on(grid);
    const double gap = entropy(me) - entropy(est);
    CHECK(gap >= -1e-8);
    CHECK(kl_divergence(est, me) == Approx(gap).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("maxent dual gradient matches central differences") {
  std::mt19937_64 rng(29);
  const AngularGrid grid(1024);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = testing::random_order(rng, 1, 5);
    const CovarianceSequence lags(testing::random_pd_lags(rng, n));
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    std::vector<double> lambda(n + 1);
    lambda[0] = -1.0 - std::log(lags.r0());
    for (std::size_t k = 1; k <= n; ++k) lambda[k] = u(rng) / static_cast<double>(n);
    const auto eval = maxent_dual_value_and_gradient(lambda, lags, grid);
    for (std::size_t k = 0; k <= n; ++k) {
      const double h = 1e-6;
      auto lp = lambda, lm = lambda;
      lp[k] += h;
      lm[k] -= h;
      const double fd = (maxent_dual_value_and_gradient(lp, lags, grid).value -
                         maxent_dual_value_and_gradient(lm, lags, grid).value) / (2 * h);
      const double scale = std::max(std::abs(eval.gradient[k]), 1e-3);
      CHECK(std::abs(fd - eval.gradient[k]) / scale < 1e-6);
    }
  }
}

TEST_CASE("box maxent over a small box") {
  const LagBox box({0.9, -0.1}, {1.1, 0.1});
  const auto res = solve_maxent_box(box, AngularGrid(1024), kOptions);
  CHECK(res.entropy == Approx(0.5957996795443075).epsilon(1e-8));
  CHECK(res.lags[0] == Approx(0.9));
  CHECK(std::abs(res.lags[1]) < 1e-5);
  CHECK(res.certified);
}

TEST_CASE("box maxent beats every sampled point of the box") {
  std::mt19937_64 rng(31);
  const AngularGrid grid(1024);
  const std::vector<double> centre = {4.0 / 3, 2.0 / 3, 1.0 / 3};
  const auto box = LagBox::around(centre, 0.05);
  const auto best = solve_maxent_box(box, grid, kOptions);
  CHECK(box.contains(best.lags));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> r(3);
    for (int k = 0; k < 3; ++k) {
      r[k] = std::uniform_real_distribution<double>(box.lower()[k], box.upper()[k])(rng);
    }
    const auto me = solve_maxent(CovarianceSequence(r), grid, kOptions);
    CHECK(entropy(me.on(grid)) <= best.entropy + 1e-8);
  }
}

TEST_CASE("lag boxes validate their bounds") {
  CHECK_THROWS_AS(LagBox({1.0}, {0.5}), Error);
  CHECK_THROWS_AS(LagBox({1.0, 0.0}, {2.0}), Error);
  CHECK_THROWS_AS(LagBox({}, {}), Error);
  const auto box = LagBox::around(std::vector<double>{2.0, 1.0}, 0.1);
  CHECK(box.lower()[1] == Approx(0.8));
  CHECK(box.upper()[1] == Approx(1.2));
}

TEST_CASE("a box with no PD point is reported as empty") {
  try {
    solve_maxent_box(LagBox({1.0, 1.5}, {1.0, 2.0}), AngularGrid(256), kOptions);
    FAIL("expected EmptyFeasibleBox");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyFeasibleBox);
  }
}

}  // namespace
}  // namespace specbound
