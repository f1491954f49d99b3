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
#include "specbound/multivariate.hpp"

namespace specbound {
namespace {

using doctest::Approx;

const SolverOptions kOptions{};

std::vector<ProcessModel> separable_models() {
  return {ProcessModel::autoregressive({0.5}, 1.0), ProcessModel::autoregressive({-0.3}, 0.8)};
}

TEST_CASE("basis construction and validation") {
  const auto axial = MultiBasis::axial(2, 2);
  CHECK(axial.size() == 5);
  CHECK(axial.exponents()[3] == std::vector<int>{0, 1});
  CHECK(MultiBasis::tensor(2, 1).size() == 4);
  CHECK(axial.shift(2) == 2);
  CHECK_THROWS_AS(MultiBasis({{1, 0}}), Error);
  CHECK_THROWS_AS(MultiBasis({{0, 0}, {1, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(MultiBasis({{0, 0, 0}}), Error);
  CHECK_THROWS_AS(MultiBasis({{0, 0}, {-1, 0}}), Error);
}

TEST_CASE("flat index runs over the last axis fastest") {
  const auto grid = ProductGrid::square(2, 4);
  CHECK(grid.size() == 16);
  CHECK(grid.unflatten(1) == std::vector<std::size_t>{0, 1});
  CHECK(grid.unflatten(4) == std::vector<std::size_t>{1, 0});
  CHECK(grid.cell_weight() == Approx(kPi * kPi / 4));
}

TEST_CASE("moments of a separable spectrum are products of axis lags") {
  const auto models = separable_models();
  const auto grid = ProductGrid::square(2, 128);
  const auto basis = MultiBasis::tensor(2, 2);
  const auto moments = multi_compute_moments(independent_spectrum(models, grid), basis);
  const auto a = models[0].autocovariance(2);
  const auto b = models[1].autocovariance(2);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& e = basis.exponents()[k];
    CHECK(moments[k] == Approx(a[e[0]] * b[e[1]]).epsilon(1e-10));
  }
}

TEST_CASE("separable maxent agrees with the tensor product of axis solutions") {
  const auto models = separable_models();
  const auto grid = ProductGrid::square(2, 128);
  const auto basis = MultiBasis::axial(2, 2);
  const auto a = models[0].autocovariance(2);
  const auto b = models[1].autocovariance(2);
  const auto moments = multi_compute_moments(independent_spectrum(models, grid), basis);
  const auto joint = multi_solve_maxent(moments, basis, grid, kOptions).on(grid);

  // exp(-1 - l_a(t1)) exp(-1 - l_b(t2)) lies in the same exponential family
  // and matches every axial moment, so it is the joint solution.
  const AngularGrid axis(128);
  const auto fa = solve_maxent(CovarianceSequence(a), axis, kOptions).on(axis);
  const auto fb = solve_maxent(CovarianceSequence(b), axis, kOptions).on(axis);
  const auto product = tensor_product(std::vector<GridDensity>{fa, fb});
  double err = 0.0;
  for (std::size_t j = 0; j < joint.size(); ++j) {
    err = std::max(err, std::abs(joint[j] - product[j]));
  }
  CHECK(err < 1e-6);
}

TEST_CASE("d = 2 moment matching and dominance") {
  std::mt19937_64 rng(41);
  const auto grid = ProductGrid::square(2, 128);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = testing::random_order(rng, 1, 2);
    const auto basis = MultiBasis::axial(2, n);
    const std::vector<ProcessModel> models = {
        ProcessModel::autoregressive({std::uniform_real_distribution<double>(-0.6, 0.6)(rng)}, 1.0),
        ProcessModel::moving_average({std::uniform_real_distribution<double>(-0.6, 0.6)(rng)},
                                     1.0)};
    const auto moments = multi_compute_moments(independent_spectrum(models, grid), basis);
    const auto prior = MultiPolynomial{MultiBasis::axial(2, 1), {1.0, 0.2, 0.1}};
    const auto est = multi_solve_dual(moments, prior, basis, grid, kOptions).on(grid);
    const auto me = multi_solve_maxent(moments, basis, grid, kOptions).on(grid);
    CHECK(testing::max_abs_diff(multi_compute_moments(est, basis), moments) <= 1e-8 * moments[0]);
    CHECK(testing::max_abs_diff(multi_compute_moments(me, basis), moments) <= 1e-8 * moments[0]);
    CHECK(entropy(me) >= entropy(est) - 1e-8);
    CHECK(kl_divergence(est, me) == Approx(entropy(me) - entropy(est)).epsilon(1e-7).scale(1.0));
    for (double v : est.values()) CHECK(std::log(v) <= v - 1.0 + 1e-12);
  }
}

TEST_CASE("d = 2 noise bound for white fields") {
  const auto grid = ProductGrid::square(2, 64);
  const auto basis = MultiBasis::axial(2, 1);
  const std::vector<double> clean = {1.0, 0.0, 0.0};
  const std::vector<double> noise = {0.1, 0.0, 0.0};
  const auto r = multi_noise_tv_bound(clean, noise, MultiPolynomial::constant(2, 1.0), basis,
                                      grid, kOptions);
  CHECK(r.bound_value == Approx(4 * kPi * kPi * 0.1));
  CHECK(r.dimension == 2);
  CHECK(r.recompute() == r.bound_value);
}

TEST_CASE("d = 2 sample moments use the worked-example products") {
  MultiSeries s;
  s.columns = {{1.0, 2.0, 3.0}, {1.0, -1.0, 2.0}};
  const MultiBasis basis({{0, 0}, {1, 0}, {0, 1}});
  const auto m = multi_estimate_moments(s, basis);
  // alpha = (0,0): sum y1^2 y2^2 / 3
  CHECK(m[0] == Approx((1.0 + 4.0 + 36.0) / 3));
  // alpha = (1,0): y_{t,1} y_{t+1,1} y_{t,2}^2 over N + 1 - 1 terms
  CHECK(m[1] == Approx((1.0 * 2.0 * 1.0 + 2.0 * 3.0 * 1.0) / 2));
  CHECK(m[2] == Approx((1.0 * -1.0 * 1.0 + 4.0 * -1.0 * 2.0) / 2));
}

TEST_CASE("d = 2 simulation is reproducible") {
  const auto models = separable_models();
  const auto a = simulate_independent(models, 500, 3);
  const auto b = simulate_independent(models, 500, 3);
  CHECK(a.columns == b.columns);
  CHECK(a.columns[0] != a.columns[1]);
}

TEST_CASE("d = 2 KL lower bound and finite-sample bound run") {
  const std::vector<ProcessModel> models = {ProcessModel::autoregressive({0.5}, 1.0),
                                            ProcessModel::autoregressive({0.3}, 0.8)};
  const auto grid = ProductGrid::square(2, 64);
  const auto basis = MultiBasis::axial(2, 1);
  const auto truth = independent_spectrum(models, grid);
  const auto moments = multi_compute_moments(truth, basis);
  const auto box = LagBox::around(moments, 0.05);
  const auto kl = multi_kl_lower_bound(truth, box, basis);
  CHECK(kl.recompute() == kl.bound_value);
  const auto mc = multi_monte_carlo_interval_probability(models, basis, box, 2000, 100, 1);
  const auto fs = multi_finite_sample_bound(box, moments, basis, grid, kOptions, mc);
  CHECK(fs.bound_value >= 0.0);
  CHECK(fs.recompute() == fs.bound_value);
}

TEST_CASE("d = 2 KL lower bound needs nonnegative projection coefficients") {
  const auto grid = ProductGrid::square(2, 64);
  const auto basis = MultiBasis::axial(2, 1);
  const auto truth = independent_spectrum(separable_models(), grid);
  const auto box = LagBox::around(multi_compute_moments(truth, basis), 0.05);
  try {
    multi_kl_lower_bound(truth, box, basis);
    FAIL("expected NegativeMu");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNegativeMu);
  }
}

TEST_CASE("d = 2 limits") {
  CHECK_THROWS_AS(ProductGrid::square(3, 16), Error);
}

}  // namespace
}  // namespace specbound
