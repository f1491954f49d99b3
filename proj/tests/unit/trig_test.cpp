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
#include "specbound/sampling.hpp"
#include "specbound/trig.hpp"

namespace specbound {
namespace {

using doctest::Approx;

GridDensity from(const AngularGrid& grid, auto f) {
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) v[j] = f(grid.node(j));
  return GridDensity(grid, v);
}

TEST_CASE("grid nodes start at -pi and step by 2pi/M") {
  AngularGrid grid(8);
  CHECK(grid.node(0) == Approx(-kPi));
  CHECK(grid.node(4) == Approx(0.0));
  CHECK(grid.weight() == Approx(kPi / 4));
  CHECK(grid.nodes().size() == 8);
}

TEST_CASE("trig polynomial evaluation") {
  TrigPolynomial p{{1.0, 0.3, -0.1}};
  CHECK(p(kPi / 2) == Approx(1.2).epsilon(1e-15));
  CHECK(p.positive_on(AngularGrid(256)));
  CHECK_FALSE(TrigPolynomial{{0.5, 0.3}}.positive_on(AngularGrid(256)));
}

TEST_CASE("lags of the AR(1) spectrum") {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto lags = compute_lags(model.spectral_density(AngularGrid(4096)), 3);
  const double expected[] = {4.0 / 3, 2.0 / 3, 1.0 / 3, 1.0 / 6};
  for (int k = 0; k < 4; ++k) CHECK(lags[k] == Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("cepstrum of the AR(1) spectrum") {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto c = cepstral_coeffs(model.spectral_density(AngularGrid(4096)), 4);
  CHECK(std::abs(c[0]) < 1e-12);
  CHECK(c[1] == Approx(0.5).epsilon(1e-12));
  CHECK(c[2] == Approx(0.125).epsilon(1e-12));
  CHECK(c[3] == Approx(1.0 / 24).epsilon(1e-12));
  CHECK(c[4] == Approx(0.015625).epsilon(1e-11));
}

TEST_CASE("entropy of 1 + cos") {
  const AngularGrid grid(1 << 14);
  const auto d = from(grid, [](double t) { return 1.0 + std::cos(t); });
  CHECK(entropy(d) == Approx(-1.928013126572382).epsilon(1e-7));
  CHECK(entropy(from(grid, [](double) { return 1.0; })) == 0.0);
}

TEST_CASE("kl and tv of identical densities vanish") {
  const AngularGrid grid(512);
  const auto d = from(grid, [](double t) { return 2.0 + std::sin(t); });
  CHECK(kl_divergence(d, d) == Approx(0.0));
  CHECK(tv_distance(d, d) == 0.0);
}

TEST_CASE("tv of constants is the mass difference") {
  const AngularGrid grid(512);
  const auto a = from(grid, [](double) { return 1.0; });
  const auto b = from(grid, [](double) { return 1.25; });
  CHECK(tv_distance(a, b) == Approx(0.25 * kTwoPi));
}

TEST_CASE("tv is a symmetric pseudometric") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  const AngularGrid grid(256);
  for (int trial = 0; trial < 50; ++trial) {
    auto make = [&] {
      const double a = u(rng), b = u(rng), c = 1.0 + u(rng);
      return from(grid, [=](double t) { return c + a * std::cos(t) + b * std::sin(2 * t); });
    };
    const auto p = make(), q = make(), r = make();
    CHECK(tv_distance(p, q) == Approx(tv_distance(q, p)));
    CHECK(tv_distance(p, r) <= tv_distance(p, q) + tv_distance(q, r) + 1e-12);
  }
}

TEST_CASE("prefix_sup takes the largest partial integral") {
  const std::vector<double> diff = {1.0, -3.0, 1.0};
  CHECK(prefix_sup(diff, 1.0, false) == Approx(2.0));
}

TEST_CASE("toeplitz positive definiteness") {
  const std::vector<double> good = {1.0, 0.5, 0.25};
  const std::vector<double> bad = {1.0, 0.9, 0.0};
  CHECK(toeplitz_positive_definite(good));
  CHECK_FALSE(toeplitz_positive_definite(bad));
  CHECK_THROWS_AS(CovarianceSequence({1.0, 2.0}), Error);
  CHECK_THROWS_AS(CovarianceSequence({-1.0}), Error);
  try {
    CovarianceSequence({1.0, 0.9, 0.0});
    FAIL("expected ToeplitzNotPD");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kToeplitzNotPD);
  }
}

TEST_CASE("random lags from the generator are PD") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lags = testing::random_pd_lags(rng, testing::random_order(rng, 1, 6));
    CHECK(toeplitz_positive_definite(lags));
  }
}

TEST_CASE("grid density rejects bad values") {
  const AngularGrid grid(4);
  CHECK_THROWS_AS(GridDensity(grid, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(GridDensity(grid, {1.0, -1.0, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(GridDensity(grid, {1.0, NAN, 1.0, 1.0}), Error);
}

TEST_CASE("mismatched grids are rejected") {
  const auto a = from(AngularGrid(8), [](double) { return 1.0; });
  const auto b = from(AngularGrid(16), [](double) { return 1.0; });
  try {
    (void)tv_distance(a, b);
    FAIL("expected GridMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kGridMismatch);
  }
}

}  // namespace
}  // namespace specbound
