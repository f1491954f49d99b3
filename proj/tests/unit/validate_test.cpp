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

#include <string>

#include "doctest.h"
#include "specbound/config.hpp"
#include "specbound/error.hpp"
#include "specbound/validate.hpp"

namespace specbound {
namespace {

using doctest::Approx;
using nlohmann::json;

TEST_CASE("scenario parsing is strict") {
  CHECK_THROWS_AS(ValidationScenario::from_json(json{{"bogus", 1}}), Error);
  CHECK_THROWS_AS(ValidationScenario::from_json(json{{"scenario", "nope"}}), Error);
  CHECK_THROWS_AS(ValidationScenario::from_json(json{{"trials", 1000000}}), Error);
  const auto s = ValidationScenario::from_json(
      json{{"scenario", "kl_lower"}, {"trials", 10}, {"model", {{"kind", "ar"}, {"ar", {0.3}}}}});
  CHECK(s.kind == ValidationKind::kKLLower);
  CHECK(s.trials == 10);
  CHECK(s.model.ar == std::vector<double>{0.3});
  const auto round = ValidationScenario::from_json(s.to_json());
  CHECK(round.to_json() == s.to_json());
}

TEST_CASE("model parsing") {
  const auto m = config::parse_model(json{{"kind", "arma"}, {"ar", {0.5}}, {"ma", {0.2}},
                                          {"variance", 2.0}},
                                     "model");
  CHECK(m.kind == ProcessKind::kARMA);
  CHECK(m.innovation_variance == 2.0);
  CHECK_THROWS_AS(config::parse_model(json{{"kind", "ar"}, {"ar", {1.5}}}, "model"), Error);
  CHECK_THROWS_AS(config::parse_model(json{{"kind", "white"}, {"extra", 1}}, "model"), Error);
  CHECK(config::parse_model(config::model_to_json(m), "model").id() == m.id());
}

TEST_CASE("type 7 quantiles") {
  CHECK_FALSE(quantile({}, 0.5).has_value());
  CHECK(*quantile({1.0, 2.0, 3.0, 4.0}, 0.5) == Approx(2.5));
  CHECK(*quantile({5.0, 1.0, 3.0}, 0.0) == 1.0);
  CHECK(*quantile({5.0, 1.0, 3.0}, 1.0) == 5.0);
}

TEST_CASE("zero noise and a long series give no violations") {
  ValidationScenario s;
  s.noise_variance = 0.0;
  s.trials = 10;
  s.samples = 100000;
  s.grid_size = 1024;
  const auto r = run_validation(s);
  CHECK(r.document.at("violations") == 0);
  CHECK_FALSE(r.breach);
}

TEST_CASE("validation documents are deterministic") {
  ValidationScenario s;
  s.kind = ValidationKind::kFiniteSample;
  s.trials = 12;
  s.samples = 2000;
  s.grid_size = 512;
  const auto a = run_validation(s);
  const auto b = run_validation(s);
  CHECK(a.document.dump() == b.document.dump());
  CHECK(a.document.at("schema") == kValidationSchema);
  CHECK(a.document.at("trials").at("requested") == 12);
  CHECK(a.document.contains("coverage"));
}

}  // namespace
}  // namespace specbound
