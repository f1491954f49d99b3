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

#ifndef SPECBOUND_VALIDATE_HPP_
#define SPECBOUND_VALIDATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specbound/sampling.hpp"
#include "specbound/solver_options.hpp"

namespace specbound {

inline constexpr const char* kValidationSchema = "specbound-validation/1";

enum class ValidationKind { kNoiseTV, kFiniteSample, kKLLower };

const char* validation_kind_name(ValidationKind kind);

// Where the clean lags of the noise scenario come from: the model's exact
// autocovariance, or biased lag estimates from a simulated clean series.
enum class CleanLagSource { kExact, kSampled };

struct ValidationScenario {
  ValidationKind kind = ValidationKind::kNoiseTV;
  ProcessModel model = ProcessModel::autoregressive({0.5}, 1.0);
  double noise_variance = 0.1;  // noise_tv only
  CleanLagSource clean_lags = CleanLagSource::kExact;
  std::size_t order = 2;
  std::size_t samples = 10000;  // N; series have N + 1 values
  std::size_t trials = 500;
  std::size_t grid_size = 2048;
  double delta = 0.05;           // box half-width in units of r0
  double allowance = 0.01;       // tolerated violation rate
  std::vector<double> prior{1.0};
  std::uint64_t seed = 1;
  SolverOptions solver;

  // Strict: unknown keys and out-of-range values throw Error(kInvalidArgument).
  static ValidationScenario from_json(const nlohmann::json& config);
  nlohmann::json to_json() const;
};

struct TrialRecord {
  std::size_t index = 0;
  bool in_box = true;        // always true for noise_tv
  bool evaluated = false;    // solved and counted
  double empirical = 0.0;    // TV or KL of the estimate against the truth
  double bound = 0.0;
  bool violation = false;
  std::string error;         // error code name when a solve failed
};

struct ValidationResult {
  nlohmann::json document;
  std::vector<TrialRecord> trials;
  bool breach = false;
};

// Runs every trial (in parallel, merged by trial index) and summarises.
// Output is a deterministic function of the scenario.
ValidationResult run_validation(const ValidationScenario& scenario);

// Type-7 quantile of unsorted data; nullopt when empty.
std::optional<double> quantile(std::vector<double> values, double p);

}  // namespace specbound

#endif  // SPECBOUND_VALIDATE_HPP_
