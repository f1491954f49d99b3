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

#ifndef SPECBOUND_REPORT_HPP_
#define SPECBOUND_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "specbound/sampling.hpp"

namespace specbound {

inline constexpr const char* kReportSchema = "specbound-report/1";

enum class BoundKind { kNoiseTVUpper, kFiniteSampleTVUpper, kKLLower };

const char* bound_kind_name(BoundKind kind);

struct BoundTerm {
  std::string name;
  double value = 0.0;
  std::string formula;
};

// An auditable bound: every term that enters bound_value is stored with the
// formula that produced it, and bound_value is recompute() of those terms.
struct BoundReport {
  BoundKind kind = BoundKind::kNoiseTVUpper;
  int dimension = 1;
  std::vector<BoundTerm> terms;
  double bound_value = 0.0;
  double probability_level = 1.0;
  std::vector<std::string> caveats;
  std::optional<ProbabilityAssessment> assessment;
  nlohmann::json details = nlohmann::json::object();

  // Throws Error(kInvalidArgument) for an unknown term name.
  double term(std::string_view name) const;
  void add_term(std::string name, double value, std::string formula);
  void add_caveat(std::string caveat);

  // The combination rule of the kind applied to the stored terms.
  double recompute() const;

  nlohmann::json to_json() const;
};

nlohmann::json assessment_to_json(const ProbabilityAssessment& assessment);

}  // namespace specbound

#endif  // SPECBOUND_REPORT_HPP_
