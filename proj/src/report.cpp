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

#include "specbound/report.hpp"

#include <cmath>
#include <string>

#include "specbound/bounds.hpp"
#include "specbound/error.hpp"

namespace specbound {

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kNoiseTVUpper: return "NoiseTVUpper";
    case BoundKind::kFiniteSampleTVUpper: return "FiniteSampleTVUpper";
    case BoundKind::kKLLower: return "KLLower";
  }
  return "Unknown";
}

double BoundReport::term(std::string_view name) const {
  for (const auto& t : terms) {
    if (t.name == name) return t.value;
  }
  throw Error(ErrorCode::kInvalidArgument, "report has no term named " + std::string(name));
}

void BoundReport::add_term(std::string name, double value, std::string formula) {
  terms.push_back({std::move(name), value, std::move(formula)});
}

void BoundReport::add_caveat(std::string caveat) { caveats.push_back(std::move(caveat)); }

double BoundReport::recompute() const {
  switch (kind) {
    case BoundKind::kNoiseTVUpper:
      return tv_from_kl(term("kl_estimate_vs_maxent_noisy")) +
             term("tv_maxent_noisy_vs_maxent_clean") +
             tv_from_kl(term("kl_maxent_clean_relaxed"));
    case BoundKind::kFiniteSampleTVUpper:
      return tv_from_kl(term("kl_maxent_box_relaxed")) +
             tv_from_kl(term("kl_maxent_box_vs_clean")) +
             tv_from_kl(term("kl_maxent_clean_relaxed"));
    case BoundKind::kKLLower:
      return -term("mu_dot_upper") - term("entropy_true");
  }
  return 0.0;
}

namespace {

const char* formula_of(BoundKind kind) {
  switch (kind) {
    case BoundKind::kNoiseTVUpper:
      return "V(est, true) <= tvkl(H[me_noisy] - H[est]) + V(me_noisy, me_clean) + "
             "tvkl(H[me_clean])";
    case BoundKind::kFiniteSampleTVUpper:
      return "V(est, true) <= tvkl(H[me_box]) + tvkl(H[me_box] - H[me_clean]) + "
             "tvkl(H[me_clean])";
    case BoundKind::kKLLower:
      return "KL(true || est) >= -sum_k mu_k b_k - H[true]";
  }
  return "";
}

}  // namespace

nlohmann::json assessment_to_json(const ProbabilityAssessment& assessment) {
  nlohmann::json lags = nlohmann::json::array();
  for (std::size_t k = 0; k < assessment.per_lag.size(); ++k) {
    const auto& lag = assessment.per_lag[k];
    nlohmann::json entry = {{"k", k},
                            {"lower", lag.lower},
                            {"upper", lag.upper},
                            {"probability", lag.probability},
                            {"method", probability_method_name(lag.method)}};
    if (lag.wilson) entry["wilson95"] = {lag.wilson->low, lag.wilson->high};
    lags.push_back(std::move(entry));
  }
  nlohmann::json out = {{"per_lag", std::move(lags)},
                        {"product", assessment.product},
                        {"label", "assessment (upper bound), lags treated as independent"}};
  if (assessment.joint_frequency) out["joint_frequency"] = *assessment.joint_frequency;
  if (assessment.joint_wilson) {
    out["joint_wilson95"] = {assessment.joint_wilson->low, assessment.joint_wilson->high};
  }
  if (assessment.trials > 0) out["trials"] = assessment.trials;
  return out;
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json term_list = nlohmann::json::array();
  for (const auto& t : terms) {
    term_list.push_back({{"name", t.name}, {"value", t.value}, {"formula", t.formula}});
  }
  nlohmann::json out = {
      {"schema", kReportSchema},
      {"kind", bound_kind_name(kind)},
      {"dimension", dimension},
      {"formula", formula_of(kind)},
      {"terms", std::move(term_list)},
      {"bound_value", bound_value},
      {"probability_level", probability_level},
      {"caveats", caveats},
      {"conventions",
       {{"lags", "r_k = (1/(2 pi)^d) * integral alpha_k(t) Phi(t) dt; d = 1: alpha_k = cos(k t)"},
        {"polynomials", "c_0 + 2 sum_k c_k cos(k t) (univariate); sum_k c_k alpha_k (product grid)"},
        {"tv", "sup over prefixes t of |integral_{-pi}^{t} (p - q)| (lexicographic for d > 1)"},
        {"kl", "integral p log(p / q) without normalisation"},
        {"tvkl", "3 sqrt(-1 + sqrt(1 + (4/9) kl))"}}},
      {"details", details},
  };
  out["assessment"] = assessment ? assessment_to_json(*assessment) : nlohmann::json(nullptr);
  return out;
}

}  // namespace specbound
