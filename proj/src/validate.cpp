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

#include "specbound/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "detail/parallel.hpp"
#include "specbound/bounds.hpp"
#include "specbound/config.hpp"
#include "specbound/error.hpp"
#include "specbound/estimator.hpp"

namespace specbound {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxTrials = 100000;
constexpr std::size_t kMaxSamples = 10000000;
constexpr std::size_t kMaxGridSize = 1 << 16;

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "validate: " + what);
}

json quantile_summary(const std::vector<double>& values) {
  if (values.empty()) return nullptr;
  json out;
  const std::pair<const char*, double> levels[] = {
      {"min", 0.0}, {"q05", 0.05}, {"q25", 0.25}, {"q50", 0.5},
      {"q75", 0.75}, {"q95", 0.95}, {"max", 1.0}};
  for (const auto& [name, p] : levels) out[name] = *quantile(values, p);
  return out;
}

json interval_json(const Interval& i) { return json::array({i.low, i.high}); }

}  // namespace

const char* validation_kind_name(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::kNoiseTV: return "noise_tv";
    case ValidationKind::kFiniteSample: return "finite_sample";
    case ValidationKind::kKLLower: return "kl_lower";
  }
  return "unknown";
}

std::optional<double> quantile(std::vector<double> values, double p) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * std::clamp(p, 0.0, 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

ValidationScenario ValidationScenario::from_json(const json& c) {
  constexpr std::string_view where = "validate config";
  config::reject_unknown_keys(c,
                              {"scenario", "model", "noise_variance", "clean_lags", "order",
                               "samples", "trials", "grid_size", "delta", "allowance", "prior",
                               "seed", "solver"},
                              where);
  ValidationScenario s;
  const std::string kind = config::string(c, "scenario", "", where);
  if (kind == "noise_tv") {
    s.kind = ValidationKind::kNoiseTV;
  } else if (kind == "finite_sample") {
    s.kind = ValidationKind::kFiniteSample;
  } else if (kind == "kl_lower") {
    s.kind = ValidationKind::kKLLower;
  } else {
    invalid("\"scenario\" must be noise_tv, finite_sample or kl_lower");
  }
  if (c.contains("model")) s.model = config::parse_model(c.at("model"), "validate config.model");
  s.noise_variance = config::number(c, "noise_variance", s.noise_variance, where);
  const std::string source = config::string(c, "clean_lags", "exact", where);
  if (source == "exact") {
    s.clean_lags = CleanLagSource::kExact;
  } else if (source == "sampled") {
    s.clean_lags = CleanLagSource::kSampled;
  } else {
    invalid("\"clean_lags\" must be exact or sampled");
  }
  s.order = config::unsigned_integer(c, "order", s.order, where);
  s.samples = config::unsigned_integer(c, "samples", s.samples, where);
  s.trials = config::unsigned_integer(c, "trials", s.trials, where);
  s.grid_size = config::unsigned_integer(c, "grid_size", s.grid_size, where);
  s.delta = config::number(c, "delta", s.delta, where);
  s.allowance = config::number(c, "allowance", s.allowance, where);
  if (c.contains("prior")) s.prior = config::number_list(c.at("prior"), "validate config.prior");
  s.seed = config::unsigned_integer(c, "seed", s.seed, where);
  if (c.contains("solver")) {
    s.solver = config::parse_solver(c.at("solver"), s.solver, "validate config.solver");
  }

  if (s.noise_variance < 0.0) invalid("\"noise_variance\" must be >= 0");
  if (s.trials < 1 || s.trials > kMaxTrials) invalid("\"trials\" must be 1..100000");
  if (s.samples < 1 || s.samples > kMaxSamples) invalid("\"samples\" must be 1..10000000");
  if (s.order > s.samples) invalid("\"order\" must not exceed \"samples\"");
  if (s.grid_size < 4 || s.grid_size > kMaxGridSize) invalid("\"grid_size\" must be 4..65536");
  if (2 * s.order >= s.grid_size) invalid("\"order\" aliases on the grid");
  if (!(s.delta >= 0.0)) invalid("\"delta\" must be >= 0");
  if (!(s.allowance >= 0.0 && s.allowance <= 1.0)) invalid("\"allowance\" must be in [0, 1]");
  if (s.prior.empty()) invalid("\"prior\" needs at least one coefficient");
  s.solver.grid_size = s.grid_size;
  return s;
}

json ValidationScenario::to_json() const {
  return {{"scenario", validation_kind_name(kind)},
          {"model", config::model_to_json(model)},
          {"noise_variance", noise_variance},
          {"clean_lags", clean_lags == CleanLagSource::kExact ? "exact" : "sampled"},
          {"order", order},
          {"samples", samples},
          {"trials", trials},
          {"grid_size", grid_size},
          {"delta", delta},
          {"allowance", allowance},
          {"prior", prior},
          {"seed", seed},
          {"solver", config::solver_to_json(solver)}};
}

ValidationResult run_validation(const ValidationScenario& s) {
  s.model.validate();
  const AngularGrid grid(s.grid_size);
  const TrigPolynomial prior{s.prior};
  const GridDensity truth = s.model.spectral_density(grid);
  const std::vector<double> exact_lags = s.model.autocovariance(s.order);
  const bool boxed = s.kind != ValidationKind::kNoiseTV;

  std::optional<LagBox> box;
  std::optional<BoundReport> fixed_report;
  if (boxed) {
    box = LagBox::around(exact_lags, s.delta);
    const auto assessment = marginal_assessment(s.model, *box, s.samples);
    if (s.kind == ValidationKind::kFiniteSample) {
      fixed_report = finite_sample_tv_upper_bound(*box, CovarianceSequence(exact_lags), grid,
                                                  s.solver, assessment);
    } else {
      fixed_report = kl_lower_bound(truth, *box, assessment);
    }
  }

  std::vector<TrialRecord> records(s.trials);
  std::vector<std::vector<double>> sampled(s.trials);
  std::vector<json> first_report(1);
  detail::parallel_for(s.trials, [&](std::size_t i) {
    TrialRecord& rec = records[i];
    rec.index = i;
    try {
      if (s.kind == ValidationKind::kNoiseTV) {
        std::vector<double> clean = exact_lags;
        if (s.clean_lags == CleanLagSource::kSampled) {
          clean = estimate_lags(simulate(s.model, s.samples + 1, derive_seed(s.seed, 2 * i)).values,
                                s.order);
        }
        const auto noise = estimate_lags(
            simulate(ProcessModel::white(s.noise_variance), s.samples + 1,
                     derive_seed(s.seed, 2 * i + 1))
                .values,
            s.order);
        auto c = noise_tv_analysis(CovarianceSequence(clean), noise, prior, grid, s.solver);
        rec.empirical = tv_distance(c.estimate, truth);
        rec.bound = c.report.bound_value;
        rec.violation = rec.empirical > rec.bound;
        rec.evaluated = true;
        if (i == 0) first_report[0] = c.report.to_json();
        return;
      }
      const auto lags =
          estimate_lags(simulate(s.model, s.samples + 1, derive_seed(s.seed, i)).values, s.order);
      sampled[i] = lags;
      rec.in_box = box->contains(lags);
      rec.bound = fixed_report->bound_value;
      if (!rec.in_box) return;
      const auto estimate =
          solve_dual(EstimatorProblem(CovarianceSequence(lags), prior, grid), s.solver).on(grid);
      if (s.kind == ValidationKind::kFiniteSample) {
        rec.empirical = tv_distance(estimate, truth);
        rec.violation = rec.empirical > rec.bound;
      } else {
        rec.empirical = kl_divergence(truth, estimate);
        // Vacuous bounds are never violations.
        rec.violation = rec.bound > 0.0 && rec.empirical < rec.bound;
      }
      rec.evaluated = true;
    } catch (const Error& e) {
      rec.error = error_code_name(e.code());
    }
  });

  std::map<std::string, std::size_t> failures;
  std::vector<double> empirical;
  std::vector<double> bounds;
  std::size_t in_box = 0;
  std::size_t violations = 0;
  for (const auto& rec : records) {
    if (!rec.error.empty()) ++failures[rec.error];
    in_box += rec.in_box;
    if (!rec.evaluated) continue;
    empirical.push_back(rec.empirical);
    bounds.push_back(rec.bound);
    violations += rec.violation;
  }
  std::size_t failed = 0;
  for (const auto& [name, count] : failures) failed += count;

  ValidationResult result;
  result.trials = std::move(records);
  const double rate =
      empirical.empty() ? 0.0 : static_cast<double>(violations) / static_cast<double>(empirical.size());
  result.breach = !empirical.empty() && rate > s.allowance;

  json& doc = result.document;
  doc["schema"] = kValidationSchema;
  doc["scenario"] = s.to_json();
  doc["trials"] = {{"requested", s.trials},
                   {"in_box", in_box},
                   {"evaluated", empirical.size()},
                   {"failed", failed},
                   {"failures", failures}};
  doc["empirical"] = {
      {"metric", s.kind == ValidationKind::kKLLower ? "kl_true_vs_estimate" : "tv_estimate_vs_true"},
      {"quantiles", quantile_summary(empirical)}};
  doc["bound"] = {{"quantiles", quantile_summary(bounds)}};
  doc["violations"] = violations;
  doc["violation_rate"] = rate;
  doc["allowance"] = s.allowance;
  doc["breach"] = result.breach;

  if (boxed) {
    const std::size_t order = s.order;
    std::vector<std::size_t> hits(order + 1, 0);
    for (const auto& lags : sampled) {
      if (lags.empty()) continue;
      for (std::size_t k = 0; k <= order; ++k) {
        hits[k] += lags[k] >= box->lower()[k] && lags[k] <= box->upper()[k];
      }
    }
    json per_lag = json::array();
    for (std::size_t k = 0; k <= order; ++k) {
      per_lag.push_back({{"frequency", static_cast<double>(hits[k]) / static_cast<double>(s.trials)},
                         {"wilson95", interval_json(wilson_interval(hits[k], s.trials))},
                         {"assessment", fixed_report->assessment->per_lag[k].probability}});
    }
    doc["coverage"] = {
        {"joint_frequency", static_cast<double>(in_box) / static_cast<double>(s.trials)},
        {"joint_wilson95", interval_json(wilson_interval(in_box, s.trials))},
        {"probability_level", fixed_report->probability_level},
        {"per_lag", per_lag}};
    doc["bound"]["value"] = fixed_report->bound_value;
    doc["bound"]["vacuous"] = fixed_report->bound_value <= 0.0;
    doc["report"] = fixed_report->to_json();
  } else {
    doc["report"] = first_report[0].is_null() ? json(nullptr) : first_report[0];
  }
  return result;
}

}  // namespace specbound
