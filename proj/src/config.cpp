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

#include "specbound/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "specbound/error.hpp"

namespace specbound::config {

namespace {

[[noreturn]] void fail(std::string_view where, const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, std::string(where) + ": " + what);
}

}  // namespace

void require_object(const Json& value, std::string_view where) {
  if (!value.is_object()) fail(where, "expected a JSON object");
}

void reject_unknown_keys(const Json& object, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  require_object(object, where);
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      fail(where, "unknown key \"" + item.key() + "\"");
    }
  }
}

double number(const Json& object, const char* key, double fallback, std::string_view where) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (!v.is_number()) fail(where, std::string("\"") + key + "\" must be a number");
  const double out = v.get<double>();
  if (!std::isfinite(out)) fail(where, std::string("\"") + key + "\" must be finite");
  return out;
}

std::uint64_t unsigned_integer(const Json& object, const char* key, std::uint64_t fallback,
                               std::string_view where) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(where, std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::string string(const Json& object, const char* key, const std::string& fallback,
                   std::string_view where) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (!v.is_string()) fail(where, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

bool boolean(const Json& object, const char* key, bool fallback, std::string_view where) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (!v.is_boolean()) fail(where, std::string("\"") + key + "\" must be true or false");
  return v.get<bool>();
}

std::vector<double> number_list(const Json& value, std::string_view where) {
  if (!value.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : value) {
    if (!v.is_number() || !std::isfinite(v.get<double>())) {
      fail(where, "expected an array of finite numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

ProcessModel parse_model(const Json& value, std::string_view where) {
  reject_unknown_keys(value, {"kind", "ar", "ma", "variance"}, where);
  const std::string kind = string(value, "kind", "", where);
  const auto list = [&](const char* key) {
    return value.contains(key) ? number_list(value.at(key), std::string(where) + "." + key)
                               : std::vector<double>{};
  };
  const double variance = number(value, "variance", 1.0, where);
  ProcessModel model;
  if (kind == "white") {
    model = ProcessModel::white(variance);
  } else if (kind == "ar") {
    model = ProcessModel::autoregressive(list("ar"), variance);
  } else if (kind == "ma") {
    model = ProcessModel::moving_average(list("ma"), variance);
  } else if (kind == "arma") {
    model = ProcessModel::arma(list("ar"), list("ma"), variance);
  } else {
    fail(where, "\"kind\" must be one of white, ar, ma, arma");
  }
  if (kind == "white" && (value.contains("ar") || value.contains("ma"))) {
    fail(where, "white noise takes no coefficients");
  }
  if (kind == "ar" && value.contains("ma")) fail(where, "ar models take no \"ma\" list");
  if (kind == "ma" && value.contains("ar")) fail(where, "ma models take no \"ar\" list");
  model.validate();
  return model;
}

Json model_to_json(const ProcessModel& model) {
  Json out = {{"kind", process_kind_name(model.kind)}, {"variance", model.innovation_variance}};
  if (!model.ar.empty()) out["ar"] = model.ar;
  if (!model.ma.empty()) out["ma"] = model.ma;
  return out;
}

SolverOptions parse_solver(const Json& value, SolverOptions base, std::string_view where) {
  reject_unknown_keys(value, {"tolerance", "max_iterations", "step_tol"}, where);
  base.tolerance = number(value, "tolerance", base.tolerance, where);
  const auto iterations = unsigned_integer(value, "max_iterations",
                                           static_cast<std::uint64_t>(base.max_iterations), where);
  if (iterations < 1 || iterations > 100000) fail(where, "\"max_iterations\" must be 1..100000");
  base.max_iterations = static_cast<int>(iterations);
  base.step_tol = number(value, "step_tol", base.step_tol, where);
  if (!(base.tolerance > 0.0) || !(base.step_tol > 0.0)) {
    fail(where, "tolerances must be positive");
  }
  return base;
}

Json solver_to_json(const SolverOptions& options) {
  return {{"tolerance", options.tolerance},
          {"max_iterations", options.max_iterations},
          {"step_tol", options.step_tol}};
}

}  // namespace specbound::config
