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

#ifndef SPECBOUND_CONFIG_HPP_
#define SPECBOUND_CONFIG_HPP_

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "specbound/sampling.hpp"
#include "specbound/solver_options.hpp"

// Strict JSON readers shared by the validation driver and the CLI. Every
// failure is an Error(kInvalidArgument) naming the offending key.
namespace specbound::config {

using Json = nlohmann::json;

void require_object(const Json& value, std::string_view where);
void reject_unknown_keys(const Json& object, std::initializer_list<std::string_view> allowed,
                         std::string_view where);

double number(const Json& object, const char* key, double fallback, std::string_view where);
std::uint64_t unsigned_integer(const Json& object, const char* key, std::uint64_t fallback,
                               std::string_view where);
std::string string(const Json& object, const char* key, const std::string& fallback,
                   std::string_view where);
bool boolean(const Json& object, const char* key, bool fallback, std::string_view where);
std::vector<double> number_list(const Json& value, std::string_view where);

// {"kind": "white"|"ar"|"ma"|"arma", "ar": [..], "ma": [..], "variance": v}
ProcessModel parse_model(const Json& value, std::string_view where);
Json model_to_json(const ProcessModel& model);

// {"tolerance", "max_iterations", "step_tol"} over the defaults in `base`.
SolverOptions parse_solver(const Json& value, SolverOptions base, std::string_view where);
Json solver_to_json(const SolverOptions& options);

}  // namespace specbound::config

#endif  // SPECBOUND_CONFIG_HPP_
