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

#ifndef SPECBOUND_TOOLS_CAPI_HANDLE_HPP_
#define SPECBOUND_TOOLS_CAPI_HANDLE_HPP_

#include <memory>
#include <stdexcept>
#include <string>

#include "specbound/specbound.h"

namespace specbound::cli {

// A failed C API call, or a configuration problem reported with a status.
class Failure : public std::runtime_error {
 public:
  Failure(sb_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  sb_status status() const { return status_; }

 private:
  sb_status status_;
};

inline void check(sb_status status) {
  if (status != SB_OK) throw Failure(status, sb_last_error());
}

[[noreturn]] inline void config_error(const std::string& message) {
  throw Failure(SB_INVALID_ARGUMENT, message);
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using Grid = std::unique_ptr<sb_grid, Deleter<sb_grid, sb_grid_destroy>>;
using Density = std::unique_ptr<sb_density, Deleter<sb_density, sb_density_destroy>>;
using Assessment =
    std::unique_ptr<sb_assessment, Deleter<sb_assessment, sb_assessment_destroy>>;
using Report = std::unique_ptr<sb_report, Deleter<sb_report, sb_report_destroy>>;
using Basis = std::unique_ptr<sb_basis, Deleter<sb_basis, sb_basis_destroy>>;
using MultiGrid = std::unique_ptr<sb_multi_grid, Deleter<sb_multi_grid, sb_multi_grid_destroy>>;
using MultiDensity =
    std::unique_ptr<sb_multi_density, Deleter<sb_multi_density, sb_multi_density_destroy>>;

// Takes ownership of a string returned by the library.
inline std::string take(char* text) {
  std::string out = text ? text : "";
  sb_string_free(text);
  return out;
}

}  // namespace specbound::cli

#endif  // SPECBOUND_TOOLS_CAPI_HANDLE_HPP_
