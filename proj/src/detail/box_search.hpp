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

#ifndef SPECBOUND_DETAIL_BOX_SEARCH_HPP_
#define SPECBOUND_DETAIL_BOX_SEARCH_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <optional>

namespace specbound::detail {

// Returns the entropy of the maximum-entropy density matching r, or nullopt
// when r is not an admissible moment vector (or the inner solve fails).
using EntropyOracle = std::function<std::optional<double>(const Eigen::VectorXd& r)>;

struct BoxSearchOptions {
  double step_tol = 1e-6;
  int max_sweeps = 200;
  // Corners are used as extra starting points only when there are at most
  // this many of them.
  std::size_t max_corner_starts = 8;
};

struct BoxSearchResult {
  Eigen::VectorXd point;
  double entropy = 0.0;
  bool certified = false;
  int evaluations = 0;
  int starts = 0;
};

// Coordinate-wise golden-section ascent of a concave entropy over
// [lower, upper], restarted from the centre, a diagonally dominant witness
// point and (when few) the feasible corners.
// Throws Error(kEmptyFeasibleBox) when none of those points is admissible.
BoxSearchResult maximize_over_box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                                  const EntropyOracle& oracle, const BoxSearchOptions& options);

}  // namespace specbound::detail

#endif  // SPECBOUND_DETAIL_BOX_SEARCH_HPP_
