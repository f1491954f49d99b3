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

#include "detail/moment_basis.hpp"

#include <cmath>

#include "specbound/trig.hpp"

namespace specbound::detail {

MomentBasis cosine_basis(std::size_t grid_size, std::size_t order) {
  MomentBasis basis;
  const auto count = static_cast<Eigen::Index>(order + 1);
  const auto m = static_cast<Eigen::Index>(grid_size);
  basis.values.resize(count, m);
  for (Eigen::Index k = 0; k < count; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto phase = static_cast<std::size_t>(k * j) % grid_size;
      basis.values(k, j) =
          sign * std::cos(kTwoPi * static_cast<double>(phase) / static_cast<double>(grid_size));
    }
  }
  basis.multipliers = Eigen::VectorXd::Constant(count, 2.0);
  basis.multipliers(0) = 1.0;
  basis.cell_weight = kTwoPi / static_cast<double>(grid_size);
  return basis;
}

}  // namespace specbound::detail
