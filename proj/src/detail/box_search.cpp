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

#include "detail/box_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "specbound/error.hpp"

namespace specbound::detail {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

class CoordinateSearch {
 public:
  CoordinateSearch(const EntropyOracle& oracle, const BoxSearchOptions& options)
      : oracle_(oracle), options_(options) {}

  std::optional<double> eval(const Eigen::VectorXd& r) {
    ++evaluations_;
    auto h = oracle_(r);
    if (h && !std::isfinite(*h)) return std::nullopt;
    return h;
  }

  // One coordinate update; returns true when x moved.
  bool update(Eigen::VectorXd& x, double& h, Eigen::Index k, double lo_bound, double hi_bound) {
    if (!(hi_bound > lo_bound)) return false;
    double best_t = x(k);
    double best_h = h;
    auto probe = [&](double t) {
      Eigen::VectorXd y = x;
      y(k) = t;
      auto value = eval(y);
      const double v = value.value_or(-std::numeric_limits<double>::infinity());
      if (v > best_h) {
        best_h = v;
        best_t = t;
      }
      return v;
    };
    const double lo = feasible_end(x(k), lo_bound, probe);
    const double hi = feasible_end(x(k), hi_bound, probe);
    if (hi - lo > options_.step_tol) {
      double a = lo;
      double b = hi;
      double c = b - kInvPhi * (b - a);
      double d = a + kInvPhi * (b - a);
      double fc = probe(c);
      double fd = probe(d);
      while (b - a > options_.step_tol) {
        if (fc > fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - kInvPhi * (b - a);
          fc = probe(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + kInvPhi * (b - a);
          fd = probe(d);
        }
      }
      probe(0.5 * (a + b));
    }
    const double tiny = 1e-14 * (1.0 + std::abs(h));
    if (best_h > h + tiny && best_t != x(k)) {
      x(k) = best_t;
      h = best_h;
      return true;
    }
    return false;
  }

  int evaluations() const { return evaluations_; }

 private:
  // Largest feasible point between `from` (feasible) and `to`, by bisection.
  template <typename Probe>
  double feasible_end(double from, double to, Probe& probe) {
    if (from == to) return from;
    if (std::isfinite(probe(to))) return to;
    double good = from;
    double bad = to;
    while (std::abs(bad - good) > 0.5 * options_.step_tol) {
      const double mid = 0.5 * (good + bad);
      if (std::isfinite(probe(mid))) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    return good;
  }

  const EntropyOracle& oracle_;
  const BoxSearchOptions& options_;
  int evaluations_ = 0;
};

}  // namespace

BoxSearchResult maximize_over_box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                                  const EntropyOracle& oracle, const BoxSearchOptions& options) {
  const Eigen::Index dim = lower.size();
  CoordinateSearch search(oracle, options);

  std::vector<Eigen::VectorXd> candidates;
  candidates.emplace_back(0.5 * (lower + upper));
  // Largest r0 with the remaining coordinates as close to zero as the box
  // allows: the most diagonally dominant point in the box.
  Eigen::VectorXd witness(dim);
  witness(0) = upper(0);
  for (Eigen::Index k = 1; k < dim; ++k) witness(k) = std::clamp(0.0, lower(k), upper(k));
  candidates.push_back(witness);
  if (dim < 63 && (std::size_t{1} << dim) <= options.max_corner_starts) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
      Eigen::VectorXd corner(dim);
      for (Eigen::Index k = 0; k < dim; ++k) {
        corner(k) = (mask >> k) & 1U ? upper(k) : lower(k);
      }
      candidates.push_back(corner);
    }
  }

  struct Start {
    Eigen::VectorXd x;
    double h;
  };
  std::vector<Start> starts;
  for (const auto& c : candidates) {
    bool duplicate = false;
    for (const auto& s : starts) duplicate = duplicate || s.x == c;
    if (duplicate) continue;
    if (auto h = search.eval(c)) starts.push_back({c, *h});
  }
  if (starts.empty()) {
    throw Error(ErrorCode::kEmptyFeasibleBox,
                "no admissible covariance vector found in the lag box (centre, witness and "
                "corners all fail)");
  }

  BoxSearchResult result;
  result.entropy = -std::numeric_limits<double>::infinity();
  for (auto& start : starts) {
    Eigen::VectorXd x = start.x;
    double h = start.h;
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
      bool moved = false;
      for (Eigen::Index k = 0; k < dim; ++k) {
        moved = search.update(x, h, k, lower(k), upper(k)) || moved;
      }
      if (!moved) break;
    }
    if (h > result.entropy) {
      result.entropy = h;
      result.point = x;
    }
  }
  result.starts = static_cast<int>(starts.size());

  // No single coordinate step of size step_tol may improve the optimum.
  result.certified = true;
  const double tiny = 1e-12 * (1.0 + std::abs(result.entropy));
  for (Eigen::Index k = 0; k < dim && result.certified; ++k) {
    for (double sign : {-1.0, 1.0}) {
      Eigen::VectorXd y = result.point;
      y(k) = std::clamp(y(k) + sign * options.step_tol, lower(k), upper(k));
      if (y(k) == result.point(k)) continue;
      if (auto h = search.eval(y); h && *h > result.entropy + tiny) result.certified = false;
    }
  }
  result.evaluations = search.evaluations();
  return result;
}

}  // namespace specbound::detail
