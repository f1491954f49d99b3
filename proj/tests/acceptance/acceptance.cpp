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

// Acceptance suite: one PASS/FAIL line per criterion, INFO lines for context.
// Usage: acceptance [path-to-specbound-cli]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "generators.hpp"
#include "specbound/bounds.hpp"
#include "specbound/error.hpp"
#include "specbound/estimator.hpp"
#include "specbound/maxent.hpp"
#include "specbound/multivariate.hpp"
#include "specbound/validate.hpp"

namespace specbound {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;
std::map<int, std::string> verdicts;  // printed in criterion order at the end

void verdict(int id, const char* name, bool pass, const std::string& detail) {
  verdicts[id] = std::string(pass ? "PASS " : "FAIL ") + std::to_string(id) + " " + name + ": " +
                 detail;
  failures += !pass;
}

void info(const std::string& line) {
  std::printf("INFO %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Criterion 8 runs over every density the suite produces.
struct LogInequalityAudit {
  std::size_t densities = 0;
  std::size_t nodes = 0;
  std::size_t breaches = 0;
  double worst = -INFINITY;

  void check(const std::vector<double>& values) {
    ++densities;
    for (double v : values) {
      ++nodes;
      if (!(v > 0.0)) continue;  // log 0 = -inf
      const double excess = std::log(v) - (v - 1.0);
      worst = std::max(worst, excess);
      breaches += excess > 1e-12;
    }
  }
  void check(const GridDensity& d) { check(d.values()); }
  void check(const MultiGridDensity& d) { check(d.values()); }
};

LogInequalityAudit audit;

struct RandomCase {
  std::vector<double> lags;
  TrigPolynomial prior;
};

std::vector<RandomCase> random_cases() {
  std::mt19937_64 rng(20260101);
  std::vector<RandomCase> cases;
  for (int i = 0; i < 100; ++i) {
    RandomCase c;
    c.lags = testing::random_pd_lags(rng, testing::random_order(rng, 1, 6));
    c.prior = i % 2 == 0 ? TrigPolynomial{{1.0}} : TrigPolynomial{{1.0, 0.25}};
    cases.push_back(std::move(c));
  }
  return cases;
}

void criteria_1_and_2() {
  const auto start = Clock::now();
  const AngularGrid grid(kDefaultGridSize);
  const SolverOptions options;
  int converged = 0;
  double worst_residual = 0.0;
  int dominance = 0;
  int identity = 0;
  double worst_gap = INFINITY;
  double worst_identity = 0.0;
  const auto cases = random_cases();
  for (const auto& c : cases) {
    try {
      const CovarianceSequence lags(c.lags);
      const auto est = solve_dual(EstimatorProblem(lags, c.prior, grid), options).on(grid);
      const auto back = compute_lags(est, lags.order());
      const double residual = testing::max_abs_diff(back, c.lags) / lags.r0();
      worst_residual = std::max(worst_residual, residual);
      converged += residual <= 1e-8;

      const auto me = solve_maxent(lags, grid, options).on(grid);
      const double gap = entropy(me) - entropy(est);
      const double kl = kl_divergence(est, me);
      worst_gap = std::min(worst_gap, gap);
      worst_identity = std::max(worst_identity, std::abs(kl - gap));
      dominance += gap >= -1e-8;
      identity += std::abs(kl - gap) <= 1e-7;
      audit.check(est);
      audit.check(me);
    } catch (const Error& e) {
      info(fmt("case failed: %s", e.what()));
    }
  }
  const double elapsed = seconds_since(start);
  const int n = static_cast<int>(cases.size());
  verdict(1, "moment matching", converged == n && elapsed <= 60.0,
          fmt("%d/%d converged with residual <= 1e-8 r0 (worst %.2e r0), %.1f s", converged, n,
              worst_residual, elapsed));
  verdict(2, "maxent dominance and KL identity", dominance == n && identity == n,
          fmt("dominance %d/%d (min gap %.3e), identity %d/%d (worst %.2e)", dominance, n,
              worst_gap, identity, n, worst_identity));
}

void criterion_3() {
  const AngularGrid grid(kDefaultGridSize);
  double worst = 0.0;
  std::string detail;
  for (double a : {0.1, 0.5, 0.9}) {
    const double r0 = 1.0 / (1.0 - a * a);
    const auto est = solve_dual(EstimatorProblem(CovarianceSequence({r0, a * r0}),
                                                 TrigPolynomial{{1.0}}, grid),
                                SolverOptions{})
                         .on(grid);
    const auto truth = ProcessModel::autoregressive({a}, 1.0).spectral_density(grid);
    const double err = testing::max_abs_diff(est.values(), truth.values());
    worst = std::max(worst, err);
    detail += fmt("a=%.1f: %.2e  ", a, err);
    audit.check(est);
  }
  verdict(3, "AR(1) closed form", worst <= 1e-6, detail + "(sup-norm, tolerance 1e-6)");
}

void criterion_4() {
  std::mt19937_64 rng(44);
  const AngularGrid grid(1024);
  double worst_est = 0.0;
  double worst_me = 0.0;
  for (int point = 0; point < 50; ++point) {
    const std::size_t n = testing::random_order(rng, 1, 6);
    const CovarianceSequence lags(testing::random_pd_lags(rng, n));
    const EstimatorProblem problem(lags, TrigPolynomial{{1.0, 0.25}}, grid);
    const auto q = testing::random_positive_poly(rng, n, 1.0 / lags.r0());
    const auto g = dual_value_and_gradient(q, problem).gradient;

    std::uniform_real_distribution<double> u(-0.3, 0.3);
    std::vector<double> lambda(n + 1);
    lambda[0] = -1.0 - std::log(lags.r0());
    for (std::size_t k = 1; k <= n; ++k) lambda[k] = u(rng) / static_cast<double>(n);
    const auto gm = maxent_dual_value_and_gradient(lambda, lags, grid).gradient;

    for (std::size_t k = 0; k <= n; ++k) {
      const double h = 1e-6 * std::max(1.0, std::abs(q.coeffs[k]));
      auto qp = q, qm = q;
      qp.coeffs[k] += h;
      qm.coeffs[k] -= h;
      const double fd = (dual_value_and_gradient(qp, problem).value -
                         dual_value_and_gradient(qm, problem).value) / (2 * h);
      worst_est = std::max(worst_est, std::abs(fd - g[k]) / std::max(std::abs(g[k]), 1e-3));

      auto lp = lambda, lm = lambda;
      lp[k] += 1e-6;
      lm[k] -= 1e-6;
      const double fdm = (maxent_dual_value_and_gradient(lp, lags, grid).value -
                          maxent_dual_value_and_gradient(lm, lags, grid).value) / 2e-6;
      worst_me = std::max(worst_me, std::abs(fdm - gm[k]) / std::max(std::abs(gm[k]), 1e-3));
    }
  }
  verdict(4, "dual gradients vs central differences", worst_est <= 1e-6 && worst_me <= 1e-6,
          fmt("50 points; worst relative error estimator %.2e, maxent %.2e", worst_est,
              worst_me));
}

nlohmann::json noise_scenario(double variance, const char* clean_lags) {
  return {{"scenario", "noise_tv"},
          {"model", {{"kind", "ar"}, {"ar", {0.5}}, {"variance", 1.0}}},
          {"noise_variance", variance},
          {"clean_lags", clean_lags},
          {"order", 2},
          {"samples", 10000},
          {"trials", 500},
          {"grid_size", 2048},
          {"allowance", 0.01},
          {"seed", 5}};
}

void criterion_5() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (double variance : {0.1, 0.25}) {
    const auto r = run_validation(ValidationScenario::from_json(noise_scenario(variance, "exact")));
    const auto& d = r.document;
    const std::size_t evaluated = d.at("trials").at("evaluated");
    const std::size_t violations = d.at("violations");
    const double coverage = 1.0 - static_cast<double>(violations) / static_cast<double>(evaluated);
    pass = pass && evaluated == 500 && coverage >= 0.99;
    detail += fmt("sigma2=%.2f: %zu/%zu within bound (median tv %.4f, median bound %.4f)  ",
                  variance, evaluated - violations, evaluated,
                  d.at("empirical").at("quantiles").at("q50").get<double>(),
                  d.at("bound").at("quantiles").at("q50").get<double>());
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed <= 300.0;
  verdict(5, "noise-bound ordering", pass, detail + fmt("%.1f s", elapsed));

  // Clean lags re-estimated from a simulated clean series as well.
  for (double variance : {0.1, 0.25}) {
    const auto r =
        run_validation(ValidationScenario::from_json(noise_scenario(variance, "sampled")));
    info(fmt("noise bound with sampled clean lags, sigma2=%.2f: violation rate %.3f "
             "(the H[maxent clean] term is clamped at 0 because the clean entropy is negative)",
             variance, r.document.at("violation_rate").get<double>()));
  }
}

void criterion_6() {
  const auto model = ProcessModel::autoregressive({0.5}, 1.0);
  const auto exact = model.autocovariance(2);
  const AngularGrid grid(2048);
  std::vector<double> frequency;
  std::string detail;
  for (std::size_t n : {1000, 10000, 100000}) {
    ValidationScenario s;
    s.kind = ValidationKind::kFiniteSample;
    s.samples = n;
    s.trials = 500;
    s.delta = 0.05;
    s.seed = 6;
    const auto r = run_validation(s);
    const auto& cov = r.document.at("coverage");
    frequency.push_back(cov.at("joint_frequency"));
    info(fmt("finite-sample N=%zu: in-box frequency %.3f (Wilson %.3f..%.3f), "
             "probability_level %.4f, bound %.4f, tv violations %zu/%zu",
             n, frequency.back(), cov.at("joint_wilson95").at(0).get<double>(),
             cov.at("joint_wilson95").at(1).get<double>(),
             cov.at("probability_level").get<double>(),
             r.document.at("bound").at("value").get<double>(),
             r.document.at("violations").get<std::size_t>(),
             r.document.at("trials").at("evaluated").get<std::size_t>()));
  }
  const bool coverage_monotone = frequency[0] <= frequency[1] && frequency[1] <= frequency[2];

  std::vector<double> bound;
  for (double delta : {0.01, 0.03, 0.05}) {
    const auto box = LagBox::around(exact, delta);
    const auto report = finite_sample_tv_upper_bound(
        box, CovarianceSequence(exact), grid, SolverOptions{},
        marginal_assessment(model, box, 10000));
    bound.push_back(report.bound_value);
  }
  const bool bound_monotone = bound[0] <= bound[1] && bound[1] <= bound[2];
  detail = fmt("in-box frequency %.3f, %.3f, %.3f for N = 1e3, 1e4, 1e5; bound %.4f, %.4f, %.4f "
               "for delta = 0.01, 0.03, 0.05",
               frequency[0], frequency[1], frequency[2], bound[0], bound[1], bound[2]);
  verdict(6, "finite-sample bound behaviour", coverage_monotone && bound_monotone, detail);
}

void criterion_7() {
  ValidationScenario s;
  s.kind = ValidationKind::kKLLower;
  s.trials = 500;
  s.samples = 10000;
  s.delta = 0.05;
  s.seed = 7;
  const auto r = run_validation(s);
  const auto& d = r.document;
  const std::size_t evaluated = d.at("trials").at("evaluated");
  const std::size_t violations = d.at("violations");
  const double bound = d.at("bound").at("value");
  const bool vacuous = d.at("bound").at("vacuous");
  verdict(7, "KL lower bound", violations == 0,
          fmt("bound %.4f (%s), %zu in-box trials, %zu with KL below the bound, median KL %.4f",
              bound, vacuous ? "vacuous, flagged" : "non-vacuous", evaluated, violations,
              d.at("empirical").at("quantiles").at("q50").get<double>()));
}

void criterion_9() {
  const auto start = Clock::now();
  const SolverOptions options;
  const auto grid = ProductGrid::square(2, 128);
  const AngularGrid axis(128);

  // Separable scenarios: axial maxent against the tensor product of the
  // per-axis solutions, and moments against products of axis lags.
  double separable = 0.0;
  const std::vector<std::vector<ProcessModel>> scenarios = {
      {ProcessModel::autoregressive({0.5}, 1.0), ProcessModel::white(1.0)},
      {ProcessModel::autoregressive({0.5}, 1.0), ProcessModel::autoregressive({-0.3}, 0.8)},
      {ProcessModel::moving_average({0.4}, 1.0), ProcessModel::autoregressive({0.2}, 2.0)}};
  for (const auto& models : scenarios) {
    const auto truth = independent_spectrum(models, grid);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto basis = MultiBasis::axial(2, n);
      const auto moments = multi_compute_moments(truth, basis);
      const auto a = models[0].autocovariance(n);
      const auto b = models[1].autocovariance(n);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& e = basis.exponents()[k];
        separable = std::max(separable, std::abs(moments[k] - a[e[0]] * b[e[1]]));
      }
      const auto joint = multi_solve_maxent(moments, basis, grid, options).on(grid);
      const auto fa = solve_maxent(CovarianceSequence(a), axis, options).on(axis);
      const auto fb = solve_maxent(CovarianceSequence(b), axis, options).on(axis);
      const auto product = tensor_product(std::vector<GridDensity>{fa, fb});
      separable = std::max(separable, testing::max_abs_diff(joint.values(), product.values()));
      audit.check(joint);
      audit.check(fa);
      audit.check(fb);
    }
  }

  // Dominance and moment matching at n <= 5.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-0.6, 0.6);
  int cases = 0;
  int ok = 0;
  double worst_residual = 0.0;
  double worst_gap = INFINITY;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      const std::vector<ProcessModel> models = {
          ProcessModel::autoregressive({coef(rng)}, 1.0),
          ProcessModel::moving_average({coef(rng)}, 1.0)};
      const auto basis = MultiBasis::axial(2, n);
      const auto moments = multi_compute_moments(independent_spectrum(models, grid), basis);
      const MultiPolynomial prior{MultiBasis::axial(2, 1), {1.0, 0.2, 0.1}};
      ++cases;
      try {
        const auto est = multi_solve_dual(moments, prior, basis, grid, options).on(grid);
        const auto me = multi_solve_maxent(moments, basis, grid, options).on(grid);
        const double residual =
            std::max(testing::max_abs_diff(multi_compute_moments(est, basis), moments),
                     testing::max_abs_diff(multi_compute_moments(me, basis), moments)) /
            moments[0];
        const double gap = entropy(me) - entropy(est);
        worst_residual = std::max(worst_residual, residual);
        worst_gap = std::min(worst_gap, gap);
        ok += residual <= 1e-8 && gap >= -1e-8;
        audit.check(est);
        audit.check(me);
      } catch (const Error& e) {
        info(fmt("d=2 case failed: %s", e.what()));
      }
    }
  }
  const double elapsed = seconds_since(start);
  verdict(9, "multivariate separability", separable <= 1e-6 && ok == cases && elapsed <= 300.0,
          fmt("separable sup-norm %.2e; %d/%d cases with matching <= 1e-8 r0 and dominance "
              "(worst residual %.2e, min gap %.3e); %.1f s",
              separable, ok, cases, worst_residual, worst_gap, elapsed));
}

void criterion_8() {
  // A few noise analyses add estimates built from noisy lags.
  const AngularGrid grid(2048);
  const auto exact = ProcessModel::autoregressive({0.5}, 1.0).autocovariance(2);
  for (double variance : {0.1, 0.25}) {
    const auto c = noise_tv_analysis(CovarianceSequence(exact),
                                     std::vector<double>{variance, 0.0, 0.0},
                                     TrigPolynomial{{1.0}}, grid, SolverOptions{});
    audit.check(c.estimate);
    audit.check(c.maxent_noisy);
    audit.check(c.maxent_clean);
  }
  const auto box = solve_maxent_box(LagBox::around(exact, 0.05), grid, SolverOptions{});
  audit.check(box.density.on(grid));
  verdict(8, "log inequality", audit.breaches == 0,
          fmt("%zu densities, %zu nodes, max of log(phi) - (phi - 1) = %.3e", audit.densities,
              audit.nodes, audit.worst));
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion_10(const char* cli) {
  namespace fs = std::filesystem;
  const nlohmann::json scenario = {{"scenario", "finite_sample"}, {"trials", 200},
                                   {"samples", 5000}, {"seed", 10}};
  if (cli == nullptr) {
    const auto a = run_validation(ValidationScenario::from_json(scenario)).document.dump();
    const auto b = run_validation(ValidationScenario::from_json(scenario)).document.dump();
    verdict(10, "determinism", a == b,
            fmt("library validation documents identical: %s (no CLI path given)",
                a == b ? "yes" : "no"));
    return;
  }
  const fs::path root = fs::temp_directory_path() / fmt("specbound-acceptance-%d", ::getpid());
  fs::create_directories(root);
  std::ofstream(root / "scenario.json") << scenario.dump(2);
  bool identical = true;
  int status = 0;
  for (const char* run : {"a", "b"}) {
    const std::string cmd = std::string("\"") + cli + "\" validate --config \"" +
                            (root / "scenario.json").string() + "\" --seed 10 --out \"" +
                            (root / run).string() + "\" > /dev/null";
    status |= std::system(cmd.c_str());
  }
  for (const char* file : {"validation.json", "trials.csv"}) {
    identical = identical && slurp(root / "a" / file) == slurp(root / "b" / file) &&
                !slurp(root / "a" / file).empty();
  }
  fs::remove_all(root);
  verdict(10, "determinism", status == 0 && identical,
          fmt("two seed-pinned `specbound validate` runs: validation.json and trials.csv %s",
              identical ? "byte-identical" : "differ"));
}

}  // namespace
}  // namespace specbound

int main(int argc, char** argv) {
  using namespace specbound;
  const auto start = Clock::now();
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::pair<int, std::function<void()>> steps[] = {
      {1, criteria_1_and_2}, {3, criterion_3}, {4, criterion_4}, {5, criterion_5},
      {6, criterion_6},      {7, criterion_7}, {9, criterion_9}, {8, criterion_8},
      {10, [cli] { criterion_10(cli); }}};
  for (const auto& [id, step] : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      verdict(id, "aborted", false, e.what());
    }
  }
  info(fmt("total %.1f s, %d failing criteria", seconds_since(start), failures));
  for (const auto& [id, line] : verdicts) std::printf("%s\n", line.c_str());
  return failures == 0 ? 0 : 1;
}
