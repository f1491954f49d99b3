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

#include "specbound/specbound.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "specbound/bounds.hpp"
#include "specbound/config.hpp"
#include "specbound/error.hpp"
#include "specbound/estimator.hpp"
#include "specbound/maxent.hpp"
#include "specbound/multivariate.hpp"
#include "specbound/sampling.hpp"
#include "specbound/trig.hpp"
#include "specbound/validate.hpp"

using nlohmann::json;
namespace sb = specbound;

struct sb_grid {
  sb::AngularGrid grid;
};
struct sb_density {
  sb::GridDensity density;
  json summary = json::object();
};
struct sb_assessment {
  sb::ProbabilityAssessment assessment;
};
struct sb_report {
  sb::BoundReport report;
};
struct sb_basis {
  sb::MultiBasis basis;
};
struct sb_multi_grid {
  sb::ProductGrid grid;
};
struct sb_multi_density {
  sb::MultiGridDensity density;
  json summary = json::object();
};

namespace {

thread_local std::string last_error;

class NullArgument : public std::exception {
 public:
  explicit NullArgument(const char* name) : message_(std::string(name) + " must not be NULL") {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

template <typename T>
T& deref(T* p, const char* name) {
  if (p == nullptr) throw NullArgument(name);
  return *p;
}

template <typename T>
std::span<const T> view(const T* p, std::size_t count, const char* name) {
  if (count > 0 && p == nullptr) throw NullArgument(name);
  return {p, count};
}

const char* text(const char* p, const char* name) {
  if (p == nullptr) throw NullArgument(name);
  return p;
}

std::vector<double> copy(const double* p, std::size_t count, const char* name) {
  const auto s = view(p, count, name);
  return {s.begin(), s.end()};
}

template <typename Body>
sb_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return SB_OK;
  } catch (const sb::Error& e) {
    last_error = e.what();
    return static_cast<sb_status>(static_cast<int>(e.code()));
  } catch (const NullArgument& e) {
    last_error = e.what();
    return SB_INVALID_ARGUMENT;
  } catch (const json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return SB_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SB_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SB_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return SB_INTERNAL;
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

sb::SolverOptions solver_options(const sb_solver_options* options) {
  sb::SolverOptions out;
  if (options != nullptr) {
    out.tolerance = options->tolerance;
    out.max_iterations = options->max_iterations;
    out.step_tol = options->step_tol;
  }
  if (!(out.tolerance > 0.0) || out.max_iterations < 1 || !(out.step_tol > 0.0)) {
    throw sb::Error(sb::ErrorCode::kInvalidArgument, "solver options must be positive");
  }
  return out;
}

json diagnostics_json(const sb::SolverDiagnostics& d) {
  return {{"iterations", d.iterations},
          {"gradient_norm", d.gradient_norm},
          {"moment_residual", d.moment_residual},
          {"hessian_pd_every_iterate", d.hessian_pd_every_iterate}};
}

sb::ProcessModel model_from(const char* model_json) {
  return sb::config::parse_model(json::parse(text(model_json, "model_json")), "model");
}

std::vector<sb::ProcessModel> models_from(const char* models_json) {
  const json parsed = json::parse(text(models_json, "models_json"));
  if (!parsed.is_array()) {
    throw sb::Error(sb::ErrorCode::kInvalidArgument, "models must be a JSON array");
  }
  std::vector<sb::ProcessModel> out;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    out.push_back(sb::config::parse_model(parsed[i], "models[" + std::to_string(i) + "]"));
  }
  return out;
}

sb::LagBox box_from(const double* lower, const double* upper, std::size_t count) {
  return sb::LagBox(copy(lower, count, "lower"), copy(upper, count, "upper"));
}

sb::MultiSeries series_from(const double* series, std::size_t length, std::size_t dimension) {
  const auto values = view(series, length * dimension, "series");
  sb::MultiSeries out;
  out.columns.assign(dimension, std::vector<double>(length));
  for (std::size_t t = 0; t < length; ++t) {
    for (std::size_t i = 0; i < dimension; ++i) out.columns[i][t] = values[t * dimension + i];
  }
  return out;
}

sb::MultiPolynomial prior_from(const sb_basis* prior_basis, const double* prior,
                               std::size_t dimension) {
  if (prior_basis == nullptr) return sb::MultiPolynomial::constant(dimension, 1.0);
  return {prior_basis->basis, copy(prior, prior_basis->basis.size(), "prior")};
}

template <typename T>
void write_vector(const std::vector<T>& values, double* out) {
  if (out == nullptr) throw NullArgument("out");
  std::copy(values.begin(), values.end(), out);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

extern "C" {

const char* sb_version(void) { return "0.1.0"; }

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_OK: return "Ok";
    case SB_OUT_OF_MEMORY: return "OutOfMemory";
    case SB_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status);
  if (code >= 1 && code <= static_cast<int>(sb::ErrorCode::kInvalidMoments)) {
    return sb::error_code_name(static_cast<sb::ErrorCode>(code));
  }
  return "Unknown";
}

int sb_status_is_solver_failure(sb_status status) {
  const int code = static_cast<int>(status);
  if (code < 1 || code > static_cast<int>(sb::ErrorCode::kInvalidMoments)) return 0;
  return sb::is_solver_failure(static_cast<sb::ErrorCode>(code)) ? 1 : 0;
}

const char* sb_last_error(void) { return last_error.c_str(); }

void sb_string_free(char* text) { std::free(text); }

void sb_solver_options_default(sb_solver_options* options) {
  if (options == nullptr) return;
  const sb::SolverOptions d;
  options->tolerance = d.tolerance;
  options->max_iterations = d.max_iterations;
  options->step_tol = d.step_tol;
}

sb_status sb_grid_create(size_t size, sb_grid** out) {
  return guard([&] { deref(out, "out") = new sb_grid{sb::AngularGrid(size)}; });
}
void sb_grid_destroy(sb_grid* grid) { delete grid; }
size_t sb_grid_size(const sb_grid* grid) { return grid ? grid->grid.size() : 0; }
sb_status sb_grid_nodes(const sb_grid* grid, double* out) {
  return guard([&] { write_vector(deref(grid, "grid").grid.nodes(), out); });
}

sb_status sb_density_create(const sb_grid* grid, const double* values, size_t count,
                            sb_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new sb_density{sb::GridDensity(deref(grid, "grid").grid, copy(values, count, "values"))};
  });
}
void sb_density_destroy(sb_density* density) { delete density; }
size_t sb_density_size(const sb_density* density) {
  return density ? density->density.size() : 0;
}
sb_status sb_density_values(const sb_density* density, double* out) {
  return guard([&] { write_vector(deref(density, "density").density.values(), out); });
}
sb_status sb_density_summary_json(const sb_density* density, char** out) {
  return guard([&] { deref(out, "out") = duplicate(deref(density, "density").summary.dump()); });
}

sb_status sb_estimate(const sb_grid* grid, const double* lags, size_t count, const double* prior,
                      size_t prior_count, const sb_solver_options* options, sb_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& g = deref(grid, "grid").grid;
    const sb::EstimatorProblem problem(sb::CovarianceSequence(copy(lags, count, "lags")),
                                       sb::TrigPolynomial{copy(prior, prior_count, "prior")}, g);
    const auto solved = sb::solve_dual(problem, solver_options(options));
    json summary = {{"kind", "rational"},
                    {"numerator", solved.numerator.coeffs},
                    {"denominator", solved.denominator.coeffs},
                    {"diagnostics", diagnostics_json(solved.diagnostics)}};
    o = new sb_density{solved.on(g), std::move(summary)};
  });
}

sb_status sb_maxent(const sb_grid* grid, const double* lags, size_t count,
                    const sb_solver_options* options, sb_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& g = deref(grid, "grid").grid;
    const auto solved =
        sb::solve_maxent(sb::CovarianceSequence(copy(lags, count, "lags")), g, solver_options(options));
    json summary = {{"kind", "maxent"},
                    {"lambdas", solved.lambdas},
                    {"diagnostics", diagnostics_json(solved.diagnostics)}};
    o = new sb_density{solved.on(g), std::move(summary)};
  });
}

sb_status sb_maxent_box(const sb_grid* grid, const double* lower, const double* upper,
                        size_t count, const sb_solver_options* options, sb_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& g = deref(grid, "grid").grid;
    const auto solved = sb::solve_maxent_box(box_from(lower, upper, count), g,
                                             solver_options(options));
    json summary = {{"kind", "maxent_box"},
                    {"lambdas", solved.density.lambdas},
                    {"lags", solved.lags},
                    {"entropy", solved.entropy},
                    {"certified", solved.certified},
                    {"evaluations", solved.evaluations},
                    {"diagnostics", diagnostics_json(solved.density.diagnostics)}};
    o = new sb_density{solved.density.on(g), std::move(summary)};
  });
}

sb_status sb_compute_lags(const sb_density* density, size_t order, double* out) {
  return guard([&] { write_vector(sb::compute_lags(deref(density, "density").density, order), out); });
}
sb_status sb_cepstrum(const sb_density* density, size_t order, double* out) {
  return guard(
      [&] { write_vector(sb::cepstral_coeffs(deref(density, "density").density, order), out); });
}
sb_status sb_entropy(const sb_density* density, double* out) {
  return guard([&] { deref(out, "out") = sb::entropy(deref(density, "density").density); });
}
sb_status sb_kl_divergence(const sb_density* p, const sb_density* q, double* out) {
  return guard([&] {
    deref(out, "out") = sb::kl_divergence(deref(p, "p").density, deref(q, "q").density);
  });
}
sb_status sb_tv_distance(const sb_density* p, const sb_density* q, double* out) {
  return guard([&] {
    deref(out, "out") = sb::tv_distance(deref(p, "p").density, deref(q, "q").density);
  });
}
sb_status sb_toeplitz_positive_definite(const double* lags, size_t count, int* out) {
  return guard([&] {
    deref(out, "out") = sb::toeplitz_positive_definite(view(lags, count, "lags")) ? 1 : 0;
  });
}
sb_status sb_tv_from_kl(double kl, double* out) {
  return guard([&] { deref(out, "out") = sb::tv_from_kl(kl); });
}

sb_status sb_model_spectrum(const char* model_json, const sb_grid* grid, sb_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto model = model_from(model_json);
    model.validate();
    o = new sb_density{model.spectral_density(deref(grid, "grid").grid),
                       {{"kind", "model"}, {"model", model.id()}}};
  });
}
sb_status sb_model_autocovariance(const char* model_json, size_t order, double* out) {
  return guard([&] { write_vector(model_from(model_json).autocovariance(order), out); });
}
sb_status sb_simulate(const char* model_json, size_t length, uint64_t seed, double* out) {
  return guard([&] { write_vector(sb::simulate(model_from(model_json), length, seed).values, out); });
}
sb_status sb_model_id(const char* model_json, char** out) {
  return guard([&] { deref(out, "out") = duplicate(model_from(model_json).id()); });
}
sb_status sb_estimate_lags(const double* series, size_t length, size_t order, double* out) {
  return guard([&] { write_vector(sb::estimate_lags(view(series, length, "series"), order), out); });
}

sb_status sb_assessment_marginal(const char* model_json, const double* lower, const double* upper,
                                 size_t count, size_t n_samples, sb_assessment** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new sb_assessment{
        sb::marginal_assessment(model_from(model_json), box_from(lower, upper, count), n_samples)};
  });
}
sb_status sb_assessment_moment(const double* series, size_t length, const double* lower,
                               const double* upper, size_t count, sb_assessment** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new sb_assessment{
        sb::moment_assessment(view(series, length, "series"), box_from(lower, upper, count))};
  });
}
sb_status sb_assessment_monte_carlo(const char* model_json, const double* lower,
                                    const double* upper, size_t count, size_t n_samples,
                                    size_t trials, uint64_t seed, sb_assessment** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new sb_assessment{sb::monte_carlo_interval_probability(
        model_from(model_json), box_from(lower, upper, count), n_samples, trials, seed)};
  });
}
void sb_assessment_destroy(sb_assessment* assessment) { delete assessment; }
double sb_assessment_product(const sb_assessment* assessment) {
  return assessment ? assessment->assessment.product : 0.0;
}
sb_status sb_assessment_json(const sb_assessment* assessment, char** out) {
  return guard([&] {
    deref(out, "out") =
        duplicate(sb::assessment_to_json(deref(assessment, "assessment").assessment).dump());
  });
}

sb_status sb_noise_bound(const sb_grid* grid, const double* clean, const double* noise,
                         size_t count, const double* prior, size_t prior_count,
                         const sb_solver_options* options, sb_report** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto noise_lags = copy(noise, count, "noise");
    o = new sb_report{sb::noise_tv_upper_bound(
        sb::CovarianceSequence(copy(clean, count, "clean")), noise_lags,
        sb::TrigPolynomial{copy(prior, prior_count, "prior")}, deref(grid, "grid").grid,
        solver_options(options))};
  });
}
sb_status sb_finite_sample_bound(const sb_grid* grid, const double* lower, const double* upper,
                                 const double* clean, size_t count,
                                 const sb_assessment* assessment,
                                 const sb_solver_options* options, sb_report** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new sb_report{sb::finite_sample_tv_upper_bound(
        box_from(lower, upper, count), sb::CovarianceSequence(copy(clean, count, "clean")),
        deref(grid, "grid").grid, solver_options(options),
        deref(assessment, "assessment").assessment)};
  });
}
sb_status sb_kl_lower_bound(const sb_density* true_density, const double* lower,
                            const double* upper, size_t count, const sb_assessment* assessment,
                            sb_report** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    std::optional<sb::ProbabilityAssessment> a;
    if (assessment != nullptr) a = assessment->assessment;
    o = new sb_report{sb::kl_lower_bound(deref(true_density, "true_density").density,
                                         box_from(lower, upper, count), a)};
  });
}
void sb_report_destroy(sb_report* report) { delete report; }
double sb_report_bound_value(const sb_report* report) {
  return report ? report->report.bound_value : 0.0;
}
double sb_report_probability_level(const sb_report* report) {
  return report ? report->report.probability_level : 0.0;
}
sb_status sb_report_json(const sb_report* report, char** out) {
  return guard([&] { deref(out, "out") = duplicate(deref(report, "report").report.to_json().dump(2)); });
}

sb_status sb_validate(const char* scenario_json, char** document, char** trials_csv,
                      int* breach) {
  return guard([&] {
    auto& doc_out = deref(document, "document");
    const auto scenario =
        sb::ValidationScenario::from_json(json::parse(text(scenario_json, "scenario_json")));
    const auto result = sb::run_validation(scenario);
    std::string csv = "index,in_box,evaluated,empirical,bound,violation,error\n";
    for (const auto& t : result.trials) {
      csv += std::to_string(t.index) + "," + (t.in_box ? "1" : "0") + "," +
             (t.evaluated ? "1" : "0") + "," + format_double(t.empirical) + "," +
             format_double(t.bound) + "," + (t.violation ? "1" : "0") + "," + t.error + "\n";
    }
    char* doc = duplicate(result.document.dump(2) + "\n");
    if (trials_csv != nullptr) {
      try {
        *trials_csv = duplicate(csv);
      } catch (...) {
        std::free(doc);
        throw;
      }
    }
    doc_out = doc;
    if (breach != nullptr) *breach = result.breach ? 1 : 0;
  });
}

sb_status sb_basis_create(const int* exponents, size_t count, size_t dimension, sb_basis** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto e = view(exponents, count * dimension, "exponents");
    std::vector<std::vector<int>> rows(count, std::vector<int>(dimension));
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t i = 0; i < dimension; ++i) {
        rows[k][i] = e[k * dimension + i];
        if (rows[k][i] > static_cast<int>(sb::kMaxMultiOrder)) {
          throw sb::Error(sb::ErrorCode::kInvalidArgument,
                          "exponents are capped at " + std::to_string(sb::kMaxMultiOrder));
        }
      }
    }
    o = new sb_basis{sb::MultiBasis(std::move(rows))};
  });
}
void sb_basis_destroy(sb_basis* basis) { delete basis; }
size_t sb_basis_size(const sb_basis* basis) { return basis ? basis->basis.size() : 0; }

sb_status sb_multi_grid_create(size_t dimension, size_t axis_size, sb_multi_grid** out) {
  return guard([&] {
    if (axis_size > sb::kMaxAxisGridSize) {
      throw sb::Error(sb::ErrorCode::kInvalidArgument,
                      "axis grid size is capped at " + std::to_string(sb::kMaxAxisGridSize));
    }
    deref(out, "out") = new sb_multi_grid{sb::ProductGrid::square(dimension, axis_size)};
  });
}
void sb_multi_grid_destroy(sb_multi_grid* grid) { delete grid; }
size_t sb_multi_grid_size(const sb_multi_grid* grid) { return grid ? grid->grid.size() : 0; }
sb_status sb_multi_grid_nodes(const sb_multi_grid* grid, double* out) {
  return guard([&] {
    const auto& g = deref(grid, "grid").grid;
    if (out == nullptr) throw NullArgument("out");
    const std::size_t d = g.dimension();
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto idx = g.unflatten(j);
      for (std::size_t i = 0; i < d; ++i) out[j * d + i] = g.axis(i).node(idx[i]);
    }
  });
}

sb_status sb_multi_density_create(const sb_multi_grid* grid, const double* values, size_t count,
                                  sb_multi_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    o = new sb_multi_density{
        sb::MultiGridDensity(deref(grid, "grid").grid, copy(values, count, "values"))};
  });
}
void sb_multi_density_destroy(sb_multi_density* density) { delete density; }
size_t sb_multi_density_size(const sb_multi_density* density) {
  return density ? density->density.size() : 0;
}
sb_status sb_multi_density_values(const sb_multi_density* density, double* out) {
  return guard([&] { write_vector(deref(density, "density").density.values(), out); });
}
sb_status sb_multi_density_summary_json(const sb_multi_density* density, char** out) {
  return guard([&] { deref(out, "out") = duplicate(deref(density, "density").summary.dump()); });
}

sb_status sb_multi_moments(const sb_multi_density* density, const sb_basis* basis, double* out) {
  return guard([&] {
    write_vector(sb::multi_compute_moments(deref(density, "density").density,
                                           deref(basis, "basis").basis),
                 out);
  });
}

sb_status sb_multi_estimate(const sb_multi_grid* grid, const sb_basis* basis,
                            const double* moments, const sb_basis* prior_basis,
                            const double* prior, const sb_solver_options* options,
                            sb_multi_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& g = deref(grid, "grid").grid;
    const auto& b = deref(basis, "basis").basis;
    const auto solved = sb::multi_solve_dual(copy(moments, b.size(), "moments"),
                                             prior_from(prior_basis, prior, g.dimension()), b, g,
                                             solver_options(options));
    json summary = {{"kind", "rational"},
                    {"basis", b.exponents()},
                    {"numerator_basis", solved.numerator.basis.exponents()},
                    {"numerator", solved.numerator.coeffs},
                    {"denominator", solved.denominator.coeffs},
                    {"diagnostics", diagnostics_json(solved.diagnostics)}};
    o = new sb_multi_density{solved.on(g), std::move(summary)};
  });
}

sb_status sb_multi_maxent(const sb_multi_grid* grid, const sb_basis* basis,
                          const double* moments, const sb_solver_options* options,
                          sb_multi_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& g = deref(grid, "grid").grid;
    const auto& b = deref(basis, "basis").basis;
    const auto solved =
        sb::multi_solve_maxent(copy(moments, b.size(), "moments"), b, g, solver_options(options));
    json summary = {{"kind", "maxent"},
                    {"basis", b.exponents()},
                    {"lambdas", solved.lambdas},
                    {"diagnostics", diagnostics_json(solved.diagnostics)}};
    o = new sb_multi_density{solved.on(g), std::move(summary)};
  });
}

sb_status sb_multi_entropy(const sb_multi_density* density, double* out) {
  return guard([&] { deref(out, "out") = sb::entropy(deref(density, "density").density); });
}
sb_status sb_multi_kl_divergence(const sb_multi_density* p, const sb_multi_density* q,
                                 double* out) {
  return guard([&] {
    deref(out, "out") = sb::kl_divergence(deref(p, "p").density, deref(q, "q").density);
  });
}
sb_status sb_multi_tv_distance(const sb_multi_density* p, const sb_multi_density* q,
                               double* out) {
  return guard([&] {
    deref(out, "out") = sb::tv_distance(deref(p, "p").density, deref(q, "q").density);
  });
}

sb_status sb_multi_model_spectrum(const char* models_json, const sb_multi_grid* grid,
                                  sb_multi_density** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto models = models_from(models_json);
    json ids = json::array();
    for (const auto& m : models) ids.push_back(m.id());
    o = new sb_multi_density{sb::independent_spectrum(models, deref(grid, "grid").grid),
                             {{"kind", "model"}, {"models", ids}}};
  });
}

sb_status sb_multi_simulate(const char* models_json, size_t length, uint64_t seed, double* out) {
  return guard([&] {
    const auto series = sb::simulate_independent(models_from(models_json), length, seed);
    if (out == nullptr) throw NullArgument("out");
    const std::size_t d = series.dimension();
    for (std::size_t t = 0; t < length; ++t) {
      for (std::size_t i = 0; i < d; ++i) out[t * d + i] = series.columns[i][t];
    }
  });
}

sb_status sb_multi_estimate_moments(const double* series, size_t length, size_t dimension,
                                    const sb_basis* basis, double* out) {
  return guard([&] {
    write_vector(sb::multi_estimate_moments(series_from(series, length, dimension),
                                            deref(basis, "basis").basis),
                 out);
  });
}

sb_status sb_multi_assessment_moment(const double* series, size_t length, size_t dimension,
                                     const sb_basis* basis, const double* lower,
                                     const double* upper, sb_assessment** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& b = deref(basis, "basis").basis;
    o = new sb_assessment{sb::multi_moment_assessment(series_from(series, length, dimension), b,
                                                      box_from(lower, upper, b.size()))};
  });
}

sb_status sb_multi_assessment_monte_carlo(const char* models_json, const sb_basis* basis,
                                          const double* lower, const double* upper,
                                          size_t n_samples, size_t trials, uint64_t seed,
                                          sb_assessment** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& b = deref(basis, "basis").basis;
    o = new sb_assessment{sb::multi_monte_carlo_interval_probability(
        models_from(models_json), b, box_from(lower, upper, b.size()), n_samples, trials, seed)};
  });
}

sb_status sb_multi_noise_bound(const sb_multi_grid* grid, const sb_basis* basis,
                               const double* clean, const double* noise,
                               const sb_basis* prior_basis, const double* prior,
                               const sb_solver_options* options, sb_report** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& g = deref(grid, "grid").grid;
    const auto& b = deref(basis, "basis").basis;
    o = new sb_report{sb::multi_noise_tv_bound(
        copy(clean, b.size(), "clean"), copy(noise, b.size(), "noise"),
        prior_from(prior_basis, prior, g.dimension()), b, g, solver_options(options))};
  });
}

sb_status sb_multi_finite_sample_bound(const sb_multi_grid* grid, const sb_basis* basis,
                                       const double* lower, const double* upper,
                                       const double* clean, const sb_assessment* assessment,
                                       const sb_solver_options* options, sb_report** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& b = deref(basis, "basis").basis;
    o = new sb_report{sb::multi_finite_sample_bound(
        box_from(lower, upper, b.size()), copy(clean, b.size(), "clean"), b,
        deref(grid, "grid").grid, solver_options(options),
        deref(assessment, "assessment").assessment)};
  });
}

sb_status sb_multi_kl_lower_bound(const sb_multi_density* true_density, const sb_basis* basis,
                                  const double* lower, const double* upper,
                                  const sb_assessment* assessment, sb_report** out) {
  return guard([&] {
    auto& o = deref(out, "out");
    const auto& b = deref(basis, "basis").basis;
    std::optional<sb::ProbabilityAssessment> a;
    if (assessment != nullptr) a = assessment->assessment;
    o = new sb_report{sb::multi_kl_lower_bound(deref(true_density, "true_density").density,
                                               box_from(lower, upper, b.size()), b, a)};
  });
}

}  // extern "C"
