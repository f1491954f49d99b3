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

// specbound command-line tool. Every computation goes through the C API.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capi_handle.hpp"
#include "io.hpp"
#include "json.hpp"
#include "specbound/specbound.h"

namespace specbound::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr std::size_t kMaxGridSize = 1 << 16;
constexpr std::size_t kMaxAxisGridSize = 256;
constexpr std::size_t kMaxMultiOrder = 8;
constexpr std::size_t kMaxDimension = 2;

struct Flags {
  std::string config;
  std::string lags;
  std::string input;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
  bool json_errors = false;
};

// ---------------------------------------------------------------------------
// Strict config access.

void allow_keys(const json& object, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!object.is_object()) config_error(where + ": expected a JSON object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) config_error(where + ": unknown key \"" + item.key() + "\"");
  }
}

std::size_t get_size(const json& object, const char* key, std::size_t fallback,
                     const std::string& where) {
  if (!object.contains(key)) return fallback;
  const json& v = object.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    config_error(where + ": \"" + key + "\" must be a nonnegative integer");
  }
  return object.at(key).get<std::size_t>();
}

double get_number(const json& object, const char* key, const std::string& where) {
  if (!object.contains(key) || !object.at(key).is_number()) {
    config_error(where + ": \"" + key + "\" must be a number");
  }
  return object.at(key).get<double>();
}

std::vector<double> get_list(const json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) config_error(where + ": expected a nonempty array");
  std::vector<double> out;
  for (const auto& v : value) {
    if (!v.is_number()) config_error(where + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string get_string(const json& object, const char* key, const std::string& fallback,
                       const std::string& where) {
  if (!object.contains(key)) return fallback;
  if (!object.at(key).is_string()) config_error(where + ": \"" + key + "\" must be a string");
  return object.at(key).get<std::string>();
}

json load_config(const Flags& flags) {
  try {
    const json config = json::parse(read_text(flags.config));
    if (!config.is_object()) config_error("config must be a JSON object");
    return config;
  } catch (const json::parse_error& e) {
    config_error(flags.config + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Settings shared by the density-producing commands.

struct Common {
  std::size_t dimension = 1;
  std::size_t grid_size = 4096;
  std::size_t axis_grid_size = 128;
  std::vector<int> exponents;  // count x dimension, d = 2 only
  std::size_t basis_count = 0;
  sb_solver_options solver{};
};

const std::initializer_list<const char*> kCommonKeys = {"dimension", "grid_size",
                                                        "axis_grid_size", "basis", "solver"};

std::vector<int> parse_basis(const json& value, std::size_t dimension, std::size_t& count) {
  std::vector<std::vector<int>> rows;
  if (value.is_object()) {
    allow_keys(value, {"type", "order"}, "basis");
    const std::string type = get_string(value, "type", "", "basis");
    const std::size_t order = get_size(value, "order", 1, "basis");
    if (order > kMaxMultiOrder) config_error("basis: order is capped at 8");
    rows.push_back(std::vector<int>(dimension, 0));
    if (type == "axial") {
      for (std::size_t i = 0; i < dimension; ++i) {
        for (std::size_t k = 1; k <= order; ++k) {
          std::vector<int> v(dimension, 0);
          v[i] = static_cast<int>(k);
          rows.push_back(v);
        }
      }
    } else if (type == "tensor") {
      rows.clear();
      std::vector<int> v(dimension, 0);
      while (true) {
        rows.push_back(v);
        std::size_t i = dimension;
        while (i > 0 && v[i - 1] == static_cast<int>(order)) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
      }
    } else {
      config_error("basis: \"type\" must be axial or tensor");
    }
  } else if (value.is_array()) {
    for (const auto& row : value) {
      if (!row.is_array() || row.size() != dimension) {
        config_error("basis: every exponent vector needs " + std::to_string(dimension) +
                     " entries");
      }
      std::vector<int> v;
      for (const auto& a : row) {
        if (!a.is_number_unsigned()) config_error("basis: exponents must be integers >= 0");
        if (a.get<std::size_t>() > kMaxMultiOrder) config_error("basis: exponents are capped at 8");
        v.push_back(a.get<int>());
      }
      rows.push_back(v);
    }
  } else {
    config_error("basis: expected an array of exponent vectors or {type, order}");
  }
  if (rows.empty()) config_error("basis: no entries");
  count = rows.size();
  std::vector<int> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

Common parse_common(const json& config) {
  Common c;
  sb_solver_options_default(&c.solver);
  c.dimension = get_size(config, "dimension", 1, "config");
  if (c.dimension < 1 || c.dimension > kMaxDimension) config_error("config: dimension must be 1 or 2");
  c.grid_size = get_size(config, "grid_size", c.grid_size, "config");
  if (c.grid_size < 4 || c.grid_size > kMaxGridSize) config_error("config: grid_size must be 4..65536");
  c.axis_grid_size = get_size(config, "axis_grid_size", c.axis_grid_size, "config");
  if (c.axis_grid_size < 4 || c.axis_grid_size > kMaxAxisGridSize) {
    config_error("config: axis_grid_size must be 4..256");
  }
  if (c.dimension == 2) {
    if (!config.contains("basis")) config_error("config: dimension 2 needs a \"basis\"");
    c.exponents = parse_basis(config.at("basis"), c.dimension, c.basis_count);
  } else if (config.contains("basis")) {
    config_error("config: \"basis\" applies to dimension 2 only");
  }
  if (config.contains("solver")) {
    const json& s = config.at("solver");
    allow_keys(s, {"tolerance", "max_iterations", "step_tol"}, "solver");
    if (s.contains("tolerance")) c.solver.tolerance = get_number(s, "tolerance", "solver");
    if (s.contains("max_iterations")) {
      const auto it = get_size(s, "max_iterations", 200, "solver");
      if (it < 1 || it > 100000) config_error("solver: max_iterations must be 1..100000");
      c.solver.max_iterations = static_cast<int>(it);
    }
    if (s.contains("step_tol")) c.solver.step_tol = get_number(s, "step_tol", "solver");
    if (!(c.solver.tolerance > 0.0) || !(c.solver.step_tol > 0.0)) {
      config_error("solver: tolerances must be positive");
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Handles and small wrappers.

Grid make_grid(std::size_t size) {
  sb_grid* g = nullptr;
  check(sb_grid_create(size, &g));
  return Grid(g);
}

MultiGrid make_multi_grid(const Common& c) {
  sb_multi_grid* g = nullptr;
  check(sb_multi_grid_create(c.dimension, c.axis_grid_size, &g));
  return MultiGrid(g);
}

Basis make_basis(const std::vector<int>& exponents, std::size_t count, std::size_t dimension) {
  sb_basis* b = nullptr;
  check(sb_basis_create(exponents.data(), count, dimension, &b));
  return Basis(b);
}

std::string model_text(const json& model) { return model.dump(); }

std::vector<double> model_lags(const json& model, std::size_t order) {
  std::vector<double> out(order + 1);
  check(sb_model_autocovariance(model_text(model).c_str(), order, out.data()));
  return out;
}

std::vector<double> sample_lags(const std::vector<double>& series, std::size_t order) {
  std::vector<double> out(order + 1);
  check(sb_estimate_lags(series.data(), series.size(), order, out.data()));
  return out;
}

std::vector<double> row_major(const std::vector<std::vector<double>>& columns) {
  std::vector<double> out;
  const std::size_t rows = columns.front().size();
  out.reserve(rows * columns.size());
  for (std::size_t t = 0; t < rows; ++t) {
    for (const auto& c : columns) out.push_back(c[t]);
  }
  return out;
}

std::vector<std::vector<double>> read_series(const Flags& flags, std::size_t dimension) {
  auto columns = read_numeric_csv(flags.input);
  if (columns.size() != dimension) {
    config_error(flags.input + ": expected " + std::to_string(dimension) + " column(s), found " +
                 std::to_string(columns.size()));
  }
  return columns;
}

std::vector<double> multi_sample_moments(const std::vector<std::vector<double>>& columns,
                                         const sb_basis* basis, std::size_t count) {
  const auto flat = row_major(columns);
  std::vector<double> out(count);
  check(sb_multi_estimate_moments(flat.data(), columns.front().size(), columns.size(), basis,
                                  out.data()));
  return out;
}

std::vector<double> multi_model_moments(const json& models, const sb_multi_grid* grid,
                                        const sb_basis* basis, std::size_t count) {
  sb_multi_density* d = nullptr;
  check(sb_multi_model_spectrum(model_text(models).c_str(), grid, &d));
  MultiDensity density(d);
  std::vector<double> out(count);
  check(sb_multi_moments(density.get(), basis, out.data()));
  return out;
}

std::vector<std::string> density_comments(const std::string& what, const Common& c) {
  const std::size_t m = c.dimension == 1 ? c.grid_size : c.axis_grid_size;
  std::vector<std::string> out = {
      "specbound " + what,
      "grid: theta_j = -pi + 2*pi*j/M with M = " + std::to_string(m) +
          (c.dimension == 1 ? "" : " per axis, last axis fastest") +
          "; quadrature weight 2*pi/M per axis",
  };
  if (c.dimension == 1) {
    out.push_back("normalization: r_k = (1/(2*pi)) * integral cos(k*theta) phi(theta) dtheta");
  } else {
    out.push_back(
        "normalization: r_k = (1/(2*pi)^2) * integral prod_i cos(alpha_ki*theta_i) phi dtheta");
  }
  return out;
}

void write_density(const fs::path& path, const std::string& what, const Common& c,
                   const sb_density* density) {
  const std::size_t m = sb_density_size(density);
  std::vector<double> theta(m);
  std::vector<double> phi(m);
  check(sb_grid_nodes(make_grid(m).get(), theta.data()));
  check(sb_density_values(density, phi.data()));
  write_csv(path, density_comments(what, c), {"theta", "phi"}, {theta, phi});
}

void write_multi_density(const fs::path& path, const std::string& what, const Common& c,
                         const sb_multi_grid* grid, const sb_multi_density* density) {
  const std::size_t m = sb_multi_density_size(density);
  std::vector<double> nodes(m * c.dimension);
  std::vector<double> phi(m);
  check(sb_multi_grid_nodes(grid, nodes.data()));
  check(sb_multi_density_values(density, phi.data()));
  std::vector<std::vector<double>> columns(c.dimension + 1, std::vector<double>(m));
  std::vector<std::string> header;
  for (std::size_t i = 0; i < c.dimension; ++i) {
    header.push_back("theta" + std::to_string(i + 1));
    for (std::size_t j = 0; j < m; ++j) columns[i][j] = nodes[j * c.dimension + i];
  }
  header.push_back("phi");
  columns[c.dimension] = phi;
  write_csv(path, density_comments(what, c), header, columns);
}

json parse_json_text(const std::string& text) { return json::parse(text); }

// ---------------------------------------------------------------------------
// estimate / maxent

// Lags (d = 1) or moments (d = 2) from --lags, --input or the config.
std::vector<double> input_moments(const Flags& flags, const json& config, const Common& c,
                                  const sb_basis* basis, json& provenance) {
  const char* key = c.dimension == 1 ? "lags" : "moments";
  if (!flags.lags.empty()) {
    provenance = "--lags";
    return parse_number_list(flags.lags);
  }
  if (!flags.input.empty()) {
    provenance = flags.input;
    const auto columns = read_series(flags, c.dimension);
    if (c.dimension == 2) return multi_sample_moments(columns, basis, c.basis_count);
    if (!config.contains("order")) config_error("config: --input needs \"order\"");
    return sample_lags(columns.front(), get_size(config, "order", 0, "config"));
  }
  if (!config.contains(key)) {
    config_error(std::string("no input: give --lags, --input or \"") + key + "\"");
  }
  provenance = "config";
  return get_list(config.at(key), key);
}

int run_density_command(const Flags& flags, bool maxent) {
  const json config = load_config(flags);
  if (maxent) {
    allow_keys(config,
               {"dimension", "grid_size", "axis_grid_size", "basis", "solver", "lags", "moments",
                "order", "box"},
               "config");
  } else {
    allow_keys(config,
               {"dimension", "grid_size", "axis_grid_size", "basis", "solver", "lags", "moments",
                "order", "prior"},
               "config");
  }
  const Common c = parse_common(config);
  const fs::path out_dir = flags.out;
  const std::string command = maxent ? "maxent" : "estimate";
  json summary = {{"command", command}, {"dimension", c.dimension}};

  if (c.dimension == 1) {
    json provenance;
    const auto lags = input_moments(flags, config, c, nullptr, provenance);
    if (config.contains("moments")) config_error("config: \"moments\" applies to dimension 2");
    std::vector<double> prior{1.0};
    if (config.contains("prior")) prior = get_list(config.at("prior"), "prior");
    const auto grid = make_grid(c.grid_size);
    sb_density* raw = nullptr;
    if (maxent && config.contains("box")) {
      const json& box = config.at("box");
      allow_keys(box, {"delta", "lower", "upper"}, "box");
      std::vector<double> lower;
      std::vector<double> upper;
      if (box.contains("delta")) {
        const double delta = get_number(box, "delta", "box");
        if (!(delta >= 0.0)) config_error("box: delta must be >= 0");
        for (double r : lags) {
          lower.push_back(r - delta * lags[0]);
          upper.push_back(r + delta * lags[0]);
        }
      } else {
        lower = get_list(box.at("lower"), "box.lower");
        upper = get_list(box.at("upper"), "box.upper");
        if (lower.size() != upper.size()) config_error("box: lower and upper differ in length");
      }
      check(sb_maxent_box(grid.get(), lower.data(), upper.data(), lower.size(), &c.solver, &raw));
      summary["box"] = {{"lower", lower}, {"upper", upper}};
    } else if (maxent) {
      check(sb_maxent(grid.get(), lags.data(), lags.size(), &c.solver, &raw));
    } else {
      check(sb_estimate(grid.get(), lags.data(), lags.size(), prior.data(), prior.size(),
                        &c.solver, &raw));
      summary["prior"] = prior;
    }
    Density density(raw);
    char* text = nullptr;
    check(sb_density_summary_json(density.get(), &text));
    summary["density"] = parse_json_text(take(text));
    double h = 0.0;
    check(sb_entropy(density.get(), &h));
    std::vector<double> matched(lags.size());
    check(sb_compute_lags(density.get(), lags.size() - 1, matched.data()));
    summary["lags"] = lags;
    summary["lags_source"] = provenance;
    summary["density_lags"] = matched;
    summary["entropy"] = h;
    summary["grid_size"] = c.grid_size;
    write_density(out_dir / "density.csv", command + " density", c, density.get());
  } else {
    if (config.contains("lags")) config_error("config: \"lags\" applies to dimension 1");
    if (config.contains("box")) config_error("config: box maxent is available in dimension 1");
    const auto basis = make_basis(c.exponents, c.basis_count, c.dimension);
    const auto grid = make_multi_grid(c);
    json provenance;
    const auto moments = input_moments(flags, config, c, basis.get(), provenance);
    if (moments.size() != c.basis_count) {
      config_error("expected " + std::to_string(c.basis_count) + " moments, got " +
                   std::to_string(moments.size()));
    }
    sb_multi_density* raw = nullptr;
    if (maxent) {
      check(sb_multi_maxent(grid.get(), basis.get(), moments.data(), &c.solver, &raw));
    } else {
      Basis prior_basis;
      std::vector<double> prior_coeffs;
      if (config.contains("prior")) {
        const json& p = config.at("prior");
        allow_keys(p, {"basis", "coeffs"}, "prior");
        std::size_t count = 0;
        const auto e = parse_basis(p.at("basis"), c.dimension, count);
        prior_basis = make_basis(e, count, c.dimension);
        prior_coeffs = get_list(p.at("coeffs"), "prior.coeffs");
        if (prior_coeffs.size() != count) config_error("prior: coeffs do not match its basis");
      }
      check(sb_multi_estimate(grid.get(), basis.get(), moments.data(), prior_basis.get(),
                              prior_coeffs.data(), &c.solver, &raw));
    }
    MultiDensity density(raw);
    char* text = nullptr;
    check(sb_multi_density_summary_json(density.get(), &text));
    summary["density"] = parse_json_text(take(text));
    double h = 0.0;
    check(sb_multi_entropy(density.get(), &h));
    std::vector<double> matched(c.basis_count);
    check(sb_multi_moments(density.get(), basis.get(), matched.data()));
    summary["moments"] = moments;
    summary["moments_source"] = provenance;
    summary["density_moments"] = matched;
    summary["entropy"] = h;
    summary["axis_grid_size"] = c.axis_grid_size;
    write_multi_density(out_dir / "density.csv", command + " density", c, grid.get(),
                        density.get());
  }
  write_text(out_dir / "summary.json", summary.dump(2) + "\n");
  std::cout << "wrote " << (out_dir / "density.csv").string() << " and "
            << (out_dir / "summary.json").string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bounds

struct BoxSpec {
  std::vector<double> lower;
  std::vector<double> upper;
};

BoxSpec parse_box(const json& config, const std::vector<double>& default_centre) {
  if (!config.contains("box")) config_error("config: \"box\" is required for this kind");
  const json& box = config.at("box");
  allow_keys(box, {"delta", "lower", "upper"}, "box");
  BoxSpec out;
  if (box.contains("delta")) {
    if (box.contains("lower") || box.contains("upper")) {
      config_error("box: give either delta or lower/upper");
    }
    const double delta = get_number(box, "delta", "box");
    if (!(delta >= 0.0)) config_error("box: delta must be >= 0");
    for (double r : default_centre) {
      out.lower.push_back(r - delta * default_centre[0]);
      out.upper.push_back(r + delta * default_centre[0]);
    }
  } else {
    if (!box.contains("lower") || !box.contains("upper")) config_error("box: needs lower and upper");
    out.lower = get_list(box.at("lower"), "box.lower");
    out.upper = get_list(box.at("upper"), "box.upper");
  }
  if (out.lower.size() != default_centre.size() || out.upper.size() != default_centre.size()) {
    config_error("box: expected " + std::to_string(default_centre.size()) + " intervals");
  }
  return out;
}

struct ProbabilitySpec {
  std::string method;  // "" for none
  std::size_t samples = 0;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
};

ProbabilitySpec parse_probability(const json& config, const Flags& flags, bool required) {
  ProbabilitySpec p;
  if (config.contains("probability")) {
    const json& j = config.at("probability");
    allow_keys(j, {"method", "samples", "trials", "seed"}, "probability");
    p.method = get_string(j, "method", "", "probability");
    p.samples = get_size(j, "samples", 0, "probability");
    p.trials = get_size(j, "trials", p.trials, "probability");
    p.seed = get_size(j, "seed", p.seed, "probability");
  } else if (required) {
    p.method = flags.input.empty() ? "marginal" : "cantelli";
  }
  if (flags.seed) p.seed = *flags.seed;
  if (!p.method.empty() && p.method != "marginal" && p.method != "cantelli" &&
      p.method != "monte_carlo") {
    config_error("probability: method must be marginal, cantelli or monte_carlo");
  }
  if (p.method == "cantelli" && flags.input.empty()) {
    config_error("probability: cantelli needs a sample series (--input)");
  }
  return p;
}

int run_bounds(const Flags& flags) {
  const json config = load_config(flags);
  allow_keys(config,
             {"dimension", "grid_size", "axis_grid_size", "basis", "solver", "kind", "order",
              "prior", "clean", "noise", "truth", "box", "probability"},
             "config");
  const Common c = parse_common(config);
  const std::string kind = get_string(config, "kind", "", "config");
  if (kind != "noise" && kind != "finite_sample" && kind != "kl_lower") {
    config_error("config: \"kind\" must be noise, finite_sample or kl_lower");
  }
  const fs::path out_dir = flags.out;

  // clean / truth descriptions: {"lags"|"moments"} or {"model"|"models"}.
  auto describe = [&](const char* key) -> const json& {
    if (!config.contains(key)) config_error(std::string("config: \"") + key + "\" is required");
    const json& j = config.at(key);
    allow_keys(j, {"lags", "moments", "model", "models", "variance"}, key);
    return j;
  };

  std::vector<std::vector<double>> series;
  if (!flags.input.empty()) series = read_series(flags, c.dimension);

  sb_report* raw_report = nullptr;
  if (c.dimension == 1) {
    const auto grid = make_grid(c.grid_size);
    std::size_t order = get_size(config, "order", 0, "config");
    const bool has_order = config.contains("order");
    auto lags_of = [&](const json& j, const char* where) {
      if (j.contains("lags")) return get_list(j.at("lags"), where);
      if (j.contains("model")) {
        if (!has_order) config_error("config: a model needs \"order\"");
        return model_lags(j.at("model"), order);
      }
      config_error(std::string(where) + ": needs \"lags\" or \"model\"");
    };
    std::vector<double> clean;
    if (kind != "kl_lower") {
      clean = flags.lags.empty() ? lags_of(describe("clean"), "clean")
                                 : parse_number_list(flags.lags);
      if (!has_order) order = clean.size() - 1;
    }
    if (kind == "noise") {
      const json& n = describe("noise");
      std::vector<double> noise;
      if (n.contains("variance")) {
        noise.assign(clean.size(), 0.0);
        noise[0] = get_number(n, "variance", "noise");
      } else {
        noise = lags_of(n, "noise");
      }
      if (noise.size() != clean.size()) config_error("noise: length differs from clean lags");
      std::vector<double> prior{1.0};
      if (config.contains("prior")) prior = get_list(config.at("prior"), "prior");
      check(sb_noise_bound(grid.get(), clean.data(), noise.data(), clean.size(), prior.data(),
                           prior.size(), &c.solver, &raw_report));
    } else {
      const json* model = nullptr;
      std::vector<double> centre;
      Density truth;
      if (kind == "finite_sample") {
        const json& j = describe("clean");
        if (j.contains("model")) model = &j.at("model");
        centre = clean;
      } else {
        const json& t = describe("truth");
        if (!t.contains("model")) config_error("truth: needs \"model\"");
        if (!has_order) config_error("config: kl_lower needs \"order\"");
        model = &t.at("model");
        sb_density* d = nullptr;
        check(sb_model_spectrum(model_text(*model).c_str(), grid.get(), &d));
        truth.reset(d);
        centre = model_lags(*model, order);
      }
      if (!series.empty()) centre = sample_lags(series.front(), centre.size() - 1);
      const BoxSpec box = parse_box(config, centre);
      const auto prob = parse_probability(config, flags, kind == "finite_sample");
      Assessment assessment;
      sb_assessment* a = nullptr;
      if (prob.method == "cantelli") {
        const auto& s = series.front();
        check(sb_assessment_moment(s.data(), s.size(), box.lower.data(), box.upper.data(),
                                   box.lower.size(), &a));
      } else if (!prob.method.empty()) {
        if (model == nullptr) config_error("probability: " + prob.method + " needs a model");
        std::size_t n = prob.samples;
        if (n == 0 && !series.empty()) n = series.front().size() - 1;
        if (n == 0) config_error("probability: \"samples\" (N) is required");
        if (prob.method == "marginal") {
          check(sb_assessment_marginal(model_text(*model).c_str(), box.lower.data(),
                                       box.upper.data(), box.lower.size(), n, &a));
        } else {
          check(sb_assessment_monte_carlo(model_text(*model).c_str(), box.lower.data(),
                                          box.upper.data(), box.lower.size(), n, prob.trials,
                                          prob.seed, &a));
        }
      }
      assessment.reset(a);
      if (kind == "finite_sample") {
        check(sb_finite_sample_bound(grid.get(), box.lower.data(), box.upper.data(), clean.data(),
                                     clean.size(), assessment.get(), &c.solver, &raw_report));
      } else {
        check(sb_kl_lower_bound(truth.get(), box.lower.data(), box.upper.data(),
                                box.lower.size(), assessment.get(), &raw_report));
      }
    }
  } else {
    if (config.contains("order")) config_error("config: \"order\" applies to dimension 1");
    const auto basis = make_basis(c.exponents, c.basis_count, c.dimension);
    const auto grid = make_multi_grid(c);
    auto moments_of = [&](const json& j, const char* where) {
      if (j.contains("moments")) {
        auto m = get_list(j.at("moments"), where);
        if (m.size() != c.basis_count) config_error(std::string(where) + ": wrong moment count");
        return m;
      }
      if (j.contains("models")) return multi_model_moments(j.at("models"), grid.get(),
                                                           basis.get(), c.basis_count);
      config_error(std::string(where) + ": needs \"moments\" or \"models\"");
    };
    std::vector<double> clean;
    if (kind != "kl_lower") {
      clean = flags.lags.empty() ? moments_of(describe("clean"), "clean")
                                 : parse_number_list(flags.lags);
      if (clean.size() != c.basis_count) config_error("clean: wrong moment count");
    }
    if (kind == "noise") {
      const json& n = describe("noise");
      std::vector<double> noise;
      if (n.contains("variance")) {
        noise.assign(c.basis_count, 0.0);
        noise[0] = get_number(n, "variance", "noise");
      } else {
        noise = moments_of(n, "noise");
      }
      Basis prior_basis;
      std::vector<double> prior_coeffs;
      if (config.contains("prior")) {
        const json& p = config.at("prior");
        allow_keys(p, {"basis", "coeffs"}, "prior");
        std::size_t count = 0;
        const auto e = parse_basis(p.at("basis"), c.dimension, count);
        prior_basis = make_basis(e, count, c.dimension);
        prior_coeffs = get_list(p.at("coeffs"), "prior.coeffs");
        if (prior_coeffs.size() != count) config_error("prior: coeffs do not match its basis");
      }
      check(sb_multi_noise_bound(grid.get(), basis.get(), clean.data(), noise.data(),
                                 prior_basis.get(), prior_coeffs.data(), &c.solver,
                                 &raw_report));
    } else {
      const json* models = nullptr;
      std::vector<double> centre;
      MultiDensity truth;
      if (kind == "finite_sample") {
        const json& j = describe("clean");
        if (j.contains("models")) models = &j.at("models");
        centre = clean;
      } else {
        const json& t = describe("truth");
        if (!t.contains("models")) config_error("truth: needs \"models\"");
        models = &t.at("models");
        sb_multi_density* d = nullptr;
        check(sb_multi_model_spectrum(model_text(*models).c_str(), grid.get(), &d));
        truth.reset(d);
        centre.resize(c.basis_count);
        check(sb_multi_moments(truth.get(), basis.get(), centre.data()));
      }
      if (!series.empty()) centre = multi_sample_moments(series, basis.get(), c.basis_count);
      const BoxSpec box = parse_box(config, centre);
      auto prob = parse_probability(config, flags, false);
      if (prob.method.empty() && kind == "finite_sample") {
        prob.method = series.empty() ? "monte_carlo" : "cantelli";
      }
      if (prob.method == "marginal") {
        config_error("probability: marginal is available in dimension 1 only");
      }
      Assessment assessment;
      sb_assessment* a = nullptr;
      if (prob.method == "cantelli") {
        const auto flat = row_major(series);
        check(sb_multi_assessment_moment(flat.data(), series.front().size(), c.dimension,
                                         basis.get(), box.lower.data(), box.upper.data(), &a));
      } else if (prob.method == "monte_carlo") {
        if (models == nullptr) config_error("probability: monte_carlo needs \"models\"");
        if (prob.samples == 0) config_error("probability: \"samples\" (N) is required");
        check(sb_multi_assessment_monte_carlo(model_text(*models).c_str(), basis.get(),
                                              box.lower.data(), box.upper.data(), prob.samples,
                                              prob.trials, prob.seed, &a));
      }
      assessment.reset(a);
      if (kind == "finite_sample") {
        check(sb_multi_finite_sample_bound(grid.get(), basis.get(), box.lower.data(),
                                           box.upper.data(), clean.data(), assessment.get(),
                                           &c.solver, &raw_report));
      } else {
        check(sb_multi_kl_lower_bound(truth.get(), basis.get(), box.lower.data(),
                                      box.upper.data(), assessment.get(), &raw_report));
      }
    }
  }
  Report report(raw_report);
  char* text = nullptr;
  check(sb_report_json(report.get(), &text));
  write_text(out_dir / "report.json", take(text) + "\n");
  std::cout << "bound_value " << format_double(sb_report_bound_value(report.get())) << "\n"
            << "probability_level "
            << format_double(sb_report_probability_level(report.get())) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// simulate / validate

int run_simulate(const Flags& flags) {
  const json config = load_config(flags);
  allow_keys(config, {"model", "models", "length", "seed"}, "config");
  if (!flags.lags.empty() || !flags.input.empty()) {
    config_error("simulate takes neither --lags nor --input");
  }
  const std::size_t length = get_size(config, "length", 0, "config");
  if (length < 2) config_error("config: \"length\" must be >= 2");
  if (length > 100000000) config_error("config: \"length\" is capped at 1e8");
  std::uint64_t seed = get_size(config, "seed", 0, "config");
  if (flags.seed) seed = *flags.seed;

  std::vector<std::vector<double>> columns;
  std::vector<std::string> ids;
  std::vector<std::string> header;
  if (config.contains("model") == config.contains("models")) {
    config_error("config: give exactly one of \"model\" and \"models\"");
  }
  if (config.contains("model")) {
    const std::string m = model_text(config.at("model"));
    columns.emplace_back(length);
    check(sb_simulate(m.c_str(), length, seed, columns[0].data()));
    char* id = nullptr;
    check(sb_model_id(m.c_str(), &id));
    ids.push_back(take(id));
    header = {"y"};
  } else {
    const json& models = config.at("models");
    if (!models.is_array() || models.empty() || models.size() > kMaxDimension) {
      config_error("config: \"models\" must list 1 or 2 axis models");
    }
    const std::size_t d = models.size();
    std::vector<double> flat(length * d);
    check(sb_multi_simulate(model_text(models).c_str(), length, seed, flat.data()));
    columns.assign(d, std::vector<double>(length));
    for (std::size_t t = 0; t < length; ++t) {
      for (std::size_t i = 0; i < d; ++i) columns[i][t] = flat[t * d + i];
    }
    for (std::size_t i = 0; i < d; ++i) {
      char* id = nullptr;
      check(sb_model_id(model_text(models[i]).c_str(), &id));
      ids.push_back(take(id));
      header.push_back("y" + std::to_string(i + 1));
    }
  }
  std::string model_ids;
  for (std::size_t i = 0; i < ids.size(); ++i) model_ids += (i ? ";" : "") + ids[i];
  const fs::path path = fs::path(flags.out) / "series.csv";
  write_csv(path, {"seed=" + std::to_string(seed) + ", model=" + model_ids}, header, columns);
  std::cout << "wrote " << path.string() << "\n";
  return 0;
}

int run_validate(const Flags& flags) {
  json config = load_config(flags);
  if (!flags.lags.empty() || !flags.input.empty()) {
    config_error("validate takes neither --lags nor --input");
  }
  if (flags.seed) config["seed"] = *flags.seed;
  char* document = nullptr;
  char* trials = nullptr;
  int breach = 0;
  check(sb_validate(config.dump().c_str(), &document, &trials, &breach));
  const std::string doc = take(document);
  const std::string csv = take(trials);
  const fs::path out_dir = flags.out;
  write_text(out_dir / "validation.json", doc);
  write_text(out_dir / "trials.csv", csv);
  const json parsed = json::parse(doc);
  std::cout << "violations " << parsed.at("violations").get<std::size_t>() << " of "
            << parsed.at("trials").at("evaluated").get<std::size_t>() << " evaluated trials ("
            << "allowance " << format_double(parsed.at("allowance").get<double>()) << ")\n";
  if (breach) {
    std::cerr << "specbound: violation rate exceeds the allowance\n";
    return 4;
  }
  return 0;
}

int exit_code_for(sb_status status) {
  if (status == SB_OUT_OF_MEMORY || status == SB_INTERNAL) return 1;
  return sb_status_is_solver_failure(status) ? 3 : 2;
}

int report_failure(const Flags& flags, sb_status status, const std::string& message) {
  const int code = exit_code_for(status);
  if (flags.json_errors) {
    const json error = {{"error",
                         {{"code", sb_status_name(status)},
                          {"status", static_cast<int>(status)},
                          {"exit_code", code},
                          {"message", message}}}};
    std::cerr << error.dump() << "\n";
  } else {
    std::cerr << "specbound: " << sb_status_name(status) << ": " << message << "\n";
  }
  return code;
}

}  // namespace
}  // namespace specbound::cli

int main(int argc, char** argv) {
  using namespace specbound::cli;
  CLI::App app{"Spectral density estimation with maximum-entropy error bounds"};
  app.set_version_flag("--version", std::string(sb_version()));
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json-errors", flags.json_errors, "Report failures as JSON on stderr");

  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const Flags&);
  };
  const Entry entries[] = {
      {"estimate", "Fit the rational covariance-extension estimate P/Q",
       [](const Flags& f) { return run_density_command(f, false); }},
      {"maxent", "Solve the maximum-entropy problem (optionally over a lag box)",
       [](const Flags& f) { return run_density_command(f, true); }},
      {"bounds", "Compute a noise, finite-sample or KL bound report", run_bounds},
      {"simulate", "Simulate a stationary process to CSV", run_simulate},
      {"validate", "Run a Monte Carlo validation scenario", run_validate},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> commands;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--config", flags.config, "JSON config file")->required();
    sub->add_option("--lags", flags.lags, "Inline lags, e.g. \"1,0.5\"");
    sub->add_option("--input", flags.input, "CSV sample series");
    sub->add_option("--out", flags.out, "Output directory")->capture_default_str();
    sub->add_option("--seed", flags.seed, "Seed override");
    sub->add_flag("--json-errors", flags.json_errors, "Report failures as JSON on stderr");
    commands.emplace_back(sub, &e);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_failure(flags, SB_INVALID_ARGUMENT, e.what());
  }

  for (const auto& [sub, entry] : commands) {
    if (!sub->parsed()) continue;
    try {
      return entry->run(flags);
    } catch (const Failure& f) {
      return report_failure(flags, f.status(), f.what());
    } catch (const nlohmann::json::exception& e) {
      return report_failure(flags, SB_INVALID_ARGUMENT, std::string("config: ") + e.what());
    } catch (const std::filesystem::filesystem_error& e) {
      return report_failure(flags, SB_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
      return report_failure(flags, SB_INTERNAL, e.what());
    }
  }
  return 2;
}
