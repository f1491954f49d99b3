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

#include "specbound/sampling.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <sstream>

#include "detail/parallel.hpp"
#include "specbound/error.hpp"

namespace specbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kAutocovarianceGrid = std::size_t{1} << 15;

// Step-down recursion: all reflection coefficients inside (-1, 1) iff the
// AR polynomial 1 - sum ar_i z^i has its roots outside the unit circle.
bool ar_is_stationary(std::vector<double> a) {
  for (std::size_t p = a.size(); p >= 1; --p) {
    const double k = a[p - 1];
    if (!(std::abs(k) < 1.0)) return false;
    const double denom = 1.0 - k * k;
    std::vector<double> next(p - 1);
    for (std::size_t i = 0; i + 1 < p; ++i) next[i] = (a[i] + k * a[p - 2 - i]) / denom;
    a = std::move(next);
  }
  return true;
}

std::string join(const std::vector<double>& v) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ";" : "") << v[i];
  return out.str();
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

const char* process_kind_name(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::kWhiteGaussian: return "white";
    case ProcessKind::kAR: return "ar";
    case ProcessKind::kMA: return "ma";
    case ProcessKind::kARMA: return "arma";
  }
  return "unknown";
}

ProcessModel ProcessModel::white(double variance) {
  return {ProcessKind::kWhiteGaussian, {}, {}, variance};
}
ProcessModel ProcessModel::autoregressive(std::vector<double> ar, double variance) {
  return {ProcessKind::kAR, std::move(ar), {}, variance};
}
ProcessModel ProcessModel::moving_average(std::vector<double> ma, double variance) {
  return {ProcessKind::kMA, {}, std::move(ma), variance};
}
ProcessModel ProcessModel::arma(std::vector<double> ar, std::vector<double> ma,
                                double variance) {
  return {ProcessKind::kARMA, std::move(ar), std::move(ma), variance};
}

void ProcessModel::validate() const {
  if (!std::isfinite(innovation_variance) || innovation_variance < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "innovation variance must be finite and >= 0");
  }
  const bool has_ar = !ar.empty();
  const bool has_ma = !ma.empty();
  const bool consistent = (kind == ProcessKind::kWhiteGaussian && !has_ar && !has_ma) ||
                          (kind == ProcessKind::kAR && !has_ma) ||
                          (kind == ProcessKind::kMA && !has_ar) || kind == ProcessKind::kARMA;
  if (!consistent) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("coefficients do not match process kind ") + process_kind_name(kind));
  }
  for (double c : ar) {
    if (!std::isfinite(c)) throw Error(ErrorCode::kInvalidArgument, "AR coefficient not finite");
  }
  for (double c : ma) {
    if (!std::isfinite(c)) throw Error(ErrorCode::kInvalidArgument, "MA coefficient not finite");
  }
  if (!ar_is_stationary(ar)) {
    throw Error(ErrorCode::kNonStationaryModel,
                "AR polynomial has a root on or inside the unit circle");
  }
  if (innovation_variance > 0.0) {
    const AngularGrid grid(kDefaultGridSize);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (!(spectral_density(grid.node(j)) > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "model spectrum vanishes on the grid");
      }
    }
  }
}

std::size_t ProcessModel::order() const { return std::max(ar.size(), ma.size()); }

std::string ProcessModel::id() const {
  std::ostringstream out;
  out.precision(17);
  out << process_kind_name(kind) << "(ar=" << join(ar) << ",ma=" << join(ma)
      << ",var=" << innovation_variance << ")";
  return out.str();
}

double ProcessModel::spectral_density(double theta) const {
  const std::complex<double> z = std::polar(1.0, -theta);
  std::complex<double> num = 1.0;
  std::complex<double> zk = 1.0;
  for (double c : ma) {
    zk *= z;
    num += c * zk;
  }
  std::complex<double> den = 1.0;
  zk = 1.0;
  for (double c : ar) {
    zk *= z;
    den -= c * zk;
  }
  return innovation_variance * std::norm(num) / std::norm(den);
}

GridDensity ProcessModel::spectral_density(const AngularGrid& grid) const {
  std::vector<double> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values[j] = spectral_density(grid.node(j));
  return GridDensity(grid, std::move(values));
}

std::vector<double> ProcessModel::autocovariance(std::size_t order) const {
  return compute_lags(spectral_density(AngularGrid(kAutocovarianceGrid)), order);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over the combined state
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SampleSeries simulate(const ProcessModel& model, std::size_t length, std::uint64_t seed) {
  model.validate();
  if (length < 2) throw Error(ErrorCode::kInvalidArgument, "series length must be >= 2");
  const std::size_t burn_in = std::max<std::size_t>(1000, 50 * model.order());
  const std::size_t total = burn_in + length;

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> innovation(0.0, std::sqrt(model.innovation_variance));

  const std::size_t p = model.ar.size();
  const std::size_t q = model.ma.size();
  std::vector<double> e(total);
  std::vector<double> y(total);
  for (std::size_t t = 0; t < total; ++t) {
    e[t] = model.innovation_variance > 0.0 ? innovation(rng) : 0.0;
    double value = e[t];
    for (std::size_t j = 1; j <= q && j <= t; ++j) value += model.ma[j - 1] * e[t - j];
    for (std::size_t i = 1; i <= p && i <= t; ++i) value += model.ar[i - 1] * y[t - i];
    y[t] = value;
  }
  SampleSeries out;
  out.values.assign(y.begin() + static_cast<std::ptrdiff_t>(burn_in), y.end());
  out.model_id = model.id();
  out.seed = seed;
  return out;
}

std::vector<double> estimate_lags(std::span<const double> series, std::size_t order) {
  if (order >= series.size()) {
    throw Error(ErrorCode::kOrderTooLarge, "lag order " + std::to_string(order) +
                                               " needs more than " +
                                               std::to_string(series.size()) + " samples");
  }
  const std::size_t length = series.size();  // N + 1
  std::vector<double> lags(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    double sum = 0.0;
    for (std::size_t t = 0; t + k < length; ++t) sum += series[t] * series[t + k];
    lags[k] = sum / static_cast<double>(length - k);
  }
  return lags;
}

const char* probability_method_name(ProbabilityMethod method) {
  switch (method) {
    case ProbabilityMethod::kMarginal: return "Marginal";
    case ProbabilityMethod::kMomentMarkov: return "MomentMarkov";
    case ProbabilityMethod::kMomentCantelli: return "MomentCantelli";
    case ProbabilityMethod::kMonteCarlo: return "MonteCarlo";
  }
  return "Unknown";
}

Interval wilson_interval(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

ProbabilityAssessment ProbabilityAssessment::from_lags(std::vector<LagProbability> per_lag) {
  ProbabilityAssessment out;
  out.per_lag = std::move(per_lag);
  out.product = out.recompute_product();
  return out;
}

double ProbabilityAssessment::recompute_product() const {
  double product = 1.0;
  for (const auto& lag : per_lag) product *= lag.probability;
  return product;
}

namespace {

// P{U V <= s} (lower = true) or P{U V >= s} for standard normals with
// correlation rho.
double standard_product_tail(double rho, double s, bool lower) {
  if (std::isinf(s)) {
    const bool below = s < 0.0;
    return lower ? (below ? 0.0 : 1.0) : (below ? 1.0 : 0.0);
  }
  const double one_minus = 1.0 - rho * rho;
  if (one_minus <= 1e-15) {
    // U V = sign(rho) U^2 is a scaled chi-square with one degree of freedom.
    const double t = rho > 0.0 ? s : -s;  // P{U^2 <= t} or P{U^2 >= t}
    const bool want_le = (rho > 0.0) == lower;
    const double le = t <= 0.0 ? 0.0 : std::erf(std::sqrt(t / 2.0));
    const double ge = t <= 0.0 ? 1.0 : std::erfc(std::sqrt(t / 2.0));
    return want_le ? le : ge;
  }
  const double sigma = std::sqrt(one_minus);
  const double inv_sqrt_2pi = 0.3989422804014327;
  // Conditional on U = u, V ~ N(rho u, 1 - rho^2). For u > 0,
  // {uV <= s} = {V <= s/u}; for u < 0 the inequality flips.
  auto conditional = [&](double u) {
    const double z = (s / u - rho * u) / sigma;
    const bool le_side = (u > 0.0) == lower;
    return le_side ? normal_cdf(z) : normal_cdf(-z);
  };
  auto integrand_pos = [&](double u) {
    if (u <= 0.0) return 0.0;
    return inv_sqrt_2pi * std::exp(-0.5 * u * u) * conditional(u);
  };
  auto integrand_neg = [&](double v) {
    if (v <= 0.0) return 0.0;
    return inv_sqrt_2pi * std::exp(-0.5 * v * v) * conditional(-v);
  };
  using boost::math::quadrature::gauss_kronrod;
  const double pos = gauss_kronrod<double, 61>::integrate(integrand_pos, 0.0, kInf, 20, 1e-13);
  const double neg = gauss_kronrod<double, 61>::integrate(integrand_neg, 0.0, kInf, 20, 1e-13);
  return std::clamp(pos + neg, 0.0, 1.0);
}

double product_tail(const GaussianPairLaw& law, double s, bool lower) {
  if (!(law.variance >= 0.0) || std::abs(law.covariance) > law.variance * (1.0 + 1e-12)) {
    throw Error(ErrorCode::kInvalidArgument, "Gaussian pair law needs |r_k| <= r_0");
  }
  if (law.variance == 0.0) {
    // X = 0 almost surely
    return lower ? (s >= 0.0 ? 1.0 : 0.0) : (s <= 0.0 ? 1.0 : 0.0);
  }
  const double rho = std::clamp(law.covariance / law.variance, -1.0, 1.0);
  return standard_product_tail(rho, s / law.variance, lower);
}

double chain(double lower_tail, double upper_tail, std::size_t count) {
  const double m = static_cast<double>(count);
  return std::clamp(1.0 - std::pow(lower_tail, m) - std::pow(upper_tail, m), 0.0, 1.0);
}

std::size_t term_count(std::size_t n_samples, std::size_t k) {
  if (k > n_samples) {
    throw Error(ErrorCode::kOrderTooLarge, "lag " + std::to_string(k) + " exceeds N = " +
                                               std::to_string(n_samples));
  }
  return n_samples + 1 - k;
}

}  // namespace

double product_cdf(const GaussianPairLaw& law, double s) { return product_tail(law, s, true); }

double product_survival(const GaussianPairLaw& law, double s) {
  return product_tail(law, s, false);
}

double marginal_interval_probability(const PairDistribution& pair, double lower, double upper,
                                     std::size_t n_samples, std::size_t k) {
  const std::size_t count = term_count(n_samples, k);
  if (std::holds_alternative<UnknownPairLaw>(pair)) {
    throw Error(ErrorCode::kUnknownDistribution,
                "the marginal law of y_t y_{t+k} is not available");
  }
  const auto& law = std::get<GaussianPairLaw>(pair);
  return chain(product_cdf(law, lower), product_survival(law, upper), count);
}

double moment_interval_probability(std::span<const double> moments, double lower, double upper,
                                   std::size_t n_samples, std::size_t k, MomentBound bound) {
  const std::size_t count = term_count(n_samples, k);
  if (moments.size() < 2 || !std::isfinite(moments[0]) || !std::isfinite(moments[1])) {
    throw Error(ErrorCode::kInvalidMoments, "need finite first and second moments");
  }
  const double m1 = moments[0];
  const double variance = moments[1] - m1 * m1;
  if (variance < -1e-12 * std::max(1.0, moments[1])) {
    throw Error(ErrorCode::kInvalidMoments, "second moment is smaller than the squared mean");
  }
  const double var = std::max(0.0, variance);

  double upper_tail = 1.0;
  double lower_tail = 1.0;
  if (bound == MomentBound::kMarkov) {
    if (m1 < 0.0) throw Error(ErrorCode::kInvalidMoments, "Markov bound needs X >= 0");
    upper_tail = upper > 0.0 ? std::min(1.0, m1 / upper) : 1.0;
    lower_tail = lower < 0.0 ? 0.0 : 1.0;
  } else {
    auto cantelli = [var](double distance) {
      if (std::isinf(distance)) return 0.0;
      return var == 0.0 ? 0.0 : var / (var + distance * distance);
    };
    upper_tail = upper > m1 ? cantelli(upper - m1) : 1.0;
    lower_tail = lower < m1 ? cantelli(m1 - lower) : 1.0;
  }
  return chain(lower_tail, upper_tail, count);
}

ProbabilityAssessment marginal_assessment(const ProcessModel& model, const LagBox& box,
                                          std::size_t n_samples) {
  model.validate();
  const auto lags = model.autocovariance(box.order());
  std::vector<LagProbability> per_lag;
  for (std::size_t k = 0; k <= box.order(); ++k) {
    LagProbability lag;
    lag.lower = box.lower()[k];
    lag.upper = box.upper()[k];
    lag.method = ProbabilityMethod::kMarginal;
    lag.probability = marginal_interval_probability(GaussianPairLaw{lags[0], lags[k]}, lag.lower,
                                                    lag.upper, n_samples, k);
    per_lag.push_back(lag);
  }
  return ProbabilityAssessment::from_lags(std::move(per_lag));
}

ProbabilityAssessment moment_assessment(std::span<const double> series, const LagBox& box) {
  if (box.order() >= series.size()) {
    throw Error(ErrorCode::kOrderTooLarge, "box order exceeds the series length");
  }
  const std::size_t n_samples = series.size() - 1;
  std::vector<LagProbability> per_lag;
  for (std::size_t k = 0; k <= box.order(); ++k) {
    double m1 = 0.0;
    double m2 = 0.0;
    const std::size_t count = series.size() - k;
    for (std::size_t t = 0; t < count; ++t) {
      const double x = series[t] * series[t + k];
      m1 += x;
      m2 += x * x;
    }
    m1 /= static_cast<double>(count);
    m2 /= static_cast<double>(count);
    const double moments[2] = {m1, m2};
    LagProbability lag;
    lag.lower = box.lower()[k];
    lag.upper = box.upper()[k];
    lag.method = ProbabilityMethod::kMomentCantelli;
    lag.probability = moment_interval_probability(moments, lag.lower, lag.upper, n_samples, k);
    per_lag.push_back(lag);
  }
  return ProbabilityAssessment::from_lags(std::move(per_lag));
}

ProbabilityAssessment monte_carlo_interval_probability(const ProcessModel& model,
                                                       const LagBox& box, std::size_t n_samples,
                                                       std::size_t trials, std::uint64_t seed) {
  if (trials < 100) {
    throw Error(ErrorCode::kInvalidArgument, "Monte Carlo assessment needs at least 100 trials");
  }
  model.validate();
  const std::size_t order = box.order();
  if (order > n_samples) throw Error(ErrorCode::kOrderTooLarge, "box order exceeds N");

  // inside[i * (order + 1) + k] for trial i
  std::vector<unsigned char> inside(trials * (order + 1), 0);
  detail::parallel_for(trials, [&](std::size_t i) {
    const auto series = simulate(model, n_samples + 1, derive_seed(seed, i));
    const auto lags = estimate_lags(series.values, order);
    for (std::size_t k = 0; k <= order; ++k) {
      inside[i * (order + 1) + k] = lags[k] >= box.lower()[k] && lags[k] <= box.upper()[k];
    }
  });

  std::vector<std::size_t> hits(order + 1, 0);
  std::size_t joint = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    bool all = true;
    for (std::size_t k = 0; k <= order; ++k) {
      const bool in = inside[i * (order + 1) + k] != 0;
      hits[k] += in;
      all = all && in;
    }
    joint += all;
  }
  std::vector<LagProbability> per_lag;
  for (std::size_t k = 0; k <= order; ++k) {
    LagProbability lag;
    lag.lower = box.lower()[k];
    lag.upper = box.upper()[k];
    lag.method = ProbabilityMethod::kMonteCarlo;
    lag.probability = static_cast<double>(hits[k]) / static_cast<double>(trials);
    lag.wilson = wilson_interval(hits[k], trials);
    per_lag.push_back(lag);
  }
  auto out = ProbabilityAssessment::from_lags(std::move(per_lag));
  out.joint_frequency = static_cast<double>(joint) / static_cast<double>(trials);
  out.joint_wilson = wilson_interval(joint, trials);
  out.trials = trials;
  return out;
}

}  // namespace specbound
