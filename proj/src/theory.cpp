#include "diffest/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "diffest/common.hpp"
#include "diffest/estimate.hpp"
#include "diffest/normal.hpp"
#include "diffest/numeric.hpp"

namespace diffest {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw config_error(std::string("theory: ") + name +
                       " must be positive and finite, got " +
                       std::to_string(value));
  }
}

// Survival function of the Kolmogorov distribution at lambda. Below the
// crossover the CDF's theta-transformed series converges in a couple of
// terms, so evaluate that and subtract; above it the alternating series
// for the tail does.
double kolmogorov_pvalue(double lambda) {
  if (lambda <= 0.0) return 1.0;
  constexpr int kMaxTerms = 100;
  constexpr double kTolerance = 1e-12;
  if (lambda < 1.18) {
    const double f = std::sqrt(2.0 * std::numbers::pi) / lambda;
    double cdf = 0.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
      const double m = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * lambda);
      const double term = f * std::exp(-0.5 * m * m);
      cdf += term;
      if (term < kTolerance) break;
    }
    return std::min(1.0, std::max(0.0, 1.0 - cdf));
  }
  double tail = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    tail += sign * term;
    sign = -sign;
    if (term < kTolerance) break;
  }
  return std::min(1.0, std::max(0.0, 2.0 * tail));
}

}  // namespace

double quasi_fisher(std::size_t j, double beta) {
  require_positive(beta, "beta");
  if (j == 0) {
    throw config_error("theory: information index is 1-based");
  }
  return static_cast<double>(j) / (2.0 * beta * beta);
}

double standardized_score(double beta, double y, double mu_bar, double h,
                          double beta0) {
  require_positive(beta, "beta");
  require_positive(beta0, "beta0");
  require_positive(h, "h");
  const double shifted = y + mu_bar * std::sqrt(h / beta0);
  return -1.0 / (2.0 * beta) +
         beta0 / (2.0 * beta * beta) * shifted * shifted;
}

DriftBiasTerms constant_drift_bias(double beta_prev, double beta0,
                                   double alpha, double h) {
  require_positive(beta_prev, "beta_prev");
  require_positive(beta0, "beta0");
  require_positive(h, "h");
  const double d = beta_prev - beta0;
  const double drift_sq = h * alpha * alpha;
  DriftBiasTerms terms;
  terms.score_mean = (-d + drift_sq) / (2.0 * beta_prev * beta_prev);
  terms.rescaled_score_mean = (-0.5 * d + 0.5 * drift_sq) / (beta0 * beta0);
  terms.centering_residual = -drift_sq / (2.0 * beta0 * beta0);
  return terms;
}

ConditionSums condition_sums_constant_drift(const ObservationGrid& grid,
                                            double alpha, double beta0) {
  require_positive(beta0, "beta0");
  const double n = static_cast<double>(grid.size());
  const double magnitude =
      std::sqrt(n) * grid.step() * alpha * alpha / (2.0 * beta0 * beta0);
  return ConditionSums{magnitude, -magnitude};
}

double linear_statistic(const IncrementSeries& data,
                        const std::vector<double>& drift_integrals,
                        double beta0) {
  require_positive(beta0, "beta0");
  if (drift_integrals.size() != data.size()) {
    throw config_error(
        "theory: drift integrals must match the increment count (" +
        std::to_string(drift_integrals.size()) + " vs " +
        std::to_string(data.size()) + ")");
  }
  if (data.size() == 0) {
    throw data_error("theory: empty increment series");
  }
  const double h = data.grid().step();
  const double noise_scale = std::sqrt(h * beta0);
  const auto& dx = data.values();
  KahanSum score_sum;
  for (std::size_t j = 0; j < dx.size(); ++j) {
    const double y = (dx[j] - drift_integrals[j]) / noise_scale;
    const double mu_bar = drift_integrals[j] / h;
    score_sum.add(standardized_score(beta0, y, mu_bar, h, beta0));
  }
  return beta0 + score_sum.value() / quasi_fisher(data.size(), beta0);
}

double linear_statistic(const IncrementSeries& data, double beta0) {
  return linear_statistic(data, std::vector<double>(data.size(), 0.0), beta0);
}

double w_statistic(double beta_hat, double beta0, std::size_t n) {
  require_positive(beta0, "beta0");
  if (n == 0) {
    throw config_error("theory: sample size must be at least 1");
  }
  return std::sqrt(static_cast<double>(n) / (2.0 * beta0 * beta0)) *
         (beta_hat - beta0);
}

std::vector<std::pair<double, double>> qq_pairs(
    const std::vector<double>& sample) {
  if (sample.empty()) {
    throw data_error("theory: empty sample");
  }
  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  const double size = static_cast<double>(sorted.size());
  std::vector<std::pair<double, double>> pairs(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double p = (static_cast<double>(i) + 0.5) / size;
    pairs[i] = {normal_quantile(p), sorted[i]};
  }
  return pairs;
}

NormalityCheck ks_normality(const std::vector<double>& sample) {
  if (sample.size() < 20) {
    throw data_error("theory: normality test needs at least 20 observations, got " +
                     std::to_string(sample.size()));
  }
  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  const double size = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf(sorted[i]);
    const double upper = (static_cast<double>(i) + 1.0) / size - cdf;
    const double lower = cdf - static_cast<double>(i) / size;
    d = std::max(d, std::max(upper, lower));
  }
  NormalityCheck check;
  check.sample = sample;
  check.ks_statistic = d;
  check.ks_pvalue = kolmogorov_pvalue(std::sqrt(size) * d);
  check.qq_pairs = qq_pairs(sample);
  return check;
}

DiagnosticsReport diagnose(const IncrementSeries& data,
                           const std::vector<double>* drift_integrals,
                           double beta0, std::optional<double> alpha,
                           double recursion_init) {
  require_positive(beta0, "beta0");
  DiagnosticsReport report;
  report.n = data.size();
  report.h = data.grid().step();
  report.condition_i =
      static_cast<double>(data.size()) / quasi_fisher(data.size(), beta0);
  if (alpha) {
    const ConditionSums sums =
        condition_sums_constant_drift(data.grid(), *alpha, beta0);
    report.sum_ii = sums.sum_ii;
    report.sum_iii = sums.sum_iii;
  }
  report.qmle = qmle_batch(data);
  const EstimatorTrajectory recursion = recursive_run(data, recursion_init);
  report.equivalence_gap = std::sqrt(static_cast<double>(data.size())) *
                           (report.qmle - recursion.betas.back());
  if (drift_integrals != nullptr) {
    report.linear_stat = linear_statistic(data, *drift_integrals, beta0);
  }
  return report;
}

}  // namespace diffest
