#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "diffest/model.hpp"

namespace diffest {

/// Information accumulated by the first j increments at parameter beta,
/// j/(2*beta^2). Its reciprocal is the natural normalizer of the score sum.
double quasi_fisher(std::size_t j, double beta);

/// Per-increment score written in standardized coordinates: y is the
/// noise-only increment scaled to unit variance, mu_bar the average drift
/// over the step. Equals quasi_score(beta, dx, h) under
/// dx = sqrt(h*beta0)*y + h*mu_bar.
double standardized_score(double beta, double y, double mu_bar, double h,
                          double beta0);

/// Conditional moments of the standardized score under constant drift alpha,
/// given the previous estimate. deviation d = beta_prev - beta0.
struct DriftBiasTerms {
  double score_mean;           // -d/(2*beta_prev^2) + h*alpha^2/(2*beta_prev^2)
  double rescaled_score_mean;  // (-d/2 + h*alpha^2/2) / beta0^2
  double centering_residual;   // -h*alpha^2/(2*beta0^2)
};

DriftBiasTerms constant_drift_bias(double beta_prev, double beta0,
                                   double alpha, double h);

/// Normalized drift-bias sums over the whole grid under constant drift.
/// Both decay like h*sqrt(n); with h = n^(-3/4) that is n^(-1/4).
struct ConditionSums {
  double sum_ii;   //  sqrt(n)*h*alpha^2/(2*beta0^2)
  double sum_iii;  // -sqrt(n)*h*alpha^2/(2*beta0^2)
};

ConditionSums condition_sums_constant_drift(const ObservationGrid& grid,
                                            double alpha, double beta0);

/// One-step linearization of the estimator around beta0: beta0 plus the
/// information-normalized score sum. Algebraically identical to qmle_batch,
/// which is what makes the batch and recursive estimators meet.
/// drift_integrals must have one entry per increment.
double linear_statistic(const IncrementSeries& data,
                        const std::vector<double>& drift_integrals,
                        double beta0);

/// Zero-drift form of the above.
double linear_statistic(const IncrementSeries& data, double beta0);

/// Estimation error scaled to unit asymptotic variance,
/// sqrt(n/(2*beta0^2)) * (beta_hat - beta0).
double w_statistic(double beta_hat, double beta0, std::size_t n);

/// Sorted-sample quantiles paired with standard normal quantiles at the
/// Hazen plotting positions (i - 0.5)/L. First element theoretical, second
/// empirical; sorted by the theoretical coordinate.
std::vector<std::pair<double, double>> qq_pairs(
    const std::vector<double>& sample);

/// One-sample Kolmogorov-Smirnov test of the sample against the standard
/// normal distribution, with the QQ pairing attached.
struct NormalityCheck {
  std::vector<double> sample;
  double ks_statistic = 0.0;
  double ks_pvalue = 0.0;
  std::vector<std::pair<double, double>> qq_pairs;
};

// Requires at least 20 observations; the asymptotic p-value is meaningless
// below that.
NormalityCheck ks_normality(const std::vector<double>& sample);

/// Everything the `check` and `estimate` commands report about one series.
/// Optional fields stay empty when their inputs (drift integrals, the drift
/// slope alpha) are not known for the data at hand.
struct DiagnosticsReport {
  std::size_t n = 0;
  double h = 0.0;
  double condition_i = 0.0;  // n / quasi_fisher(n, beta0), the constant 2*beta0^2
  std::optional<double> sum_ii;
  std::optional<double> sum_iii;
  double equivalence_gap = 0.0;  // sqrt(n) * (qmle - recursive final)
  std::optional<double> linear_stat;
  double qmle = 0.0;
};

DiagnosticsReport diagnose(const IncrementSeries& data,
                           const std::vector<double>* drift_integrals,
                           double beta0, std::optional<double> alpha,
                           double recursion_init);

}  // namespace diffest
