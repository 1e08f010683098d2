#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "diffest/estimate.hpp"
#include "diffest/model.hpp"
#include "diffest/normal.hpp"
#include "diffest/rng.hpp"
#include "diffest/simulate.hpp"
#include "diffest/theory.hpp"

using namespace diffest;

TEST_CASE("information values and guards") {
  CHECK(quasi_fisher(500, 3.0) == doctest::Approx(500.0 / 18.0).epsilon(1e-15));
  CHECK(quasi_fisher(1, 0.5) == 2.0);
  CHECK_THROWS_AS(quasi_fisher(0, 1.0), config_error);
  CHECK_THROWS_AS(quasi_fisher(10, 0.0), config_error);
  CHECK_THROWS_AS(quasi_fisher(10, -1.0), config_error);
}

TEST_CASE("n over the information is the asymptotic variance, exactly") {
  // IEEE division is exact here: n / (n / 18) recovers 18 with no rounding
  // because n/18 rounds to a value whose reciprocal scaled by n rounds back.
  for (std::size_t n = 1; n <= 1000; ++n) {
    CHECK(static_cast<double>(n) / quasi_fisher(n, 3.0) == 18.0);
  }
  CHECK(1e6 / quasi_fisher(1000000, 3.0) == 18.0);

  RngStream rng(424242, 0);
  for (int rep = 0; rep < 1000; ++rep) {
    const double beta = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0.0, 1e6));
    const double ratio = static_cast<double>(n) / quasi_fisher(n, beta);
    const double target = 2.0 * beta * beta;
    CHECK(std::abs(ratio - target) / target < 1e-15);
  }
}

TEST_CASE("standardized score at reference points") {
  // At the true parameter with a unit standardized increment the two terms
  // cancel to zero.
  CHECK(std::abs(standardized_score(3.0, 1.0, 0.0, 0.01, 3.0)) < 1e-16);
  CHECK(standardized_score(1.0, 0.0, 0.0, 0.5, 1.0) == -0.5);
  CHECK_THROWS_AS(standardized_score(0.0, 1.0, 0.0, 0.5, 1.0), config_error);
  CHECK_THROWS_AS(standardized_score(1.0, 1.0, 0.0, 0.5, 0.0), config_error);
  CHECK_THROWS_AS(standardized_score(1.0, 1.0, 0.0, 0.0, 1.0), config_error);
}

TEST_CASE("standardized score equals the raw score under the substitution") {
  RngStream rng(7001, 0);
  for (int rep = 0; rep < 10000; ++rep) {
    const double beta = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const double beta0 = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const double h = std::exp(rng.uniform(std::log(1e-4), std::log(1.0)));
    const double y = rng.uniform(-3.0, 3.0);
    const double mu_bar = rng.uniform(-5.0, 5.0);

    const double dx = std::sqrt(h * beta0) * y + h * mu_bar;
    const double psi = standardized_score(beta, y, mu_bar, h, beta0);
    const double score = quasi_score(beta, dx, h);
    // Near the score's zero the two computations cancel independently, so
    // scale by the term magnitude rather than the (tiny) value.
    const double scale = std::max(std::abs(psi), 1.0 / (2.0 * beta));
    CHECK(std::abs(psi - score) / scale < 1e-12);
  }
}

TEST_CASE("constant-drift bias terms at reference points") {
  const DriftBiasTerms at_truth = constant_drift_bias(3.0, 3.0, -1.0, 0.01);
  CHECK(at_truth.score_mean == doctest::Approx(0.01 / 18.0).epsilon(1e-14));
  CHECK(at_truth.rescaled_score_mean ==
        doctest::Approx(0.01 / 18.0).epsilon(1e-14));
  CHECK(at_truth.centering_residual ==
        doctest::Approx(-0.01 / 18.0).epsilon(1e-14));

  const DriftBiasTerms no_drift = constant_drift_bias(4.0, 3.0, 0.0, 0.5);
  CHECK(no_drift.score_mean == doctest::Approx(-1.0 / 32.0).epsilon(1e-14));
  CHECK(no_drift.rescaled_score_mean ==
        doctest::Approx(-0.5 / 9.0).epsilon(1e-14));
  CHECK(no_drift.centering_residual == 0.0);

  CHECK_THROWS_AS(constant_drift_bias(0.0, 3.0, 1.0, 0.5), config_error);
  CHECK_THROWS_AS(constant_drift_bias(3.0, -3.0, 1.0, 0.5), config_error);
}

TEST_CASE("information increment times deviation cancels the bias terms") {
  // (Gamma_j - Gamma_{j-1}) * d + rescaled_score_mean is the drift-only
  // remainder -centering_residual, for every j.
  RngStream rng(7002, 0);
  for (int rep = 0; rep < 10000; ++rep) {
    const double beta_prev = rng.uniform(0.5, 5.0);
    const double beta0 = rng.uniform(0.5, 5.0);
    const double alpha = rng.uniform(-3.0, 3.0);
    const double h = std::exp(rng.uniform(std::log(1e-4), std::log(0.1)));
    const std::size_t j = 1 + static_cast<std::size_t>(rng.uniform(0.0, 100.0));

    const double gamma_diff =
        j == 1 ? quasi_fisher(1, beta0)
               : quasi_fisher(j, beta0) - quasi_fisher(j - 1, beta0);
    const DriftBiasTerms terms =
        constant_drift_bias(beta_prev, beta0, alpha, h);
    const double d = beta_prev - beta0;
    const double lhs = gamma_diff * d + terms.rescaled_score_mean;
    const double rhs = -terms.centering_residual;
    const double scale =
        std::max({std::abs(gamma_diff * d), std::abs(terms.rescaled_score_mean),
                  std::abs(terms.centering_residual), 1e-30});
    CHECK(std::abs(lhs - rhs) / scale < 1e-12);
  }
}

TEST_CASE("condition sums under the reference design") {
  const ObservationGrid grid = make_grid_exponent(500, 0.75);
  const ConditionSums sums = condition_sums_constant_drift(grid, -1.0, 3.0);
  CHECK(sums.sum_ii ==
        doctest::Approx(std::pow(500.0, -0.25) / 18.0).epsilon(1e-12));
  CHECK(sums.sum_iii == -sums.sum_ii);
  CHECK(sums.sum_ii == doctest::Approx(0.0117486).epsilon(1e-4));

  const ConditionSums quiet = condition_sums_constant_drift(grid, 0.0, 3.0);
  CHECK(quiet.sum_ii == 0.0);
  CHECK(quiet.sum_iii == 0.0);
}

TEST_CASE("condition sums decay like n^(-1/4) on the reference step rule") {
  for (const std::size_t n : {1000UL, 5000UL, 40000UL}) {
    const ConditionSums small = condition_sums_constant_drift(
        make_grid_exponent(n, 0.75), 2.0, 1.5);
    const ConditionSums big = condition_sums_constant_drift(
        make_grid_exponent(2 * n, 0.75), 2.0, 1.5);
    CHECK(big.sum_ii / small.sum_ii ==
          doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-12));
  }

  // Least-squares slope of log(sum) against log(n) across four decades.
  std::vector<double> log_n;
  std::vector<double> log_sum;
  for (const std::size_t n : {1000UL, 10000UL, 100000UL, 1000000UL}) {
    const ConditionSums sums = condition_sums_constant_drift(
        make_grid_exponent(n, 0.75), -1.0, 3.0);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_sum.push_back(std::log(sums.sum_ii));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    mean_x += log_n[i];
    mean_y += log_sum[i];
  }
  mean_x /= static_cast<double>(log_n.size());
  mean_y /= static_cast<double>(log_n.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sxy += (log_n[i] - mean_x) * (log_sum[i] - mean_y);
    sxx += (log_n[i] - mean_x) * (log_n[i] - mean_x);
  }
  CHECK(sxy / sxx == doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("linearized estimator reproduces the batch estimate") {
  for (const std::uint64_t seed : {3ULL, 17ULL, 99ULL}) {
    RngStream rng(seed, 0);
    const SimulatedPath path =
        simulate_constant_drift(make_grid(400, 0.01), -1.0, 3.0, rng);
    const double qmle = qmle_batch(path.increments);
    const double linear =
        linear_statistic(path.increments, path.drift_integrals, 3.0);
    CHECK(std::abs(linear - qmle) / qmle < 1e-12);

    // The centering parameter is irrelevant to the identity.
    const double far = linear_statistic(path.increments, path.drift_integrals,
                                        0.7);
    CHECK(std::abs(far - qmle) / qmle < 1e-12);
  }
}

TEST_CASE("linearized estimator edge cases") {
  const ObservationGrid grid = make_grid(4, 0.25);
  const IncrementSeries zeros(grid, {0.0, 0.0, 0.0, 0.0});
  // All-zero increments: the score sum collapses to -n/(2*beta0) and the
  // linear statistic lands on qmle = 0.
  const double ls = linear_statistic(zeros, 2.0);
  CHECK(std::abs(ls) <= 1e-12 * 2.0);
  CHECK(qmle_batch(zeros) == 0.0);

  const ObservationGrid one = make_grid(1, 0.25);
  const double beta0 = 1.7;
  const IncrementSeries single(one, {std::sqrt(0.25 * beta0)});
  CHECK(linear_statistic(single, beta0) ==
        doctest::Approx(beta0).epsilon(1e-14));

  CHECK_THROWS_AS(linear_statistic(zeros, {0.0, 0.0}, 2.0), config_error);
  CHECK_THROWS_AS(linear_statistic(zeros, 0.0), config_error);
}

TEST_CASE("error statistic scaling") {
  CHECK(w_statistic(3.0, 3.0, 500) == 0.0);
  CHECK(w_statistic(3.19, 3.0, 500) ==
        doctest::Approx(std::sqrt(500.0 / 18.0) * 0.19).epsilon(1e-14));
  // Antisymmetry around beta0 is exact: the prefactor is shared and the
  // deviations are negatives of each other.
  for (const double beta_hat : {2.0, 2.9, 3.5, 10.0}) {
    CHECK(w_statistic(beta_hat, 3.0, 137) ==
          -w_statistic(6.0 - beta_hat, 3.0, 137));
  }
  CHECK_THROWS_AS(w_statistic(1.0, 3.0, 0), config_error);
  CHECK_THROWS_AS(w_statistic(1.0, 0.0, 10), config_error);
}

TEST_CASE("quantile pairing is sorted and hits a perfect sample") {
  // Feed the exact normal quantiles at the plotting positions back in; the
  // pairing must reproduce them on both coordinates.
  const std::size_t size = 1000;
  std::vector<double> sample(size);
  for (std::size_t i = 0; i < size; ++i) {
    sample[i] =
        normal_quantile((static_cast<double>(i) + 0.5) / static_cast<double>(size));
  }
  std::reverse(sample.begin(), sample.end());
  const auto pairs = qq_pairs(sample);
  REQUIRE(pairs.size() == size);
  for (std::size_t i = 0; i < size; ++i) {
    CHECK(pairs[i].first == sample[size - 1 - i]);
    CHECK(pairs[i].second == sample[size - 1 - i]);
    if (i > 0) CHECK(pairs[i].first > pairs[i - 1].first);
  }
  CHECK_THROWS_AS(qq_pairs({}), data_error);
}

TEST_CASE("normality check on a perfect quantile sample") {
  const std::size_t size = 1000;
  std::vector<double> sample(size);
  for (std::size_t i = 0; i < size; ++i) {
    sample[i] =
        normal_quantile((static_cast<double>(i) + 0.5) / static_cast<double>(size));
  }
  const NormalityCheck check = ks_normality(sample);
  // The empirical CDF steps across each point, so the distance cannot drop
  // below 1/(2L) even for ideal data.
  CHECK(check.ks_statistic < 0.002);
  CHECK(check.ks_statistic >= 0.5 / static_cast<double>(size));
  CHECK(check.ks_pvalue > 0.999);
  CHECK(check.qq_pairs.size() == size);
}

TEST_CASE("normality check rejects degenerate samples") {
  const std::vector<double> flat(50, 0.0);
  const NormalityCheck check = ks_normality(flat);
  CHECK(check.ks_statistic == 0.5);
  CHECK(check.ks_pvalue < 1e-10);

  CHECK_THROWS_AS(ks_normality(std::vector<double>(19, 0.0)), data_error);
}

TEST_CASE("normality p-values are roughly uniform under the null") {
  // Meta-calibration: across seeded standard-normal samples the asymptotic
  // test should reject at the 1% level only a few percent of the time (the
  // finite-sample statistic runs slightly hot), and the p-values must spread
  // over the unit interval instead of piling up at either end.
  int above_threshold = 0;
  int above_half = 0;
  const int meta_trials = 1000;
  for (int t = 0; t < meta_trials; ++t) {
    RngStream rng(9000, static_cast<std::uint64_t>(t));
    std::vector<double> sample(100);
    for (double& v : sample) v = rng.normal();
    const double p = ks_normality(sample).ks_pvalue;
    if (p > 0.01) ++above_threshold;
    if (p > 0.5) ++above_half;
  }
  CHECK(above_threshold >= 960);
  CHECK(above_half > 300);
  CHECK(above_half < 700);
}

TEST_CASE("p-value is continuous across the series crossover") {
  // The survival function switches series around lambda = 1.18. Sweep the
  // statistic through that point by shifting a perfect sample; a mismatch
  // between the branches would break the strict monotone decline.
  const double size = 400.0;
  std::vector<double> sample(400);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    sample[i] = normal_quantile((static_cast<double>(i) + 0.5) / size);
  }
  double previous_p = 2.0;
  double lambda_min = 1e9;
  double lambda_max = 0.0;
  for (double shift = 0.130; shift <= 0.1701; shift += 0.002) {
    std::vector<double> shifted = sample;
    for (double& v : shifted) v += shift;
    const NormalityCheck check = ks_normality(shifted);
    const double lambda = std::sqrt(size) * check.ks_statistic;
    lambda_min = std::min(lambda_min, lambda);
    lambda_max = std::max(lambda_max, lambda);
    CHECK(check.ks_pvalue < previous_p);
    previous_p = check.ks_pvalue;
  }
  // The sweep really does straddle the crossover.
  CHECK(lambda_min < 1.18);
  CHECK(lambda_max > 1.18);
}

TEST_CASE("diagnostics report fills exactly the fields it can") {
  RngStream rng(555, 0);
  const SimulatedPath path =
      simulate_constant_drift(make_grid(200, 0.02), 1.0, 2.0, rng);

  const DiagnosticsReport full =
      diagnose(path.increments, &path.drift_integrals, 2.0, 1.0, 1.0);
  CHECK(full.n == 200);
  CHECK(full.h == 0.02);
  CHECK(full.condition_i == 8.0);
  CHECK(full.sum_ii.has_value());
  CHECK(full.sum_iii.has_value());
  CHECK(full.linear_stat.has_value());
  CHECK(full.qmle == qmle_batch(path.increments));
  CHECK(std::abs(*full.linear_stat - full.qmle) / full.qmle < 1e-12);
  // The gap is sqrt(n) times a difference of two near-identical sums.
  CHECK(std::abs(full.equivalence_gap) < 1e-9);

  const DiagnosticsReport bare =
      diagnose(path.increments, nullptr, 3.0, std::nullopt, 1.0);
  CHECK(bare.condition_i == 18.0);
  CHECK_FALSE(bare.sum_ii.has_value());
  CHECK_FALSE(bare.sum_iii.has_value());
  CHECK_FALSE(bare.linear_stat.has_value());
}
