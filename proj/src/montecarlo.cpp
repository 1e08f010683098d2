#include "diffest/montecarlo.hpp"

#include <cmath>
#include <string>

#include "diffest/common.hpp"
#include "diffest/estimate.hpp"
#include "diffest/numeric.hpp"
#include "diffest/rng.hpp"
#include "diffest/simulate.hpp"

namespace diffest {

namespace {

ObservationGrid grid_from_config(const MonteCarloConfig& config) {
  if (config.step && config.step_exponent) {
    throw config_error("montecarlo: give either the step or its exponent, not both");
  }
  if (config.step) {
    return make_grid(config.n, *config.step);
  }
  if (config.step_exponent) {
    return make_grid_exponent(config.n, *config.step_exponent);
  }
  throw config_error("montecarlo: no step rule given");
}

void validate_config(const MonteCarloConfig& config) {
  if (config.trials == 0) {
    throw config_error("montecarlo: trial count must be at least 1");
  }
  if (!(config.beta0 > 0.0) || !std::isfinite(config.beta0)) {
    throw config_error("montecarlo: beta0 must be positive and finite");
  }
  if (config.init.rule == InitRule::kFixed &&
      !ParamDomain{}.contains(config.init.fixed_value)) {
    throw config_error("montecarlo: fixed initial value lies outside the domain");
  }
}

double sample_sd(const std::vector<double>& values, double mean) {
  if (values.size() < 2) return 0.0;
  KahanSum sq;
  for (double v : values) {
    sq.add((v - mean) * (v - mean));
  }
  return std::sqrt(sq.value() / static_cast<double>(values.size() - 1));
}

}  // namespace

MonteCarloSummary run_trials(const MonteCarloConfig& config) {
  validate_config(config);
  const ObservationGrid grid = grid_from_config(config);
  // Resolve the advisory growth report up front so an undersized grid
  // fails before any trials are spent.
  const GridGrowthReport growth = check_grid_growth(grid);
  const DriftSpec drift =
      config.drift ? *config.drift : DriftSpec{ConstantDrift{config.alpha0}};

  const std::size_t trials = config.trials;
  const std::size_t n = grid.size();

  std::vector<RunningMoments> per_step(n + 1);
  std::vector<double> initial_values(trials);
  std::vector<double> final_estimates(trials);

  for (std::size_t l = 1; l <= trials; ++l) {
    RngStream rng(config.master_seed, l);
    const double u = rng.uniform01();
    const double init = config.init.rule == InitRule::kUniform
                            ? config.beta0 * (1.0 + (u - 0.5))
                            : config.init.fixed_value;
    const SimulatedPath path =
        simulate_general_drift(grid, drift, config.beta0, config.substeps, rng);
    const EstimatorTrajectory trajectory =
        recursive_run(path.increments, init);
    for (std::size_t j = 0; j <= n; ++j) {
      per_step[j].add(trajectory.betas[j]);
    }
    initial_values[l - 1] = init;
    final_estimates[l - 1] = trajectory.betas[n];
  }

  MonteCarloSummary summary{grid,
                            std::vector<double>(n + 1),
                            std::vector<double>(n + 1),
                            std::move(initial_values),
                            std::move(final_estimates),
                            std::vector<double>(trials),
                            std::nullopt,
                            0.0,
                            0.0,
                            growth,
                            config.master_seed};
  for (std::size_t j = 0; j <= n; ++j) {
    summary.mean_trajectory[j] = per_step[j].mean();
    summary.sd_trajectory[j] = per_step[j].stddev();
  }
  for (std::size_t l = 0; l < trials; ++l) {
    summary.w_sample[l] =
        w_statistic(summary.final_estimates[l], config.beta0, n);
  }

  KahanSum finals;
  for (double f : summary.final_estimates) {
    finals.add(f);
  }
  summary.mean_final = finals.value() / static_cast<double>(trials);
  summary.sd_final = sample_sd(summary.final_estimates, summary.mean_final);

  if (trials >= 20) {
    summary.normality = ks_normality(summary.w_sample);
  }
  return summary;
}

double variance_check(const MonteCarloSummary& summary, double beta0,
                      std::size_t n) {
  if (summary.final_estimates.size() < 30) {
    throw data_error("montecarlo: variance check needs at least 30 trials, got " +
                     std::to_string(summary.final_estimates.size()));
  }
  if (!(beta0 > 0.0) || !std::isfinite(beta0)) {
    throw config_error("montecarlo: beta0 must be positive and finite");
  }
  const double root_n = std::sqrt(static_cast<double>(n));
  std::vector<double> deviations(summary.final_estimates.size());
  KahanSum sum;
  for (std::size_t l = 0; l < deviations.size(); ++l) {
    deviations[l] = root_n * (summary.final_estimates[l] - beta0);
    sum.add(deviations[l]);
  }
  const double mean = sum.value() / static_cast<double>(deviations.size());
  KahanSum sq;
  for (double d : deviations) {
    sq.add((d - mean) * (d - mean));
  }
  return sq.value() / static_cast<double>(deviations.size() - 1);
}

}  // namespace diffest
