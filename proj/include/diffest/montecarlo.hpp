#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "diffest/drift.hpp"
#include "diffest/model.hpp"
#include "diffest/theory.hpp"

namespace diffest {

/// How each trial picks its starting value. The uniform rule perturbs the
/// true parameter by a factor in (0.5, 1.5); the fixed rule uses one value
/// for every trial. Either way the trial stream consumes one uniform draw
/// for this step, so the simulated path behind it is identical.
enum class InitRule { kUniform, kFixed };

struct InitSpec {
  InitRule rule = InitRule::kUniform;
  double fixed_value = 1.0;  // used only by kFixed
};

struct MonteCarloConfig {
  std::size_t trials = 100;
  std::size_t n = 500;
  std::optional<double> step;           // explicit h
  std::optional<double> step_exponent;  // or h = n^(-gamma)
  double alpha0 = 0.0;
  double beta0 = 1.0;
  InitSpec init;
  std::uint64_t master_seed = 0;
  std::optional<DriftSpec> drift;  // default: constant drift alpha0
  std::size_t substeps = 1;
};

struct MonteCarloSummary {
  ObservationGrid grid;
  std::vector<double> mean_trajectory;  // n+1 entries, trial average per j
  std::vector<double> sd_trajectory;    // n+1 entries, L-1 divisor
  std::vector<double> initial_values;   // L entries
  std::vector<double> final_estimates;  // L entries
  std::vector<double> w_sample;         // L entries
  std::optional<NormalityCheck> normality;  // present when trials >= 20
  double mean_final = 0.0;
  double sd_final = 0.0;
  GridGrowthReport growth;  // advisory, never fails the run
  std::uint64_t master_seed = 0;
};

/// Run `trials` independent recursive-estimation experiments. Trial l
/// (1-based) draws from RngStream(master_seed, l): first the initial-value
/// uniform, then the path. Aggregation is a fixed-order pass in trial
/// order, so the summary is deterministic given the config.
MonteCarloSummary run_trials(const MonteCarloConfig& config);

/// Sample variance of sqrt(n)*(final - beta0) across trials; the theory
/// says it approaches 2*beta0^2. Needs at least 30 trials.
double variance_check(const MonteCarloSummary& summary, double beta0,
                      std::size_t n);

}  // namespace diffest
