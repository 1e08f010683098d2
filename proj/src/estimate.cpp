#include "diffest/estimate.hpp"

#include <cmath>
#include <string>

#include "diffest/common.hpp"
#include "diffest/numeric.hpp"

namespace diffest {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_positive_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw config_error("estimate: beta must be positive and finite, got " +
                       std::to_string(beta));
  }
}

void require_finite_init(double init) {
  if (!std::isfinite(init)) {
    throw config_error("estimate: initial value must be finite");
  }
}

}  // namespace

double qmle_batch(const IncrementSeries& data) {
  if (data.size() == 0) {
    throw data_error("estimate: empty increment series");
  }
  const double h = data.grid().step();
  KahanSum sum;
  for (double dx : data.values()) {
    sum.add(dx * dx);
  }
  return sum.value() / (static_cast<double>(data.size()) * h);
}

EstimatorTrajectory qmle_running(const IncrementSeries& data) {
  if (data.size() == 0) {
    throw data_error("estimate: empty increment series");
  }
  const double h = data.grid().step();
  const auto& dx = data.values();
  std::vector<double> betas(data.size() + 1);
  betas[0] = 0.0;
  KahanSum sum;
  for (std::size_t j = 1; j <= data.size(); ++j) {
    sum.add(dx[j - 1] * dx[j - 1]);
    betas[j] = sum.value() / (static_cast<double>(j) * h);
  }
  return EstimatorTrajectory{data.grid(), std::move(betas),
                             EstimatorMethod::kBatchRunning};
}

double quasi_loglik(double beta, const IncrementSeries& data) {
  require_positive_beta(beta);
  if (data.size() == 0) {
    throw data_error("estimate: empty increment series");
  }
  const double h = data.grid().step();
  const double log_term = -0.5 * std::log(kTwoPi * beta * h);
  const double inv_2bh = 1.0 / (2.0 * beta * h);
  KahanSum sum;
  for (double dx : data.values()) {
    sum.add(log_term - dx * dx * inv_2bh);
  }
  return sum.value();
}

double quasi_score(double beta, double dx, double h) {
  return -1.0 / (2.0 * beta) + dx * dx / (2.0 * h * beta * beta);
}

double recursive_step(double beta_prev, std::size_t j, double dx, double h) {
  if (j == 0) {
    throw config_error("estimate: recursion index is 1-based");
  }
  const double jd = static_cast<double>(j);
  return (1.0 - 1.0 / jd) * beta_prev + dx * dx / (jd * h);
}

EstimatorTrajectory recursive_run(const IncrementSeries& data, double init) {
  require_finite_init(init);
  const double h = data.grid().step();
  const auto& dx = data.values();
  std::vector<double> betas(data.size() + 1);
  betas[0] = init;
  for (std::size_t j = 1; j <= data.size(); ++j) {
    betas[j] = recursive_step(betas[j - 1], j, dx[j - 1], h);
  }
  return EstimatorTrajectory{data.grid(), std::move(betas),
                             EstimatorMethod::kClosedForm};
}

RecursionSpec diffusion_recursion_spec() {
  RecursionSpec spec;
  spec.variance_map = [](double beta) { return 2.0 * beta * beta; };
  spec.normalizer_sq = [](std::size_t j) { return static_cast<double>(j); };
  spec.score = quasi_score;
  spec.domain = ParamDomain{};
  return spec;
}

double general_step(const RecursionSpec& spec, double beta_prev,
                    std::size_t j, double dx, double h) {
  if (j == 0) {
    throw config_error("estimate: recursion index is 1-based");
  }
  const double gain = spec.variance_map(beta_prev) / spec.normalizer_sq(j);
  const double candidate = beta_prev + gain * spec.score(beta_prev, dx, h);
  return spec.domain.clamp(candidate);
}

EstimatorTrajectory general_run(const RecursionSpec& spec,
                                const IncrementSeries& data, double init) {
  require_finite_init(init);
  spec.domain.validate();
  if (!spec.domain.contains(init)) {
    throw config_error("estimate: initial value lies outside the domain");
  }
  const double h = data.grid().step();
  const auto& dx = data.values();
  std::vector<double> betas(data.size() + 1);
  betas[0] = init;
  for (std::size_t j = 1; j <= data.size(); ++j) {
    betas[j] = general_step(spec, betas[j - 1], j, dx[j - 1], h);
  }
  return EstimatorTrajectory{data.grid(), std::move(betas),
                             EstimatorMethod::kGeneralRecursion};
}

}  // namespace diffest
