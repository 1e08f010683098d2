#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "diffest/model.hpp"

namespace diffest {

enum class EstimatorMethod {
  kClosedForm,       // averaged squared increments, updated in place
  kGeneralRecursion, // projected score-driven update
  kBatchRunning,     // batch estimator recomputed after every increment
};

/// Estimate after each prefix of the data: betas[j] is the value once the
/// first j increments have been absorbed. betas[0] is the initial guess
/// (for the batch-running method, where no guess exists, it is 0).
struct EstimatorTrajectory {
  ObservationGrid grid;
  std::vector<double> betas;
  EstimatorMethod method;
};

/// Batch estimator: mean squared increment per unit time over the whole
/// sample, (1/(n*h)) * sum dx_j^2.
double qmle_batch(const IncrementSeries& data);

/// Same statistic after every prefix. The last entry reproduces
/// qmle_batch(data) bit-for-bit.
EstimatorTrajectory qmle_running(const IncrementSeries& data);

/// Gaussian log-likelihood of the increments under parameter beta,
/// sum_j [ -ln(2*pi*beta*h)/2 - dx_j^2/(2*beta*h) ].
double quasi_loglik(double beta, const IncrementSeries& data);

/// Derivative of one increment's log-likelihood term in beta:
/// -1/(2*beta) + dx^2/(2*h*beta^2).
double quasi_score(double beta, double dx, double h);

// One step of the closed-form recursion,
//   beta_j = (1 - 1/j) * beta_prev + dx_j^2 / (j*h),
// evaluated exactly as written. j is 1-based; j = 1 wipes out beta_prev.
double recursive_step(double beta_prev, std::size_t j, double dx, double h);

/// Run the closed-form recursion from an initial guess over all increments.
EstimatorTrajectory recursive_run(const IncrementSeries& data, double init);

/// Ingredients of the generic projected update
///   beta_j = clamp( beta_prev + variance_map(beta_prev) / normalizer_sq(j)
///                               * score(beta_prev, dx_j, h) ).
/// With variance_map = 2*beta^2, normalizer_sq = j and the Gaussian score,
/// the update reduces algebraically to recursive_step (before clamping);
/// the two differ only in floating-point rounding.
struct RecursionSpec {
  std::function<double(double)> variance_map;
  std::function<double(std::size_t)> normalizer_sq;
  std::function<double(double, double, double)> score;
  ParamDomain domain;
};

/// The RecursionSpec used by this model family.
RecursionSpec diffusion_recursion_spec();

double general_step(const RecursionSpec& spec, double beta_prev,
                    std::size_t j, double dx, double h);

EstimatorTrajectory general_run(const RecursionSpec& spec,
                                const IncrementSeries& data, double init);

}  // namespace diffest
