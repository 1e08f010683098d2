#pragma once

#include <cstddef>
#include <vector>

#include "diffest/drift.hpp"
#include "diffest/model.hpp"
#include "diffest/rng.hpp"

namespace diffest {

/// A simulated trajectory together with everything the diagnostics need:
/// the level path, the increments handed to the estimators, and the exact
/// per-increment drift integrals int_{t_{j-1}}^{t_j} mu_s ds.
struct SimulatedPath {
  ObservationGrid grid;
  std::vector<double> x_values;        // n+1 levels, x_values[0] = 0
  IncrementSeries increments;          // n increments
  std::vector<double> drift_integrals; // n entries, zeros under zero drift
  SeedRecord seed_record;
};

/// Increments drawn i.i.d. N(alpha*h, beta0*h); the drift integral of each
/// step is exactly alpha*h.
SimulatedPath simulate_constant_drift(const ObservationGrid& grid,
                                      double alpha, double beta0,
                                      RngStream& rng);

// General pluggable drift. Each increment is the left-endpoint quadrature
// of mu over `substeps` subintervals plus an independent N(0, beta0*h)
// diffusion term. Per increment the stream is consumed in a fixed order:
// drift innovations for the substeps first (only the OU drift has any),
// then the single diffusion draw; a stationary-start OU draws its initial
// value once before the first increment.
SimulatedPath simulate_general_drift(const ObservationGrid& grid,
                                     const DriftSpec& drift, double beta0,
                                     std::size_t substeps, RngStream& rng);

/// Strips the drift integral from each increment and rescales by
/// sqrt(h*beta0); under the true beta0 the result is i.i.d. standard
/// normal.
std::vector<double> standardized_residuals(const SimulatedPath& path,
                                           double beta0);

}  // namespace diffest
