#pragma once

#include <optional>
#include <variant>

#include "diffest/common.hpp"

namespace diffest {

// Nuisance drift menu for X_t = int_0^t mu_s ds + sqrt(beta) * w_t. The
// estimators never look at mu; it exists to stress the bias they are
// supposed to shrug off.

struct ZeroDrift {};

struct ConstantDrift {
  double alpha = 0.0;
};

/// mu(t) = amplitude * sin(angular_frequency * t)
struct SinusoidalDrift {
  double amplitude = 0.0;
  double angular_frequency = 1.0;
};

/// Mean-reverting Gaussian drift with exact transitions on the substep
/// lattice. When `initial` is unset the path starts from the stationary
/// law N(level, vol^2 / (2 * mean_reversion)), which keeps the second
/// moment bounded uniformly in time.
struct OrnsteinUhlenbeckDrift {
  double mean_reversion = 1.0;
  double level = 0.0;
  double vol = 0.0;
  std::optional<double> initial{};
};

using DriftSpec = std::variant<ZeroDrift, ConstantDrift, SinusoidalDrift,
                               OrnsteinUhlenbeckDrift>;

void validate_drift(const DriftSpec& drift);

/// Ground truth of a simulation scenario.
struct TrueParams {
  double beta0 = 1.0;
  DriftSpec drift = ZeroDrift{};
};

}  // namespace diffest
