#include "diffest/simulate.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace diffest {

namespace {

void require_positive_beta(double beta0) {
  if (!(beta0 > 0.0) || !std::isfinite(beta0)) {
    throw config_error("simulate: beta0 must be positive and finite, got " +
                       std::to_string(beta0));
  }
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw config_error(std::string("drift: ") + name + " must be finite");
  }
}

}  // namespace

void validate_drift(const DriftSpec& drift) {
  if (const auto* c = std::get_if<ConstantDrift>(&drift)) {
    require_finite(c->alpha, "alpha");
  } else if (const auto* s = std::get_if<SinusoidalDrift>(&drift)) {
    require_finite(s->amplitude, "amplitude");
    require_finite(s->angular_frequency, "angular frequency");
  } else if (const auto* ou = std::get_if<OrnsteinUhlenbeckDrift>(&drift)) {
    if (!(ou->mean_reversion > 0.0) || !std::isfinite(ou->mean_reversion)) {
      throw config_error("drift: mean reversion must be positive, got " +
                         std::to_string(ou->mean_reversion));
    }
    if (!(ou->vol >= 0.0) || !std::isfinite(ou->vol)) {
      throw config_error("drift: vol must be nonnegative, got " +
                         std::to_string(ou->vol));
    }
    require_finite(ou->level, "level");
    if (ou->initial) {
      require_finite(*ou->initial, "initial value");
    }
  }
}

SimulatedPath simulate_general_drift(const ObservationGrid& grid,
                                     const DriftSpec& drift, double beta0,
                                     std::size_t substeps, RngStream& rng) {
  require_positive_beta(beta0);
  if (substeps == 0) {
    throw config_error("simulate: substep count must be at least 1");
  }
  validate_drift(drift);

  const std::size_t n = grid.size();
  const double h = grid.step();
  const double delta = h / static_cast<double>(substeps);
  const double noise_scale = std::sqrt(beta0 * h);

  // Per-increment drift integral, consuming the stream only where the
  // drift itself is random. The substep quadrature is left-endpoint; for
  // flat integrands that collapses to the exact alpha*h for any substep
  // count, so it is computed in closed form there.
  std::function<double(std::size_t)> integral_for_step;

  if (std::holds_alternative<ZeroDrift>(drift)) {
    integral_for_step = [](std::size_t) { return 0.0; };
  } else if (const auto* c = std::get_if<ConstantDrift>(&drift)) {
    const double step_integral = c->alpha * h;
    integral_for_step = [step_integral](std::size_t) { return step_integral; };
  } else if (const auto* s = std::get_if<SinusoidalDrift>(&drift)) {
    const double amp = s->amplitude;
    const double omega = s->angular_frequency;
    integral_for_step = [&grid, delta, substeps, amp, omega](std::size_t j) {
      const double t_left = grid.time(j - 1);
      double sum = 0.0;
      for (std::size_t k = 0; k < substeps; ++k) {
        sum += amp * std::sin(omega * (t_left + static_cast<double>(k) * delta));
      }
      return sum * delta;
    };
  } else {
    const auto& ou = std::get<OrnsteinUhlenbeckDrift>(drift);
    const double kappa = ou.mean_reversion;
    const double level = ou.level;
    const double vol = ou.vol;
    const double decay = std::exp(-kappa * delta);
    const double innovation_sd =
        vol > 0.0 ? vol * std::sqrt((1.0 - decay * decay) / (2.0 * kappa))
                  : 0.0;
    double state;
    if (ou.initial) {
      state = *ou.initial;
    } else if (vol > 0.0) {
      state = level + vol / std::sqrt(2.0 * kappa) * rng.normal();
    } else {
      state = level;
    }
    integral_for_step = [&rng, state, substeps, delta, level, decay,
                         innovation_sd, vol](std::size_t) mutable {
      double sum = 0.0;
      for (std::size_t k = 0; k < substeps; ++k) {
        sum += state;
        state = level + (state - level) * decay;
        if (vol > 0.0) {
          state += innovation_sd * rng.normal();
        }
      }
      return sum * delta;
    };
  }

  std::vector<double> integrals(n);
  std::vector<double> x(n + 1);
  x[0] = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    integrals[j - 1] = integral_for_step(j);
    const double increment = integrals[j - 1] + noise_scale * rng.normal();
    x[j] = x[j - 1] + increment;
  }

  // Increments are re-derived as level differences so that
  // values[j] == x[j+1] - x[j] holds bit-for-bit.
  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = x[j + 1] - x[j];
  }

  return SimulatedPath{grid, std::move(x),
                       IncrementSeries(grid, std::move(values)),
                       std::move(integrals), rng.seed_record()};
}

SimulatedPath simulate_constant_drift(const ObservationGrid& grid,
                                      double alpha, double beta0,
                                      RngStream& rng) {
  return simulate_general_drift(grid, ConstantDrift{alpha}, beta0, 1, rng);
}

std::vector<double> standardized_residuals(const SimulatedPath& path,
                                           double beta0) {
  require_positive_beta(beta0);
  const double scale = std::sqrt(path.grid.step() * beta0);
  const auto& dx = path.increments.values();
  std::vector<double> residuals(dx.size());
  for (std::size_t j = 0; j < dx.size(); ++j) {
    residuals[j] = (dx[j] - path.drift_integrals[j]) / scale;
  }
  return residuals;
}

}  // namespace diffest
