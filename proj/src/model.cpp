#include "diffest/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace diffest {

std::string generator_tag() {
  return std::string(kGeneratorId) + "@" + std::to_string(kGeneratorVersion);
}

ObservationGrid::ObservationGrid(std::size_t n, double h) : n_(n), h_(h) {
  if (n == 0) {
    throw config_error("grid: sample count must be at least 1");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw config_error("grid: step must be positive and finite, got " +
                       std::to_string(h));
  }
}

ObservationGrid make_grid(std::size_t n, double h) {
  return ObservationGrid(n, h);
}

ObservationGrid make_grid_exponent(std::size_t n, double gamma) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw config_error("grid: step exponent must lie in (0, 1), got " +
                       std::to_string(gamma));
  }
  if (n == 0) {
    throw config_error("grid: sample count must be at least 1");
  }
  const double h = std::pow(static_cast<double>(n), -gamma);
  return ObservationGrid(n, h);
}

double ParamDomain::clamp(double beta) const {
  return std::min(std::max(beta, lower), upper);
}

void ParamDomain::validate() const {
  if (!(lower > 0.0) || !(lower < upper)) {
    throw config_error("parameter domain requires 0 < lower < upper");
  }
}

IncrementSeries::IncrementSeries(ObservationGrid grid,
                                 std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw data_error("increment series: expected " +
                     std::to_string(grid_.size()) + " values, got " +
                     std::to_string(values_.size()));
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j])) {
      throw data_error("increment series: non-finite value at index " +
                       std::to_string(j + 1));
    }
  }
}

GridGrowthReport check_grid_growth(const ObservationGrid& grid,
                                   double margin) {
  if (grid.size() < 2) {
    throw config_error("grid growth check needs at least 2 samples");
  }
  GridGrowthReport report;
  report.effective_exponent =
      std::log(grid.horizon()) / std::log(static_cast<double>(grid.size()));
  report.threshold = 0.5 - margin;
  report.pass = report.effective_exponent < report.threshold;
  return report;
}

}  // namespace diffest
