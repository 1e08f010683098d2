#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "diffest/common.hpp"

namespace diffest {

/// Equidistant sampling design: n observations taken h time units apart.
/// The horizon T = n*h is always derived, never stored.
class ObservationGrid {
 public:
  ObservationGrid(std::size_t n, double h);

  std::size_t size() const { return n_; }
  double step() const { return h_; }
  double horizon() const { return static_cast<double>(n_) * h_; }
  double time(std::size_t j) const { return static_cast<double>(j) * h_; }

 private:
  std::size_t n_;
  double h_;
};

ObservationGrid make_grid(std::size_t n, double h);

// Step chosen as h = n^(-gamma), gamma in (0, 1); the horizon then grows
// like n^(1-gamma).
ObservationGrid make_grid_exponent(std::size_t n, double gamma);

/// Admissible range for the diffusion parameter. The recursion only needs
/// positivity; the tiny default floor keeps the generic projection step
/// well-defined.
struct ParamDomain {
  double lower = 1e-10;
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double beta) const { return beta >= lower && beta <= upper; }
  double clamp(double beta) const;
  void validate() const;
};

/// The observed increments X(t_j) - X(t_{j-1}), j = 1..n. This is the only
/// data the estimators ever see.
class IncrementSeries {
 public:
  IncrementSeries(ObservationGrid grid, std::vector<double> values);

  const ObservationGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  ObservationGrid grid_;
  std::vector<double> values_;
};

/// Result of the horizon-growth design check: the recursion's theory wants
/// T = n*h to grow strictly slower than sqrt(n). For a single design the
/// realized exponent log(T)/log(n) is the honest finite-sample surrogate.
struct GridGrowthReport {
  double effective_exponent = 0.0;
  double threshold = 0.5;
  bool pass = false;
};

// `margin` tightens the test: pass iff exponent < 1/2 - margin.
GridGrowthReport check_grid_growth(const ObservationGrid& grid,
                                   double margin = 0.0);

}  // namespace diffest
