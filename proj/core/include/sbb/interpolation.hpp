#pragma once

#include <vector>

#include "sbb/grid.hpp"

namespace sbb {

/// Shape-preserving monotone cubic interpolant (Fritsch–Carlson slopes).
/// Reproduces linear data exactly, never overshoots local data ranges, and
/// is monotone on monotone data. Outside the abscissa range it extends
/// linearly with the end slopes.
class PchipInterpolant {
 public:
  /// xs strictly increasing, same length as ys (>= 2 points).
  PchipInterpolant(std::vector<double> xs, std::vector<double> ys);

  double value(double x) const;
  double derivative(double x) const;

  double x_front() const { return xs_.front(); }
  double x_back() const { return xs_.back(); }

 private:
  int locate(double x) const;
  std::vector<double> xs_, ys_, slopes_;
};

/// Fritsch–Carlson endpoint/interior slopes for the nodes of (xs, ys).
std::vector<double> pchip_slopes(const std::vector<double>& xs,
                                 const std::vector<double>& ys);

/// Central differences on a uniform grid, one-sided at the boundary nodes.
std::vector<double> central_diff(const std::vector<double>& v, double dx);

/// Trapezoidal integral over a uniform grid.
double trapezoid(const std::vector<double>& v, double dx);

/// Running trapezoidal integral, out[0] = 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& v,
                                         double dx);

/// L2 isotonic regression (pool adjacent violators), then a strict gap of
/// eps is enforced between consecutive values. A no-op on inputs that are
/// already strictly increasing with gaps >= eps.
std::vector<double> isotonic_strict(const std::vector<double>& v,
                                    double eps = 1e-12);

}  // namespace sbb
