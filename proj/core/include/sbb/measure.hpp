#pragma once

#include <vector>

#include "sbb/grid.hpp"
#include "sbb/interpolation.hpp"

namespace sbb {

class MonotoneMap;

/// Probability measure on a Grid1D given by nonnegative density values at
/// the nodes. The constructor renormalizes so the trapezoidal integral is
/// exactly 1; the nodal CDF is cached for quantile evaluation. Immutable
/// after construction.
class Measure1D {
 public:
  Measure1D(Grid1D grid, std::vector<double> density);

  const Grid1D& grid() const { return grid_; }
  const std::vector<double>& density() const { return density_; }
  const std::vector<double>& cdf_nodes() const { return cdf_; }

  /// Trapezoidal CDF evaluated with the exact in-cell quadratic (the
  /// density is treated as piecewise linear between nodes).
  double cdf(double x) const;

  /// Inverse CDF. u must lie in (0, 1); inverts the in-cell quadratic.
  double quantile(double u) const;

  double mean() const;
  double variance() const;

 private:
  Grid1D grid_;
  std::vector<double> density_;
  std::vector<double> cdf_;  // nodal CDF, cdf_[0] = 0, cdf_[n-1] = 1
};

/// Gaussian density restricted to the grid and renormalized. The grid must
/// cover mean +- 6 sqrt(variance); otherwise a DomainTooSmallError is
/// raised.
Measure1D make_gaussian(const Grid1D& grid, double mean, double variance);

/// Equal-grid mixture of Gaussians with the same 6-sigma coverage rule per
/// component. weights must be positive; they are normalized internally.
Measure1D make_gaussian_mixture(const Grid1D& grid,
                                const std::vector<double>& weights,
                                const std::vector<double>& means,
                                const std::vector<double>& variances);

/// Image measure of m under a strictly increasing map defined on m's grid,
/// evaluated on target_grid. Density is computed by quantile composition:
/// the inverse map is interpolated monotonically and the change-of-variables
/// density f(x(z)) * x'(z) is evaluated at the target nodes (zero outside
/// the image of the map). The result is renormalized.
Measure1D pushforward_monotone(const Measure1D& m, const MonotoneMap& map,
                               const Grid1D& target_grid);

/// Same, with the target grid spanning the image of the map (same node
/// count as m's grid). Under the identity map this returns m unchanged.
Measure1D pushforward_monotone(const Measure1D& m, const MonotoneMap& map);

/// Resample a measure onto another grid by monotone density interpolation
/// (zero outside the source domain), then renormalize.
Measure1D resample(const Measure1D& m, const Grid1D& target_grid);

/// log(max(num_i, floor) / max(den_i, floor)) at every node. Both measures
/// must share a grid; the result is finite everywhere.
std::vector<double> log_density_ratio(const Measure1D& num,
                                      const Measure1D& den, double floor);

/// 2-Wasserstein distance via the quantile representation,
/// sqrt(int_0^1 |qa - qb|^2 du) by the midpoint rule on n_quantiles points.
double wasserstein2(const Measure1D& a, const Measure1D& b,
                    int n_quantiles = 1000);

/// Free-function form of Measure1D::quantile with range checking.
double quantile_function(const Measure1D& m, double u);

}  // namespace sbb
