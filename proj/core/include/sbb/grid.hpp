#pragma once

#include <cmath>
#include <vector>

#include "sbb/errors.hpp"

namespace sbb {

/// Uniform 1D spatial grid. All fields, maps and densities in the library
/// are sampled at its nodes.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n = 0;

  Grid1D() = default;
  Grid1D(double lo, double hi, int nodes) : x_min(lo), x_max(hi), n(nodes) {
    if (!(x_min < x_max)) throw Error("Grid1D: x_min must be < x_max");
    if (n < 16) throw Error("Grid1D: need at least 16 nodes");
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
      throw Error("Grid1D: bounds must be finite");
  }

  double dx() const { return (x_max - x_min) / (n - 1); }
  double node(int i) const { return x_min + i * dx(); }

  std::vector<double> nodes() const {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = node(i);
    return xs;
  }

  /// Index of the cell [node(i), node(i+1)] containing x, clamped to
  /// [0, n-2].
  int cell_of(double x) const {
    int i = static_cast<int>(std::floor((x - x_min) / dx()));
    if (i < 0) i = 0;
    if (i > n - 2) i = n - 2;
    return i;
  }

  bool operator==(const Grid1D& o) const {
    return x_min == o.x_min && x_max == o.x_max && n == o.n;
  }
  bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

inline void require_same_grid(const Grid1D& a, const Grid1D& b,
                              const char* where) {
  if (a != b) throw GridMismatchError(std::string(where) + ": grid mismatch");
}

}  // namespace sbb
