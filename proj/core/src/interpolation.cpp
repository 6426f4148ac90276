#include "sbb/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace sbb {

std::vector<double> pchip_slopes(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  std::vector<double> m(n, 0.0);
  if (n == 2) {
    m[0] = m[1] = (ys[1] - ys[0]) / (xs[1] - xs[0]);
    return m;
  }
  std::vector<double> h(n - 1), d(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    h[i] = xs[i + 1] - xs[i];
    d[i] = (ys[i + 1] - ys[i]) / h[i];
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0) != (d[i] > 0)) {
      m[i] = 0.0;  // local extremum
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  // Shape-preserving three-point endpoint formula.
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0)
      s = 0.0;
    else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0))
      s = 3.0 * d0;
    return s;
  };
  m[0] = endpoint(h[0], h[1], d[0], d[1]);
  m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return m;
}

PchipInterpolant::PchipInterpolant(std::vector<double> xs,
                                   std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size() || xs_.size() < 2)
    throw Error("PchipInterpolant: need >= 2 matching points");
  for (size_t i = 0; i + 1 < xs_.size(); ++i)
    if (!(xs_[i] < xs_[i + 1]))
      throw Error("PchipInterpolant: abscissae must be strictly increasing");
  slopes_ = pchip_slopes(xs_, ys_);
}

int PchipInterpolant::locate(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  int i = static_cast<int>(it - xs_.begin()) - 1;
  i = std::clamp(i, 0, static_cast<int>(xs_.size()) - 2);
  return i;
}

double PchipInterpolant::value(double x) const {
  if (x <= xs_.front())
    return ys_.front() + slopes_.front() * (x - xs_.front());
  if (x >= xs_.back()) return ys_.back() + slopes_.back() * (x - xs_.back());
  const int i = locate(x);
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] +
         h11 * h * slopes_[i + 1];
}

double PchipInterpolant::derivative(double x) const {
  if (x <= xs_.front()) return slopes_.front();
  if (x >= xs_.back()) return slopes_.back();
  const int i = locate(x);
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6 * t2 - 6 * t) / h;
  const double dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = (-6 * t2 + 6 * t) / h;
  const double dh11 = 3 * t2 - 2 * t;
  return dh00 * ys_[i] + dh10 * slopes_[i] + dh01 * ys_[i + 1] +
         dh11 * slopes_[i + 1];
}

std::vector<double> central_diff(const std::vector<double>& v, double dx) {
  const int n = static_cast<int>(v.size());
  std::vector<double> d(n);
  if (n < 2) throw Error("central_diff: need >= 2 values");
  d[0] = (v[1] - v[0]) / dx;
  d[n - 1] = (v[n - 1] - v[n - 2]) / dx;
  for (int i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * dx);
  return d;
}

double trapezoid(const std::vector<double>& v, double dx) {
  double s = 0.0;
  for (size_t i = 0; i + 1 < v.size(); ++i) s += 0.5 * (v[i] + v[i + 1]);
  return s * dx;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& v,
                                         double dx) {
  std::vector<double> c(v.size(), 0.0);
  for (size_t i = 1; i < v.size(); ++i)
    c[i] = c[i - 1] + 0.5 * (v[i - 1] + v[i]) * dx;
  return c;
}

std::vector<double> isotonic_strict(const std::vector<double>& v, double eps) {
  const int n = static_cast<int>(v.size());
  // PAVA with uniform weights.
  std::vector<double> mean;
  std::vector<int> count;
  mean.reserve(n);
  count.reserve(n);
  for (int i = 0; i < n; ++i) {
    mean.push_back(v[i]);
    count.push_back(1);
    while (mean.size() >= 2 && mean[mean.size() - 2] > mean.back()) {
      const double m2 = mean.back();
      const int c2 = count.back();
      mean.pop_back();
      count.pop_back();
      const double m1 = mean.back();
      const int c1 = count.back();
      mean.back() = (m1 * c1 + m2 * c2) / (c1 + c2);
      count.back() = c1 + c2;
    }
  }
  std::vector<double> out;
  out.reserve(n);
  for (size_t b = 0; b < mean.size(); ++b)
    out.insert(out.end(), count[b], mean[b]);
  for (int i = 1; i < n; ++i)
    if (out[i] < out[i - 1] + eps) out[i] = out[i - 1] + eps;
  return out;
}

}  // namespace sbb
