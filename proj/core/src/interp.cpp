#include "prandtl/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prandtl {

std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw std::invalid_argument("pchip_slopes: bad input sizes");
  std::vector<double> d(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      // harmonic mean weighted by cell widths
      const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
      const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  return m;
}

namespace {

/* Fritsch-Carlson limiter: pull (m_i, m_{i+1}) into the circle of radius 3|d|. */
void limit_slopes(std::span<const double> x, std::span<const double> y,
                  std::vector<double>& m) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    if (d == 0.0) {
      m[i] = 0.0;
      m[i + 1] = 0.0;
      continue;
    }
    const double a = m[i] / d, b = m[i + 1] / d;
    if (a < 0.0) m[i] = 0.0;
    if (b < 0.0) m[i + 1] = 0.0;
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double t = 3.0 / std::sqrt(r);
      m[i] = t * a * d;
      m[i + 1] = t * b * d;
    }
  }
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
  m_ = pchip_slopes(x, y);
}

MonotoneCubic::MonotoneCubic(std::span<const double> x, std::span<const double> y,
                             std::span<const double> dydx)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()), m_(dydx.begin(), dydx.end()) {
  if (m_.size() != x_.size()) throw std::invalid_argument("MonotoneCubic: slope size mismatch");
  limit_slopes(x, y, m_);
}

std::size_t MonotoneCubic::cell(double xq) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), xq);
  if (it == x_.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double MonotoneCubic::operator()(double xq) const {
  const std::size_t i = cell(xq);
  const double h = x_[i + 1] - x_[i];
  const double t = (xq - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double MonotoneCubic::derivative(double xq) const {
  const std::size_t i = cell(xq);
  const double h = x_[i + 1] - x_[i];
  const double t = (xq - x_[i]) / h;
  const double t2 = t * t;
  const double g00 = (6 * t2 - 6 * t) / h, g10 = 3 * t2 - 4 * t + 1;
  const double g01 = (-6 * t2 + 6 * t) / h, g11 = 3 * t2 - 2 * t;
  return g00 * y_[i] + g10 * m_[i] + g01 * y_[i + 1] + g11 * m_[i + 1];
}

}  // namespace prandtl
