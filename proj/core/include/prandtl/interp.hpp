#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace prandtl {

/*
 * Shape-preserving piecewise-cubic interpolation (Fritsch-Carlson limited
 * Hermite). Used wherever a field has to be resampled between grids: the
 * similarity-frame transform, solution rescaling, and stream-function
 * inversion. Monotone data stays monotone through the interpolant.
 */
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::span<const double> x, std::span<const double> y);
  /* Hermite variant: caller supplies exact derivatives; they are limited
   * only where they would break monotonicity of the data. */
  MonotoneCubic(std::span<const double> x, std::span<const double> y,
                std::span<const double> dydx);

  double operator()(double xq) const;
  double derivative(double xq) const;
  std::size_t size() const { return x_.size(); }

 private:
  std::size_t cell(double xq) const;
  std::vector<double> x_, y_, m_;
};

/* Limited slopes for tabulated data (Fritsch-Carlson). */
std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y);

}  // namespace prandtl
