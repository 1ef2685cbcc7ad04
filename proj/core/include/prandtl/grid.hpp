#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace prandtl {

/*
 * Nonuniform node set on [0, psi_max] with trapezoid quadrature weights and
 * 3-point difference stencils. The power-law family psi_i = psi_max*(i/n)^s
 * with s=2 puts spacing ~ sqrt(psi) near the degenerate wall, which is what
 * the sqrt(w) ~ sqrt(psi) coefficient needs.
 */
class Grid {
 public:
  Grid(std::vector<double> nodes);

  std::size_t size() const { return nodes_.size(); }        // node count (n+1)
  std::size_t cells() const { return nodes_.size() - 1; }
  double psi_max() const { return nodes_.back(); }
  double node(std::size_t i) const { return nodes_[i]; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double spacing(std::size_t cell) const { return nodes_[cell + 1] - nodes_[cell]; }

  /* second-derivative stencil at interior node i: c[0]*v[i-1]+c[1]*v[i]+c[2]*v[i+1] */
  void d2_coeffs(std::size_t i, double c[3]) const;
  /* first-derivative stencil at interior node i */
  void d1_coeffs(std::size_t i, double c[3]) const;

  double d1(std::size_t i, const std::vector<double>& v) const;   // interior
  double d2(std::size_t i, const std::vector<double>& v) const;   // interior
  /* one-sided first derivative at the ends (second order) */
  double d1_boundary(bool left, const std::vector<double>& v) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

std::shared_ptr<const Grid> make_power_grid(double psi_max, std::size_t n_cells,
                                            double stretch = 2.0);

}  // namespace prandtl
