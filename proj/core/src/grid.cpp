#include "prandtl/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "prandtl/errors.hpp"

namespace prandtl {

Grid::Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 3) throw ConfigError("Grid: need at least 3 nodes");
  if (nodes_.front() != 0.0) throw ConfigError("Grid: first node must be 0");
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
    if (!(nodes_[i] < nodes_[i + 1])) throw ConfigError("Grid: nodes must be strictly increasing");

  weights_.assign(nodes_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const double h = nodes_[i + 1] - nodes_[i];
    weights_[i] += 0.5 * h;
    weights_[i + 1] += 0.5 * h;
  }
}

void Grid::d2_coeffs(std::size_t i, double c[3]) const {
  const double hl = nodes_[i] - nodes_[i - 1];
  const double hr = nodes_[i + 1] - nodes_[i];
  c[0] = 2.0 / (hl * (hl + hr));
  c[1] = -2.0 / (hl * hr);
  c[2] = 2.0 / (hr * (hl + hr));
}

void Grid::d1_coeffs(std::size_t i, double c[3]) const {
  const double hl = nodes_[i] - nodes_[i - 1];
  const double hr = nodes_[i + 1] - nodes_[i];
  c[0] = -hr / (hl * (hl + hr));
  c[1] = (hr - hl) / (hl * hr);
  c[2] = hl / (hr * (hl + hr));
}

double Grid::d1(std::size_t i, const std::vector<double>& v) const {
  double c[3];
  d1_coeffs(i, c);
  return c[0] * v[i - 1] + c[1] * v[i] + c[2] * v[i + 1];
}

double Grid::d2(std::size_t i, const std::vector<double>& v) const {
  double c[3];
  d2_coeffs(i, c);
  return c[0] * v[i - 1] + c[1] * v[i] + c[2] * v[i + 1];
}

double Grid::d1_boundary(bool left, const std::vector<double>& v) const {
  if (left) {
    const double h0 = nodes_[1] - nodes_[0];
    const double h1 = nodes_[2] - nodes_[1];
    const double a = -(2.0 * h0 + h1) / (h0 * (h0 + h1));
    const double b = (h0 + h1) / (h0 * h1);
    const double c = -h0 / (h1 * (h0 + h1));
    return a * v[0] + b * v[1] + c * v[2];
  }
  const std::size_t n = nodes_.size() - 1;
  const double h0 = nodes_[n] - nodes_[n - 1];
  const double h1 = nodes_[n - 1] - nodes_[n - 2];
  const double a = (2.0 * h0 + h1) / (h0 * (h0 + h1));
  const double b = -(h0 + h1) / (h0 * h1);
  const double c = h0 / (h1 * (h0 + h1));
  return a * v[n] + b * v[n - 1] + c * v[n - 2];
}

std::shared_ptr<const Grid> make_power_grid(double psi_max, std::size_t n_cells,
                                            double stretch) {
  if (psi_max <= 0.0) throw ConfigError("make_power_grid: psi_max must be positive");
  if (n_cells < 2) throw ConfigError("make_power_grid: need at least 2 cells");
  if (stretch < 1.0) throw ConfigError("make_power_grid: stretch must be >= 1");
  std::vector<double> nodes(n_cells + 1);
  for (std::size_t i = 0; i <= n_cells; ++i)
    nodes[i] = psi_max * std::pow(double(i) / double(n_cells), stretch);
  nodes[n_cells] = psi_max;
  return std::make_shared<Grid>(std::move(nodes));
}

}  // namespace prandtl
