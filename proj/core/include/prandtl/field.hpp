#pragma once

#include <memory>
#include <vector>

#include "prandtl/errors.hpp"
#include "prandtl/grid.hpp"

namespace prandtl {

/* One scalar (w, phi, u, A, ...) sampled on a Grid at a fixed station X.
 * Plain value type: copy/move freely, no shared mutable state. */
struct Field {
  std::shared_ptr<const Grid> grid;
  double station = 0.0;
  std::vector<double> values;

  Field() = default;
  Field(std::shared_ptr<const Grid> g, double X)
      : grid(std::move(g)), station(X), values(grid->size(), 0.0) {}
  Field(std::shared_ptr<const Grid> g, double X, std::vector<double> v)
      : grid(std::move(g)), station(X), values(std::move(v)) {
    if (values.size() != grid->size()) throw GridMismatch("Field: value/node count mismatch");
  }

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

inline void require_same_frame(const Field& a, const Field& b, const char* what) {
  if (a.grid.get() != b.grid.get() || a.size() != b.size())
    throw GridMismatch(std::string(what) + ": fields live on different grids");
}

}  // namespace prandtl
