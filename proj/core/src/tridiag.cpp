#include "prandtl/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace prandtl {

PivotedTridiagLU::PivotedTridiagLU(const Tridiagonal& t, double shift) : n_(t.size()) {
  d_.resize(n_);
  u1_.assign(n_ > 1 ? n_ - 1 : 0, 0.0);
  u2_.assign(n_ > 2 ? n_ - 2 : 0, 0.0);
  l_.assign(n_ > 1 ? n_ - 1 : 0, 0.0);
  swapped_.assign(n_ > 1 ? n_ - 1 : 0, 0);

  std::vector<double> dl(n_ > 1 ? n_ - 1 : 0);
  for (std::size_t i = 0; i < n_; ++i) d_[i] = t.b[i] - shift;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    u1_[i] = t.c[i];
    dl[i] = t.a[i + 1];
  }

  min_pivot_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    if (std::abs(d_[i]) >= std::abs(dl[i])) {
      swapped_[i] = 0;
      if (d_[i] == 0.0) throw ShiftSingular("pivoted LU: exact zero pivot");
      const double fact = dl[i] / d_[i];
      l_[i] = fact;
      d_[i + 1] -= fact * u1_[i];
      if (i + 2 < n_) u2_[i] = 0.0;
    } else {
      swapped_[i] = 1;
      const double fact = d_[i] / dl[i];
      l_[i] = fact;
      d_[i] = dl[i];
      const double tmp = u1_[i];
      u1_[i] = d_[i + 1];
      d_[i + 1] = tmp - fact * d_[i + 1];
      if (i + 2 < n_) {
        u2_[i] = u1_[i + 1];
        u1_[i + 1] = -fact * u1_[i + 1];
      }
    }
    min_pivot_ = std::min(min_pivot_, std::abs(d_[i]));
  }
  if (d_[n_ - 1] == 0.0) throw ShiftSingular("pivoted LU: singular last pivot");
  min_pivot_ = std::min(min_pivot_, std::abs(d_[n_ - 1]));
}

void PivotedTridiagLU::solve(std::vector<double>& x) const {
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    if (swapped_[i]) std::swap(x[i], x[i + 1]);
    x[i + 1] -= l_[i] * x[i];
  }
  x[n_ - 1] /= d_[n_ - 1];
  if (n_ >= 2) x[n_ - 2] = (x[n_ - 2] - u1_[n_ - 2] * x[n_ - 1]) / d_[n_ - 2];
  for (std::size_t i = n_ - 2; i-- > 0;)
    x[i] = (x[i] - u1_[i] * x[i + 1] - u2_[i] * x[i + 2]) / d_[i];
}

}  // namespace prandtl
