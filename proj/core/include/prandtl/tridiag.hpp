#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "prandtl/errors.hpp"

namespace prandtl {

/* Tridiagonal system a[i]*x[i-1] + b[i]*x[i] + c[i]*x[i+1] = r[i].
 * a[0] and c[n-1] are ignored. */
struct Tridiagonal {
  std::vector<double> a, b, c;

  std::size_t size() const { return b.size(); }

  /* Thomas algorithm, no pivoting. Safe for the diagonally dominant
   * M-matrices the implicit marcher produces. */
  void solve(const std::vector<double>& rhs, std::vector<double>& x) const {
    const std::size_t n = size();
    thread_local std::vector<double> cp;
    cp.resize(n);
    x.resize(n);
    if (b[0] == 0.0) throw LinearSolveFailure("tridiagonal: zero pivot in row 0");
    cp[0] = c[0] / b[0];
    x[0] = rhs[0] / b[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double den = b[i] - a[i] * cp[i - 1];
      if (den == 0.0 || !std::isfinite(den))
        throw LinearSolveFailure("tridiagonal: pivot breakdown");
      const double inv = 1.0 / den;
      cp[i] = c[i] * inv;
      x[i] = (rhs[i] - a[i] * x[i - 1]) * inv;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= cp[i] * x[i + 1];
  }
};

/*
 * LU factorization of a (possibly shifted, non-symmetric) tridiagonal matrix
 * with partial pivoting. Pivoting introduces one extra superdiagonal. Used by
 * the shifted inverse iteration, where the matrix is nearly singular on
 * purpose and Thomas would be unreliable.
 */
class PivotedTridiagLU {
 public:
  PivotedTridiagLU(const Tridiagonal& t, double shift);

  /* Solve (T - shift*I) x = rhs in place. */
  void solve(std::vector<double>& x) const;
  double min_pivot() const { return min_pivot_; }

 private:
  std::size_t n_;
  std::vector<double> d_, u1_, u2_;  // diagonal, first and second superdiag of U
  std::vector<double> l_;            // multipliers
  std::vector<int> swapped_;
  double min_pivot_ = 0.0;
};

}  // namespace prandtl
