#pragma once

#include <iosfwd>
#include <vector>

namespace prandtl {

/*
 * Dense tabulation of the similarity function f and its derivatives on a
 * uniform eta grid, produced by shooting. Immutable after construction and
 * safe to share across threads; every profile evaluation in the project goes
 * through this table.
 *
 * Beyond eta_max the far field is exact to double precision:
 * f = f(eta_max) + (eta - eta_max), f' = 1, f'' = f''' = 0.
 */
struct BlasiusTable {
  double eta_max = 0.0;
  double step = 0.0;
  double fpp0 = 0.0;                 // shooting parameter f''(0)
  std::vector<double> nodes;         // eta_i, uniform
  std::vector<double> f, fp, fpp, fppp;
  std::vector<double> f_cumint;      // F(eta) = int_0^eta f, for smooth f'' evaluation

  double f_end() const { return f.back(); }
  /* eta - f(eta) -> const for large eta; the far-field displacement */
  double far_offset() const { return eta_max - f.back(); }
};

struct FDeriv {
  double f, fp, fpp, fppp;
};

struct ProfilePoint {
  double ubar;     // streamwise velocity
  double vbar;     // wall-normal velocity
  double ubar_y;   // d ubar / dy
  double ubar_yy;  // d^2 ubar / dy^2
};

/*
 * Shoot for f''(0) by bisection on [0.1, 1.0] so that f'(eta_max) = 1 within
 * tol, integrating f''' = -1/2 f f'' with classical fixed-step RK4.
 * Throws NonConvergence when the bracket closes without meeting tol.
 */
BlasiusTable solve_blasius(double eta_max = 12.0, double step = 1e-4, double tol = 1e-10);

/* Evaluate (f, f', f'', f''') anywhere on eta >= 0. f and f' use cubic
 * Hermite interpolation with the tabulated exact slopes; f'' uses the
 * quadrature identity f''(eta) = f''(0) exp(-1/2 int_0^eta f), which keeps it
 * positive, monotone decreasing and C^1; f''' = -1/2 f f''. */
FDeriv eval_f(const BlasiusTable& table, double eta);

/* Monotone inverse: eta with f(eta) = psi_scaled to 1e-10 or better. */
double inverse_f(const BlasiusTable& table, double psi_scaled);

/* Blasius velocity field at physical (x, y), eta = y / sqrt(x+1). */
ProfilePoint eval_profile(const BlasiusTable& table, double x, double y);

/* ubar in von Mises variables: f'(f^{-1}(zeta)), zeta = psi / sqrt(X+1). */
double ubar_vonmises(const BlasiusTable& table, double zeta);

/* CSV dump, header `eta,f,fp,fpp,fppp`, full double precision. */
void dump_csv(const BlasiusTable& table, std::ostream& os);

}  // namespace prandtl
