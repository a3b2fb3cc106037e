#pragma once

#include <span>

namespace dk {

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, 9 terms; relative error ~1e-15).
double ln_gamma(double x);

struct LaguerreParams {
  int degree = 0;     // n_r >= 0
  double order = 0.0; // nu > -1, not necessarily integer
  double x = 0.0;     // >= 0
};

/// Generalized Laguerre polynomial L_n^(nu)(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k + 1 + nu - x) L_k - (k + nu) L_{k-1}.
double generalized_laguerre(const LaguerreParams& p);

/// Which radial measure radial_norm integrates against.
enum class RadialMeasure {
  /// int f^2 dr, for reduced functions u = r R.
  reduced,
  /// int f^2 r^2 dr.
  full,
};

/// Quadrature rule used by integrate().
enum class Quadrature { trapezoid, simpson };

/// int f dr over a strictly increasing (possibly non-uniform) grid.
double integrate(std::span<const double> f, std::span<const double> r,
                 Quadrature rule = Quadrature::simpson);

/// int f(r)^2 w(r) dr with w = 1 (reduced) or r^2 (full).
double radial_norm(std::span<const double> f, std::span<const double> r,
                   RadialMeasure measure = RadialMeasure::reduced,
                   Quadrature rule = Quadrature::simpson);

}  // namespace dk
