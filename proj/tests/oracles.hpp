#pragma once
// Independent reference values for the tests. Nothing here calls the library.

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// <j1 m1; j2 m2 | J M> by the Racah formula; all arguments doubled.
inline double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  if (tm1 + tm2 != tM) return 0.0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) return 0.0;
  const int a = (tj1 + tj2 - tJ) / 2, b = (tj1 - tj2 + tJ) / 2, c = (-tj1 + tj2 + tJ) / 2;
  const int d = (tj1 + tj2 + tJ) / 2 + 1;
  const double pre = std::sqrt((tJ + 1) * factorial(a) * factorial(b) * factorial(c) / factorial(d));
  const double ms = std::sqrt(factorial((tj1 + tm1) / 2) * factorial((tj1 - tm1) / 2) *
                              factorial((tj2 + tm2) / 2) * factorial((tj2 - tm2) / 2) *
                              factorial((tJ + tM) / 2) * factorial((tJ - tM) / 2));
  double sum = 0.0;
  for (int k = 0; k <= a + b + c; ++k) {
    const int d1 = a - k, d2 = (tj1 - tm1) / 2 - k, d3 = (tj2 + tm2) / 2 - k;
    const int d4 = (tJ - tj2 + tm1) / 2 + k, d5 = (tJ - tj1 - tm2) / 2 + k;
    if (d1 < 0 || d2 < 0 || d3 < 0 || d4 < 0 || d5 < 0) continue;
    sum += (k % 2 ? -1.0 : 1.0) /
           (factorial(k) * factorial(d1) * factorial(d2) * factorial(d3) * factorial(d4) * factorial(d5));
  }
  return pre * ms * sum;
}

/// Effective angular momentum in long double, from (j, upper sign?).
inline long double l_star(long double j, bool upper, long double alpha, long double beta_s) {
  const long double root = std::sqrt((j + 0.5L) * (j + 0.5L) + beta_s * beta_s - alpha * alpha);
  return root - 0.5L - (upper ? 0.5L : -0.5L);
}

/// Dirac-Coulomb energy with radial number n' and |kappa|.
inline double sommerfeld(int n_prime, int abs_kappa, double alpha) {
  const double g0 = std::sqrt(double(abs_kappa * abs_kappa) - alpha * alpha);
  return 1.0 / std::sqrt(1.0 + alpha * alpha / ((n_prime + g0) * (n_prime + g0)));
}

/// L_n^(nu)(x) from the explicit sum in long double, plus the sum of |terms|
/// as a cancellation scale.
inline std::pair<double, double> laguerre_series(int n, double nu, double x) {
  long double s = 0.0L, mag = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const long double binom = std::exp(std::lgamma(n + nu + 1.0L) - std::lgamma(n - k + 1.0L) -
                                       std::lgamma(nu + k + 1.0L));
    const long double term = binom * std::pow((long double)x, k) / factorial(k);
    s += (k % 2 ? -term : term);
    mag += term;
  }
  return {double(s), double(mag)};
}

/// ln((n-1)!) by direct summation.
inline double ln_factorial_gamma(int n) {
  double s = 0.0;
  for (int i = 2; i < n; ++i) s += std::log(double(i));
  return s;
}

/// Residual of -u''/2 - q u/r + l(l+1) u/(2 r^2) - (E^2-1) u/2 with u = r R,
/// using a 5-point second derivative. Returns max |residual| / max |term|.
inline double schroedinger_residual(const std::function<double(double)>& R, double q, double l, double E,
                                    double r_lo, double r_hi, double h) {
  auto u = [&](double r) { return r * R(r); };
  double worst = 0.0, scale = 0.0;
  for (double r = r_lo; r <= r_hi; r += 0.01) {
    const double upp =
        (-u(r + 2 * h) + 16 * u(r + h) - 30 * u(r) + 16 * u(r - h) - u(r - 2 * h)) / (12 * h * h);
    const double t1 = -0.5 * upp, t2 = -q * u(r) / r, t3 = l * (l + 1) * u(r) / (2 * r * r),
                 t4 = -(E * E - 1) * u(r) / 2;
    worst = std::max(worst, std::abs(t1 + t2 + t3 + t4));
    scale = std::max({scale, std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4)});
  }
  return worst / scale;
}

/// Sign changes of f on the sample, ignoring values below `floor` relative to max |f|.
inline int sign_changes(const std::vector<double>& f, double floor = 1e-10) {
  double big = 0.0;
  for (double v : f) big = std::max(big, std::abs(v));
  int n = 0, last = 0;
  for (double v : f) {
    if (std::abs(v) <= floor * big) continue;
    const int s = v > 0 ? 1 : -1;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

}  // namespace oracle
