#include "dirac_kepler/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "dirac_kepler/errors.hpp"

namespace dk {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

void check_grid(std::span<const double> f, std::span<const double> r) {
  if (f.size() != r.size()) throw InvalidInput("function and grid sizes differ");
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1])) throw InvalidInput("grid must be strictly increasing");
  }
  for (double v : f) {
    if (!std::isfinite(v)) throw InvalidInput("sampled function must be finite");
  }
}

// Exact integral of the parabola through (x0,f0),(x1,f1),(x2,f2) over [x0, x2].
double simpson_panel(double x0, double x1, double x2, double f0, double f1, double f2) {
  const double h0 = x1 - x0;
  const double h1 = x2 - x1;
  const double s = h0 + h1;
  return s / 6.0 * ((2.0 - h1 / h0) * f0 + s * s / (h0 * h1) * f1 + (2.0 - h0 / h1) * f2);
}

// Integral of the same parabola over the last sub-interval [x1, x2] only.
double simpson_tail(double x0, double x1, double x2, double f0, double f1, double f2) {
  const double h0 = x1 - x0;
  const double h1 = x2 - x1;
  const double s = h0 + h1;
  return h1 / 6.0 *
         (-(h1 * h1) / (h0 * s) * f0 + (3.0 + h1 / h0) * f1 + (2.0 + h0 / s) * f2) ;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput("ln_gamma requires finite x > 0");
  if (x < 0.5) {
    // Reflection keeps the series in its accurate range.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - ln_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double generalized_laguerre(const LaguerreParams& p) {
  if (p.degree < 0) throw InvalidInput("Laguerre degree must be non-negative");
  if (!(p.order > -1.0)) throw InvalidInput("Laguerre order must exceed -1");
  if (p.degree == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + p.order - p.x;
  for (int k = 1; k < p.degree; ++k) {
    const double next = ((2.0 * k + 1.0 + p.order - p.x) * cur - (k + p.order) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double integrate(std::span<const double> f, std::span<const double> r, Quadrature rule) {
  check_grid(f, r);
  const std::size_t n = r.size();
  if (n < 2) return 0.0;
  double sum = 0.0;
  if (rule == Quadrature::trapezoid || n == 2) {
    for (std::size_t i = 1; i < n; ++i) sum += 0.5 * (r[i] - r[i - 1]) * (f[i] + f[i - 1]);
    return sum;
  }
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    sum += simpson_panel(r[i], r[i + 1], r[i + 2], f[i], f[i + 1], f[i + 2]);
  }
  if (i + 1 < n) {
    // Odd number of intervals: close with the parabola through the last three points.
    sum += simpson_tail(r[n - 3], r[n - 2], r[n - 1], f[n - 3], f[n - 2], f[n - 1]);
  }
  return sum;
}

double radial_norm(std::span<const double> f, std::span<const double> r, RadialMeasure measure,
                   Quadrature rule) {
  check_grid(f, r);
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    integrand[i] = f[i] * f[i] * (measure == RadialMeasure::full ? r[i] * r[i] : 1.0);
  }
  return integrate(integrand, r, rule);
}

}  // namespace dk
