#include "dirac_kepler/factorization.hpp"

#include <array>
#include <cmath>
#include <random>

#include "dirac_kepler/errors.hpp"

namespace dk {

namespace {

using Field = std::array<std::vector<double>, 2>;  // (u, v) on the grid

// Smooth bump times a random low-order trigonometric profile.
std::vector<double> test_profile(const std::vector<double>& r, double lo, double hi,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
  std::array<double, 3> a{}, p{};
  for (int k = 0; k < 3; ++k) {
    a[k] = amp(rng);
    p[k] = phase(rng);
  }
  std::vector<double> f(r.size(), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] <= lo || r[i] >= hi) continue;
    const double s = (r[i] - lo) / (hi - lo);
    const double bump = std::exp(-1.0 / (4.0 * s * (1.0 - s)) + 1.0);
    double trig = 1.0;
    for (int k = 0; k < 3; ++k) trig += 0.5 * a[k] * std::sin((k + 1) * 3.141592653589793 * s + p[k]);
    f[i] = bump * trig;
  }
  return f;
}

std::vector<double> central_diff(const std::vector<double>& f, double h) {
  std::vector<double> d(f.size(), 0.0);
  for (std::size_t i = 1; i + 1 < f.size(); ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  return d;
}

// Radial alpha.p on a sector: (u, v) -> (-v' + k v / r, u' + k u / r).
Field apply_momentum(const Field& x, const std::vector<double>& r, double h, int k) {
  const auto du = central_diff(x[0], h);
  const auto dv = central_diff(x[1], h);
  Field y{std::vector<double>(r.size()), std::vector<double>(r.size())};
  for (std::size_t i = 0; i < r.size(); ++i) {
    y[0][i] = -dv[i] + k * x[1][i] / r[i];
    y[1][i] = du[i] + k * x[0][i] / r[i];
  }
  return y;
}

// alpha.p + beta m* + sign (E - U), natural units.
Field apply_linear(const Field& x, const std::vector<double>& r, double h, int k,
                   const CouplingParams& c, double energy, double sign) {
  Field y = apply_momentum(x, r, h, k);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double mass = 1.0 + c.beta_s / r[i];
    const double shift = sign * (energy + c.alpha / r[i]);
    y[0][i] += (mass + shift) * x[0][i];
    y[1][i] += (-mass + shift) * x[1][i];
  }
  return y;
}

}  // namespace

Eigen::Matrix2d radial_barrier_coupling(int kappa, const CouplingParams& c,
                                        SigmaConvention convention) {
  // Sector basis (Omega_k, 0) and (0, i Omega_-k): rescale the projected
  // block by the phase of the lower basis vector.
  const TwoMatrix b = project_barrier_coupling(kappa, c, 1, convention).matrix;
  const cplx i{0.0, 1.0};
  Eigen::Matrix2cd m;
  m << b(0, 0), i * b(0, 1), -i * b(1, 0), b(1, 1);
  if (m.imag().norm() > 1e-12 * (1.0 + m.norm())) {
    throw Error("radial barrier coupling is not real in the (u, i v) basis");
  }
  return m.real();
}

double factorization_residual(int kappa, const CouplingParams& c, const FactorizationOptions& opts) {
  if (!(opts.step > 0.0) || !(opts.r_hi > opts.r_lo) || !(opts.r_lo > 0.0)) {
    throw InvalidInput("factorization grid requires 0 < r_lo < r_hi and step > 0");
  }
  if (!(opts.support_lo > opts.r_lo + 3 * opts.step && opts.support_hi < opts.r_hi - 3 * opts.step &&
        opts.support_hi > opts.support_lo)) {
    throw InvalidInput("test-function support must lie inside the grid interior");
  }
  const std::size_t n = static_cast<std::size_t>(std::llround((opts.r_hi - opts.r_lo) / opts.step)) + 1;
  const double h = (opts.r_hi - opts.r_lo) / static_cast<double>(n - 1);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = opts.r_lo + h * static_cast<double>(i);

  const double e = opts.energy;
  const double q = c.alpha * e - c.beta_s;
  const double barrier_diag = c.beta_s * c.beta_s - c.alpha * c.alpha;

  std::mt19937_64 rng(opts.seed);
  double num = 0.0, den = 0.0;
  for (int sector_kappa : {kappa, -kappa}) {
    const Eigen::Matrix2d coupling = radial_barrier_coupling(sector_kappa, c, opts.convention);
    Field phi{test_profile(r, opts.support_lo, opts.support_hi, rng),
              test_profile(r, opts.support_lo, opts.support_hi, rng)};

    const Field b_phi = apply_linear(phi, r, h, sector_kappa, c, e, +1.0);
    const Field ab_phi = apply_linear(b_phi, r, h, sector_kappa, c, e, -1.0);

    const Field p2 = apply_momentum(apply_momentum(phi, r, h, sector_kappa), r, h, sector_kappa);
    for (std::size_t i = 2; i + 2 < n; ++i) {
      const double inv_r = 1.0 / r[i];
      const double inv_r2 = inv_r * inv_r;
      const double u = phi[0][i], v = phi[1][i];
      const double rhs_u = p2[0][i] - 2.0 * q * inv_r * u +
                           (coupling(0, 0) * u + coupling(0, 1) * v + barrier_diag * u) * inv_r2 +
                           (1.0 - e * e) * u;
      const double rhs_v = p2[1][i] - 2.0 * q * inv_r * v +
                           (coupling(1, 0) * u + coupling(1, 1) * v + barrier_diag * v) * inv_r2 +
                           (1.0 - e * e) * v;
      const double du = ab_phi[0][i] - rhs_u;
      const double dv = ab_phi[1][i] - rhs_v;
      num += du * du + dv * dv;
      den += rhs_u * rhs_u + rhs_v * rhs_v;
    }
  }
  if (den == 0.0) throw InvalidInput("test function vanishes on the grid");
  return std::sqrt(num / den);
}

FactorizationReport verify_factorization(int kappa, const CouplingParams& c,
                                         const FactorizationOptions& opts) {
  if (kappa == 0) throw InvalidInput("kappa must be nonzero");
  FactorizationReport rep;
  rep.kappa = kappa;
  rep.couplings = c;
  try {
    radial_barrier_coupling(kappa, c, opts.convention);
  } catch (const DimensionMismatch& e) {
    rep.inconsistency = e.what();
    return rep;
  }
  FactorizationOptions level = opts;
  for (int k = 0; k < 2; ++k) {
    rep.levels.push_back({level.step, factorization_residual(kappa, c, level)});
    level.step *= 0.5;
  }
  const double coarse = rep.levels[0].relative_residual;
  const double fine = rep.levels[1].relative_residual;
  rep.observed_order = (coarse > 0.0 && fine > 0.0) ? std::log2(coarse / fine) : 0.0;
  return rep;
}

}  // namespace dk
