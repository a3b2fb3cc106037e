#include "dirac_kepler/angular_algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "dirac_kepler/errors.hpp"

namespace dk {

namespace {

constexpr cplx I{0.0, 1.0};

Eigen::Vector4cd four_spinor(const TwoSpinorSample& up, const TwoSpinorSample& down) {
  Eigen::Vector4cd v;
  v << up.upper, up.lower, down.upper, down.lower;
  return v;
}

Eigen::MatrixXcd checked_product(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs) {
  if (lhs.cols() != rhs.rows()) {
    std::ostringstream os;
    os << "cannot apply a " << lhs.rows() << "x" << lhs.cols() << " matrix to a " << rhs.rows()
       << "-component object";
    throw DimensionMismatch(os.str());
  }
  return lhs * rhs;
}

void check_mj(int kappa, int two_mj) {
  if (kappa == 0) throw InvalidInput("kappa must be nonzero");
  const int two_j = 2 * std::abs(kappa) - 1;
  if (std::abs(two_mj) > two_j || (two_mj % 2) == 0) {
    throw InvalidInput("m_j must be a half-integer with |m_j| <= |kappa| - 1/2");
  }
}

// Position of |m_l, m_s> in UncoupledSpinor::coeffs.
int uncoupled_index(int l, int ml, bool spin_up) { return 2 * (ml + l) + (spin_up ? 0 : 1); }

double associated_legendre(int l, int m, double x) {
  // Condon-Shortley phase included; m >= 0.
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2 * m + 1) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

}  // namespace

namespace dirac {

TwoMatrix pauli(int axis) {
  TwoMatrix s;
  switch (axis) {
    case 0:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 1:
      s << 0.0, -I, I, 0.0;
      break;
    case 2:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw InvalidInput("Pauli axis must be 0, 1 or 2");
  }
  return s;
}

FourMatrix beta() {
  FourMatrix b = FourMatrix::Identity();
  b.bottomRightCorner<2, 2>() *= -1.0;
  return b;
}

FourMatrix beta_prime() {
  FourMatrix b = FourMatrix::Zero();
  b.topRightCorner<2, 2>() = TwoMatrix::Identity();
  b.bottomLeftCorner<2, 2>() = TwoMatrix::Identity();
  return b;
}

FourMatrix beta_double_prime() {
  FourMatrix b = FourMatrix::Zero();
  b.topRightCorner<2, 2>() = -TwoMatrix::Identity();
  b.bottomLeftCorner<2, 2>() = TwoMatrix::Identity();
  return b;
}

FourMatrix sigma(int axis) {
  FourMatrix s = FourMatrix::Zero();
  s.topLeftCorner<2, 2>() = pauli(axis);
  s.bottomRightCorner<2, 2>() = pauli(axis);
  return s;
}

FourMatrix alpha(int axis) {
  FourMatrix a = FourMatrix::Zero();
  a.topRightCorner<2, 2>() = pauli(axis);
  a.bottomLeftCorner<2, 2>() = pauli(axis);
  return a;
}

}  // namespace dirac

std::array<double, 3> unit_vector(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

TwoMatrix sigma_dot_n(double theta, double phi) {
  const auto n = unit_vector(theta, phi);
  return n[0] * dirac::pauli(0) + n[1] * dirac::pauli(1) + n[2] * dirac::pauli(2);
}

FourMatrix big_sigma_dot_n(double theta, double phi) {
  const auto n = unit_vector(theta, phi);
  return n[0] * dirac::sigma(0) + n[1] * dirac::sigma(1) + n[2] * dirac::sigma(2);
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) return 0.0;
  const int am = std::abs(m);
  // (l-m)!/(l+m)! via log-gamma keeps large l finite.
  const double ratio = std::exp(std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0));
  const double norm = std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi) * ratio);
  const cplx y = norm * associated_legendre(l, am, std::cos(theta)) * std::polar(1.0, am * phi);
  if (m >= 0) return y;
  return ((am % 2) ? -1.0 : 1.0) * std::conj(y);
}

double clebsch_gordan_spin_half(int l, int two_j, int two_ml, int two_ms, int two_mj) {
  if (two_ml + two_ms != two_mj) return 0.0;
  if (std::abs(two_ms) != 1 || std::abs(two_ml) > 2 * l || std::abs(two_mj) > two_j) return 0.0;
  const double denom = 2.0 * l + 1.0;
  const double plus = (2.0 * l + two_mj + 1.0) / 2.0;   // l + m + 1/2
  const double minus = (2.0 * l - two_mj + 1.0) / 2.0;  // l - m + 1/2
  if (two_j == 2 * l + 1) {
    return two_ms > 0 ? std::sqrt(plus / denom) : std::sqrt(minus / denom);
  }
  if (two_j == 2 * l - 1) {
    return two_ms > 0 ? -std::sqrt(minus / denom) : std::sqrt(plus / denom);
  }
  return 0.0;
}

TwoSpinorSample spinor_spherical_harmonic(int kappa, int two_mj, double theta, double phi) {
  check_mj(kappa, two_mj);
  const int l = orbital_l(kappa);
  const int two_j = 2 * std::abs(kappa) - 1;
  TwoSpinorSample s;
  s.theta = theta;
  s.phi = phi;
  const int ml_up = (two_mj - 1) / 2;
  const int ml_down = (two_mj + 1) / 2;
  s.upper = clebsch_gordan_spin_half(l, two_j, 2 * ml_up, 1, two_mj) *
            spherical_harmonic(l, ml_up, theta, phi);
  s.lower = clebsch_gordan_spin_half(l, two_j, 2 * ml_down, -1, two_mj) *
            spherical_harmonic(l, ml_down, theta, phi);
  return s;
}

UncoupledSpinor uncoupled_spinor(int kappa, int two_mj) {
  check_mj(kappa, two_mj);
  UncoupledSpinor s;
  s.l = orbital_l(kappa);
  s.coeffs = Eigen::VectorXd::Zero(2 * (2 * s.l + 1));
  const int two_j = 2 * std::abs(kappa) - 1;
  const int ml_up = (two_mj - 1) / 2;
  const int ml_down = (two_mj + 1) / 2;
  if (std::abs(ml_up) <= s.l) {
    s.coeffs[uncoupled_index(s.l, ml_up, true)] =
        clebsch_gordan_spin_half(s.l, two_j, 2 * ml_up, 1, two_mj);
  }
  if (std::abs(ml_down) <= s.l) {
    s.coeffs[uncoupled_index(s.l, ml_down, false)] =
        clebsch_gordan_spin_half(s.l, two_j, 2 * ml_down, -1, two_mj);
  }
  return s;
}

UncoupledSpinor apply_spin_orbit_plus_one(const UncoupledSpinor& s) {
  // sigma.L = sigma_z L_z + (sigma_+ L_- + sigma_- L_+) / 2
  const int l = s.l;
  const double ll1 = l * (l + 1.0);
  UncoupledSpinor out{l, s.coeffs};  // the "+ 1"
  for (int ml = -l; ml <= l; ++ml) {
    const double up = s.coeffs[uncoupled_index(l, ml, true)];
    const double down = s.coeffs[uncoupled_index(l, ml, false)];
    out.coeffs[uncoupled_index(l, ml, true)] += ml * up;
    out.coeffs[uncoupled_index(l, ml, false)] -= ml * down;
    if (ml - 1 >= -l) {
      out.coeffs[uncoupled_index(l, ml - 1, true)] += std::sqrt(ll1 - ml * (ml - 1.0)) * down;
    }
    if (ml + 1 <= l) {
      out.coeffs[uncoupled_index(l, ml + 1, false)] += std::sqrt(ll1 - ml * (ml + 1.0)) * up;
    }
  }
  return out;
}

KEigenCheck k_operator_eigencheck(int kappa, int two_mj) {
  // Upper block: +(sigma.L + 1) Omega_kappa; lower block: -(sigma.L + 1) Omega_-kappa.
  const UncoupledSpinor upper = uncoupled_spinor(kappa, two_mj);
  const UncoupledSpinor lower = uncoupled_spinor(-kappa, two_mj);
  const Eigen::VectorXd k_upper = apply_spin_orbit_plus_one(upper).coeffs;
  const Eigen::VectorXd k_lower = -apply_spin_orbit_plus_one(lower).coeffs;

  const double norm2 = upper.coeffs.squaredNorm() + lower.coeffs.squaredNorm();
  const double eig = (upper.coeffs.dot(k_upper) + lower.coeffs.dot(k_lower)) / norm2;
  const double res2 = (k_upper - eig * upper.coeffs).squaredNorm() +
                      (k_lower - eig * lower.coeffs).squaredNorm();
  return {eig, std::sqrt(res2 / norm2)};
}

std::array<cplx, 2> AngularBlock::eigenvalues() const {
  const cplx tr = matrix.trace();
  const cplx det = matrix.determinant();
  const cplx root = std::sqrt(tr * tr / 4.0 - det);
  std::array<cplx, 2> ev{tr / 2.0 + root, tr / 2.0 - root};
  if (ev[0].real() < ev[1].real()) std::swap(ev[0], ev[1]);
  return ev;
}

bool AngularBlock::is_hermitian(double tol) const {
  return (matrix - matrix.adjoint()).norm() <= tol;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw InvalidInput("Gauss-Legendre order must be positive");
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

FourMatrix barrier_coupling(const CouplingParams& c, double theta, double phi,
                            SigmaConvention convention) {
  const Eigen::MatrixXcd mix = c.beta_s * dirac::beta_double_prime() + c.alpha * dirac::beta_prime();
  const Eigen::MatrixXcd sn = convention == SigmaConvention::block_diagonal
                                  ? Eigen::MatrixXcd(big_sigma_dot_n(theta, phi))
                                  : Eigen::MatrixXcd(sigma_dot_n(theta, phi));
  return I * checked_product(sn, mix);
}

AngularBlock lambda_block(int kappa, const CouplingParams& c, int two_mj) {
  check_mj(kappa, two_mj);

  // Spin-orbit part. Sigma.L is block diagonal, so it cannot connect the
  // upper-only and lower-only basis vectors; only the diagonal survives.
  const UncoupledSpinor up = uncoupled_spinor(kappa, two_mj);
  const UncoupledSpinor down = uncoupled_spinor(-kappa, two_mj);
  const double so_up = up.coeffs.dot(apply_spin_orbit_plus_one(up).coeffs) / up.coeffs.squaredNorm();
  const double so_down =
      down.coeffs.dot(apply_spin_orbit_plus_one(down).coeffs) / down.coeffs.squaredNorm();

  AngularBlock block;
  block.kappa = kappa;
  block.couplings = c;
  block.matrix = TwoMatrix::Zero();
  block.matrix(0, 0) = -so_up;
  block.matrix(1, 1) = -so_down;

  const ProjectedCoupling coupling = project_barrier_coupling(kappa, c, two_mj);
  block.matrix += coupling.matrix;
  block.closure_residual = coupling.closure_residual;
  return block;
}

ProjectedCoupling project_barrier_coupling(int kappa, const CouplingParams& c, int two_mj,
                                           SigmaConvention convention) {
  check_mj(kappa, two_mj);
  const int k = std::abs(kappa);
  const auto [xs, ws] = gauss_legendre(2 * k + 4);
  const int nphi = 2 * k + 6;
  const double dphi = 2.0 * std::numbers::pi / nphi;

  struct Sample {
    Eigen::Vector4cd e0, e1, m0, m1;
  };
  std::vector<Sample> samples;
  samples.reserve(xs.size() * nphi);
  TwoMatrix proj = TwoMatrix::Zero();
  const TwoSpinorSample zero{};
  for (std::size_t it = 0; it < xs.size(); ++it) {
    const double theta = std::acos(xs[it]);
    for (int ip = 0; ip < nphi; ++ip) {
      const double phi = ip * dphi;
      Sample s;
      s.e0 = four_spinor(spinor_spherical_harmonic(kappa, two_mj, theta, phi), zero);
      s.e1 = four_spinor(zero, spinor_spherical_harmonic(-kappa, two_mj, theta, phi));
      const FourMatrix m = barrier_coupling(c, theta, phi, convention);
      s.m0 = m * s.e0;
      s.m1 = m * s.e1;
      const double w = ws[it] * dphi;
      proj(0, 0) += w * s.e0.dot(s.m0);
      proj(0, 1) += w * s.e0.dot(s.m1);
      proj(1, 0) += w * s.e1.dot(s.m0);
      proj(1, 1) += w * s.e1.dot(s.m1);
      samples.push_back(std::move(s));
    }
  }

  double closure = 0.0;
  for (const Sample& s : samples) {
    closure = std::max(closure, (s.m0 - proj(0, 0) * s.e0 - proj(1, 0) * s.e1).norm());
    closure = std::max(closure, (s.m1 - proj(0, 1) * s.e0 - proj(1, 1) * s.e1).norm());
  }
  return {proj, closure};
}

TwoMatrix lambda_block_closed_form(int kappa, const CouplingParams& c) {
  TwoMatrix m;
  m << static_cast<double>(kappa), -I * (c.alpha - c.beta_s), -I * (c.alpha + c.beta_s),
      -static_cast<double>(kappa);
  return m;
}

std::pair<double, double> lambda_quadratic_eigs(const AngularBlock& block) {
  const TwoMatrix q = block.matrix * (block.matrix + TwoMatrix::Identity());
  const cplx tr = q.trace();
  const cplx det = q.determinant();
  const cplx root = std::sqrt(tr * tr / 4.0 - det);
  cplx a = tr / 2.0 + root;
  cplx b = tr / 2.0 - root;
  const auto lam = block.eigenvalues();
  const double scale = 1.0 + std::abs(a) + std::abs(b);
  if (std::abs(lam[0].imag()) > 1e-12 * (1.0 + std::abs(lam[0])) ||
      std::abs(a.imag()) > 1e-12 * scale || std::abs(b.imag()) > 1e-12 * scale) {
    const CouplingParams& c = block.couplings;
    throw SupercriticalError(block.kappa, c.alpha, c.beta_s,
                             std::sqrt(double(block.kappa) * block.kappa + c.beta_s * c.beta_s));
  }
  if (a.real() < b.real()) std::swap(a, b);
  return {a.real(), b.real()};
}

std::array<std::pair<cplx, Eigen::Vector2cd>, 2> lambda_eigenvectors(const AngularBlock& block) {
  const auto ev = block.eigenvalues();
  std::array<std::pair<cplx, Eigen::Vector2cd>, 2> out;
  for (int i = 0; i < 2; ++i) {
    // Null vector of (M - ev I) from whichever row has the larger norm.
    const TwoMatrix shifted = block.matrix - ev[i] * TwoMatrix::Identity();
    const int row = shifted.row(0).norm() >= shifted.row(1).norm() ? 0 : 1;
    Eigen::Vector2cd v(shifted(row, 1), -shifted(row, 0));
    if (v.norm() == 0.0) v = Eigen::Vector2cd::Unit(i);
    out[i] = {ev[i], v.normalized()};
  }
  return out;
}

BarrierStructure barrier_block_structure(const CouplingParams& c, double theta, double phi,
                                         double zero_tol) {
  BarrierStructure s;
  s.matrix = barrier_coupling(c, theta, phi) +
             (c.beta_s * c.beta_s - c.alpha * c.alpha) * FourMatrix::Identity();
  s.upper_left = s.matrix.topLeftCorner<2, 2>().norm();
  s.upper_right = s.matrix.topRightCorner<2, 2>().norm();
  s.lower_left = s.matrix.bottomLeftCorner<2, 2>().norm();
  s.lower_right = s.matrix.bottomRightCorner<2, 2>().norm();
  s.mixes_components = s.upper_right > zero_tol || s.lower_left > zero_tol;
  return s;
}

}  // namespace dk
