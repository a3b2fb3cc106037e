#pragma once

// Matrix representations of the Dirac and auxiliary operators, spinor
// spherical harmonics and the angular operator
//
//   Lambda = -(Sigma.L + 1) + i Sigma.n (beta_s beta'' + alpha beta')
//
// (natural units) restricted to its invariant two-dimensional subspace
// span{(Omega_kappa, 0), (0, Omega_-kappa)}.

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dirac_kepler/model_params.hpp"

namespace dk {

using cplx = std::complex<double>;
using TwoMatrix = Eigen::Matrix2cd;
using FourMatrix = Eigen::Matrix4cd;

/// Pauli matrices and the 4x4 Dirac-representation matrices built from them.
namespace dirac {

/// sigma_x, sigma_y, sigma_z for axis = 0, 1, 2.
TwoMatrix pauli(int axis);

/// diag(I, -I)
FourMatrix beta();
/// [[0, I], [I, 0]]
FourMatrix beta_prime();
/// [[0, -I], [I, 0]]
FourMatrix beta_double_prime();
/// Block-diagonal diag(sigma_k, sigma_k).
FourMatrix sigma(int axis);
/// Off-diagonal [[0, sigma_k], [sigma_k, 0]].
FourMatrix alpha(int axis);

}  // namespace dirac

/// Unit radial direction n = r/r.
std::array<double, 3> unit_vector(double theta, double phi);

/// sigma . n for n = (sin th cos ph, sin th sin ph, cos th).
TwoMatrix sigma_dot_n(double theta, double phi);

/// Sigma . n with the block-diagonal 4x4 Sigma.
FourMatrix big_sigma_dot_n(double theta, double phi);

/// Spherical harmonic Y_lm with the Condon-Shortley phase.
cplx spherical_harmonic(int l, int m, double theta, double phi);

/// <l, m_l; 1/2, m_s | j m_j> for j = l +- 1/2, with all projections doubled
/// (two_ml = 2 m_l etc). Returns 0 when the projections do not add up.
double clebsch_gordan_spin_half(int l, int two_j, int two_ml, int two_ms, int two_mj);

struct TwoSpinorSample {
  double theta = 0.0;
  double phi = 0.0;
  cplx upper;
  cplx lower;
};

/// Omega_{kappa m_j}(theta, phi), normalized over the unit sphere. two_mj = 2 m_j.
TwoSpinorSample spinor_spherical_harmonic(int kappa, int two_mj, double theta, double phi);

/// Omega_{kappa m_j} expanded in the uncoupled |l m_l> x |m_s> basis.
///
/// Index i holds the coefficient of |m_l = i/2 - l, m_s = up> for even i and
/// |m_l = (i-1)/2 - l, m_s = down> for odd i.
struct UncoupledSpinor {
  int l = 0;
  Eigen::VectorXd coeffs;
};

UncoupledSpinor uncoupled_spinor(int kappa, int two_mj);

/// (sigma.L + 1) applied exactly with L_z and the ladder operators L_+-.
UncoupledSpinor apply_spin_orbit_plus_one(const UncoupledSpinor& s);

struct KEigenCheck {
  double eigenvalue = 0.0;
  /// || K psi - eigenvalue psi || relative to || psi ||, over both blocks.
  double residual = 0.0;
};

/// Applies K = beta (Sigma.L + 1) to the four-spinor harmonic with upper
/// Omega_kappa and lower Omega_-kappa. The eigenvalue is -kappa.
KEigenCheck k_operator_eigencheck(int kappa, int two_mj);

/// Lambda restricted to span{(Omega_kappa, 0), (0, Omega_-kappa)}.
struct AngularBlock {
  TwoMatrix matrix;
  int kappa = -1;
  CouplingParams couplings;
  /// Largest pointwise |P Lambda v - Lambda v| found while projecting; small
  /// values confirm the subspace is closed under Lambda.
  double closure_residual = 0.0;

  /// Eigenvalues sorted by descending real part.
  std::array<cplx, 2> eigenvalues() const;
  bool is_hermitian(double tol = 1e-14) const;
};

/// Builds the block from the 4x4 matrices: the spin-orbit part through the
/// ladder algebra and the Sigma.n coupling through quadrature projection on
/// the sphere. two_mj selects the magnetic substate (the result must not
/// depend on it).
AngularBlock lambda_block(int kappa, const CouplingParams& c, int two_mj = 1);

/// Closed-form entries [[kappa, -i(alpha - beta_s)], [-i(alpha + beta_s), -kappa]].
TwoMatrix lambda_block_closed_form(int kappa, const CouplingParams& c);

/// Eigenvalues of Lambda(Lambda + 1) on the block, largest first:
/// {gamma(gamma+1), gamma(gamma-1)}. Throws SupercriticalError when they are
/// not real.
std::pair<double, double> lambda_quadratic_eigs(const AngularBlock& block);

/// Eigenvectors of Lambda in the (Omega_kappa, Omega_-kappa) basis, paired
/// with the eigenvalues +gamma and -gamma.
std::array<std::pair<cplx, Eigen::Vector2cd>, 2> lambda_eigenvectors(const AngularBlock& block);

/// Which sigma enters the 1/r^2 coupling of the squared equation.
enum class SigmaConvention {
  /// 4x4 block-diagonal Sigma.
  block_diagonal,
  /// Bare 2x2 Pauli sigma acting on a four-spinor (dimensionally inconsistent).
  pauli_2x2,
};

/// i Sigma.n (beta_s beta'' + alpha beta') at direction (theta, phi). Throws
/// DimensionMismatch for SigmaConvention::pauli_2x2.
FourMatrix barrier_coupling(const CouplingParams& c, double theta, double phi,
                            SigmaConvention convention = SigmaConvention::block_diagonal);

struct ProjectedCoupling {
  /// <e_i| i Sigma.n (beta_s beta'' + alpha beta') |e_j> with e_0 = (Omega_kappa, 0),
  /// e_1 = (0, Omega_-kappa), integrated over the sphere.
  TwoMatrix matrix;
  /// Largest pointwise distance between M e_j and its projection.
  double closure_residual = 0.0;
};

ProjectedCoupling project_barrier_coupling(
    int kappa, const CouplingParams& c, int two_mj = 1,
    SigmaConvention convention = SigmaConvention::block_diagonal);

struct BarrierStructure {
  /// Full 1/r^2 coefficient: coupling + (beta_s^2 - alpha^2) I.
  FourMatrix matrix;
  double upper_left = 0.0;
  double upper_right = 0.0;
  double lower_left = 0.0;
  double lower_right = 0.0;
  /// True when either off-diagonal block is nonzero.
  bool mixes_components = false;
};

inline constexpr double kReferenceTheta = 0.7;
inline constexpr double kReferencePhi = 0.3;

/// Frobenius norms of the four 2x2 blocks of the centrifugal-barrier matrix.
BarrierStructure barrier_block_structure(const CouplingParams& c, double theta = kReferenceTheta,
                                         double phi = kReferencePhi, double zero_tol = 0.0);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace dk
