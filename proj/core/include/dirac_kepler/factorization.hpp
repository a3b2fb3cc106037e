#pragma once

// Finite-difference check that the squared radial operator
//
//   A B,  A = alpha.p + beta m* + U - E,  B = alpha.p + beta m* + E - U,
//
// equals p^2 - 2 q(E)/r + [i Sigma.n (beta_s beta'' + alpha beta') + beta_s^2 - alpha^2]/r^2
// + 1 - E^2 (natural units, twice the Schroedinger-like operator) on the
// angular sectors (Omega_kappa, Omega_-kappa) and (Omega_-kappa, Omega_kappa).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirac_kepler/angular_algebra.hpp"
#include "dirac_kepler/model_params.hpp"

namespace dk {

struct FactorizationOptions {
  double energy = 0.3;
  double step = 1e-3;
  double r_lo = 0.5;
  double r_hi = 4.5;
  /// Test functions are supported on (support_lo, support_hi).
  double support_lo = 1.0;
  double support_hi = 4.0;
  std::uint64_t seed = 12345;
  SigmaConvention convention = SigmaConvention::block_diagonal;
};

struct FactorizationLevel {
  double step = 0.0;
  /// || A(B phi) - P phi ||_2 / || P phi ||_2 over interior points.
  double relative_residual = 0.0;
};

struct FactorizationReport {
  int kappa = 0;
  CouplingParams couplings;
  /// Residuals at step h and h/2.
  std::vector<FactorizationLevel> levels;
  /// log2 of the residual ratio between consecutive levels.
  double observed_order = 0.0;
  /// Set (and nothing computed) when the coupling cannot be built.
  std::optional<std::string> inconsistency;
};

/// Radial 2x2 coupling matrix of i Sigma.n (beta_s beta'' + alpha beta') on a
/// sector (u/r Omega_k, i v/r Omega_-k): [[0, alpha - beta_s], [-(alpha + beta_s), 0]].
/// Derived by projecting the 4x4 operator on the spinor harmonics of kappa.
Eigen::Matrix2d radial_barrier_coupling(int kappa, const CouplingParams& c,
                                        SigmaConvention convention = SigmaConvention::block_diagonal);

/// Residual of the operator identity for one grid step.
double factorization_residual(int kappa, const CouplingParams& c, const FactorizationOptions& opts);

FactorizationReport verify_factorization(int kappa, const CouplingParams& c,
                                         const FactorizationOptions& opts = {});

}  // namespace dk
