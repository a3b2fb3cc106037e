#pragma once

// Physical inputs, dimensionless couplings and angular channel bookkeeping.
//
// Everything downstream works in natural units (hbar = c = m = 1). The only
// place dimensionful quantities appear is PhysicalInputs, which is reduced to
// CouplingParams at the boundary.

#include <string_view>

namespace dk {

enum class UnitSystem { natural, si_like };

/// CODATA 2018 values used for the SI-like unit system.
namespace codata {
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double c = 299792458.0;                 // m / s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double epsilon0 = 8.8541878128e-12;     // F / m
}  // namespace codata

/// Dimensionful inputs of the Dirac equation with m* = m(1 + a/r), U = -e^2/r.
///
/// In natural units mass is in units of the reference mass (normally 1) and
/// a, e^2 are in units of hbar/(mc) and hbar*c. In SI-like units mass is in
/// kg, e^2 in J m and a in m.
class PhysicalInputs {
 public:
  PhysicalInputs(double mass, double e2, double a, UnitSystem units = UnitSystem::natural);

  double mass() const noexcept { return mass_; }
  double e2() const noexcept { return e2_; }
  double a() const noexcept { return a_; }
  UnitSystem units() const noexcept { return units_; }

  double hbar() const noexcept;
  double c() const noexcept;

 private:
  double mass_;
  double e2_;
  double a_;
  UnitSystem units_;
};

/// Dimensionless couplings: alpha = e^2/(hbar c) (vector), beta_s = m c a / hbar (scalar).
struct CouplingParams {
  double alpha = 0.0;
  double beta_s = 0.0;

  /// Validating constructor; rejects alpha < 0 and non-finite values.
  static CouplingParams make(double alpha, double beta_s);

  friend bool operator==(const CouplingParams&, const CouplingParams&) = default;
};

CouplingParams derive_couplings(const PhysicalInputs& inputs);

/// Sign in the effective angular momentum formula: upper for j = l + 1/2
/// (kappa < 0), lower for j = l - 1/2 (kappa > 0).
enum class SpinOrbitSign { upper, lower };

/// Angular channel labelled by the Dirac quantum number kappa.
///
/// kappa = -(l+1) for j = l + 1/2 and kappa = l for j = l - 1/2, so
/// |kappa| = j + 1/2. gamma = sqrt(kappa^2 + beta_s^2 - alpha^2) and the
/// effective orbital number l* = gamma - 1 (kappa < 0) or gamma (kappa > 0).
struct Channel {
  int kappa = -1;
  double j = 0.5;
  int l = 0;
  SpinOrbitSign sign = SpinOrbitSign::upper;
  double gamma = 1.0;
  double l_star = 0.0;

  /// Twice j, an odd positive integer.
  int two_j() const noexcept { return 2 * (kappa < 0 ? -kappa : kappa) - 1; }
};

/// Orbital number l of the upper component for a given kappa.
int orbital_l(int kappa);

/// Throws SupercriticalError when kappa^2 + beta_s^2 <= alpha^2.
Channel channel_from_kappa(int kappa, const CouplingParams& c);

/// Inverse of the kappa labelling: (l, sign) -> kappa. Rejects j = -1/2.
int kappa_from_l_sign(int l, SpinOrbitSign sign);

/// l* straight from the closed form
///   l* = sqrt((j+1/2)^2 + beta_s^2 - alpha^2) - 1/2 -+ 1/2,
/// written in terms of j and the sign instead of kappa.
double effective_l_from_j(double j, SpinOrbitSign sign, const CouplingParams& c);

std::string_view to_string(SpinOrbitSign sign);
std::string_view to_string(UnitSystem units);

}  // namespace dk
