#include "dirac_kepler/model_params.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "dirac_kepler/errors.hpp"

namespace dk {

namespace {

std::string supercritical_message(int kappa, double alpha, double beta_s, double critical) {
  std::ostringstream os;
  os.precision(17);
  os << "supercritical channel kappa=" << kappa << ": alpha=" << alpha << " beta_s=" << beta_s
     << " (gamma^2 <= 0, critical alpha=" << critical << ")";
  return os.str();
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
}

}  // namespace

SupercriticalError::SupercriticalError(int kappa, double alpha, double beta_s, double critical_alpha)
    : Error(supercritical_message(kappa, alpha, beta_s, critical_alpha)),
      kappa_(kappa),
      alpha_(alpha),
      beta_s_(beta_s),
      critical_alpha_(critical_alpha) {}

PhysicalInputs::PhysicalInputs(double mass, double e2, double a, UnitSystem units)
    : mass_(mass), e2_(e2), a_(a), units_(units) {
  require_finite(mass, "mass");
  require_finite(e2, "e2");
  require_finite(a, "a");
  if (mass <= 0.0) throw InvalidInput("mass must be positive");
  if (e2 < 0.0) throw InvalidInput("e2 must be non-negative");
}

double PhysicalInputs::hbar() const noexcept {
  return units_ == UnitSystem::natural ? 1.0 : codata::hbar;
}

double PhysicalInputs::c() const noexcept {
  return units_ == UnitSystem::natural ? 1.0 : codata::c;
}

CouplingParams CouplingParams::make(double alpha, double beta_s) {
  require_finite(alpha, "alpha");
  require_finite(beta_s, "beta_s");
  if (alpha < 0.0) throw InvalidInput("alpha must be non-negative");
  return CouplingParams{alpha, beta_s};
}

CouplingParams derive_couplings(const PhysicalInputs& in) {
  const double hbar = in.hbar();
  const double c = in.c();
  return CouplingParams::make(in.e2() / (hbar * c), in.mass() * c * in.a() / hbar);
}

int orbital_l(int kappa) {
  if (kappa == 0) throw InvalidInput("kappa must be nonzero");
  return kappa > 0 ? kappa : -kappa - 1;
}

Channel channel_from_kappa(int kappa, const CouplingParams& c) {
  if (kappa == 0) throw InvalidInput("kappa must be nonzero");
  const double k2 = static_cast<double>(kappa) * kappa;
  const double gamma2 = k2 + c.beta_s * c.beta_s - c.alpha * c.alpha;
  if (!(gamma2 > 0.0)) {
    throw SupercriticalError(kappa, c.alpha, c.beta_s, std::sqrt(k2 + c.beta_s * c.beta_s));
  }
  Channel ch;
  ch.kappa = kappa;
  ch.j = std::abs(kappa) - 0.5;
  ch.l = orbital_l(kappa);
  ch.sign = kappa < 0 ? SpinOrbitSign::upper : SpinOrbitSign::lower;
  ch.gamma = std::sqrt(gamma2);
  ch.l_star = kappa < 0 ? ch.gamma - 1.0 : ch.gamma;
  return ch;
}

int kappa_from_l_sign(int l, SpinOrbitSign sign) {
  if (l < 0) throw InvalidInput("l must be non-negative");
  if (sign == SpinOrbitSign::upper) return -(l + 1);
  if (l == 0) throw InvalidInput("j = l - 1/2 requires l >= 1");
  return l;
}

double effective_l_from_j(double j, SpinOrbitSign sign, const CouplingParams& c) {
  const double jp = j + 0.5;
  const double disc = jp * jp + c.beta_s * c.beta_s - c.alpha * c.alpha;
  if (!(disc > 0.0)) {
    const int kappa = static_cast<int>(std::lround(sign == SpinOrbitSign::upper ? -jp : jp));
    throw SupercriticalError(kappa, c.alpha, c.beta_s, std::sqrt(jp * jp + c.beta_s * c.beta_s));
  }
  const double pm = sign == SpinOrbitSign::upper ? 0.5 : -0.5;
  return std::sqrt(disc) - 0.5 - pm;
}

std::string_view to_string(SpinOrbitSign sign) {
  return sign == SpinOrbitSign::upper ? "upper" : "lower";
}

std::string_view to_string(UnitSystem units) {
  return units == UnitSystem::natural ? "natural" : "si";
}

}  // namespace dk
