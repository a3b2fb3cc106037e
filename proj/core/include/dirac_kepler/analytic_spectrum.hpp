#pragma once

// Closed-form bound states of the Schroedinger-like radial equation
//
//   [-1/2 (1/r) d^2/dr^2 r - q(E)/r + l*(l*+1)/(2 r^2)] R = (E^2 - 1)/2 R,
//   q(E) = alpha E - beta_s,
//
// obtained by squaring the Dirac equation (natural units). Quantization reads
// (E^2 - 1) N^2 + q(E)^2 = 0 with N = n_r + l* + 1, a quadratic in E whose two
// roots are the positive and negative energy branches.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirac_kepler/model_params.hpp"

namespace dk {

enum class Branch { positive, negative };

std::string_view to_string(Branch b);

/// One root of the energy quadratic for a given channel and radial index.
struct SpectrumLine {
  Channel channel;
  int n_r = 0;
  Branch branch = Branch::positive;
  /// Energy in units of m c^2.
  double energy = 0.0;
  /// Effective Coulomb strength q = alpha E - beta_s.
  double q_eff = 0.0;
  /// |E| < 1 and q > 0.
  bool admissible = false;
  /// N = n_r + l* + 1.
  double principal = 0.0;
};

/// alpha E - beta_s.
double effective_coulomb(double energy, const CouplingParams& c);

/// N = n_r + l* + 1.
double effective_principal(int n_r, const Channel& channel);

/// Both roots of E^2 (N^2 + alpha^2) - 2 alpha beta_s E + (beta_s^2 - N^2) = 0,
/// positive branch first. Inadmissible roots are returned flagged, not dropped.
std::pair<SpectrumLine, SpectrumLine> energy_branches(int n_r, const Channel& channel,
                                                      const CouplingParams& c);

struct BindingCondition {
  /// beta_s < alpha E, i.e. a < e^2 E / (m^2 c^4).
  bool corrected = false;
  /// beta_s < alpha, i.e. a < e^2 / (m c^2).
  bool uncorrected = false;
};

BindingCondition binding_condition(double energy, const CouplingParams& c);

/// Dirac-Coulomb (beta_s = 0) energy [1 + alpha^2/(n' + gamma0)^2]^(-1/2) with
/// n' = n_r for kappa < 0 and n_r + 1 for kappa > 0.
double sommerfeld_reference(int n_r, int kappa, double alpha);

/// Normalized R(r) = C rho^l* exp(-rho/2) L_{n_r}^{(2l*+1)}(rho), rho = 2 lambda r,
/// lambda = q/N, with int R^2 r^2 dr = 1. Throws for inadmissible lines.
std::vector<double> analytic_radial_R(const SpectrumLine& line, std::span<const double> r);

/// Decay constant lambda = q/N of an admissible line.
double decay_constant(const SpectrumLine& line);

/// All lines for one kappa with n_r = 0..nr_max, or the reason there are none.
struct ChannelSpectrum {
  int kappa = 0;
  std::optional<std::string> error;
  std::vector<SpectrumLine> lines;
};

std::vector<ChannelSpectrum> analytic_spectrum(const CouplingParams& c, std::span<const int> kappas,
                                               int nr_max);

}  // namespace dk
