#include "dirac_kepler/analytic_spectrum.hpp"

#include <cmath>
#include <cstdlib>

#include "dirac_kepler/errors.hpp"
#include "dirac_kepler/special_functions.hpp"

namespace dk {

std::string_view to_string(Branch b) { return b == Branch::positive ? "+" : "-"; }

double effective_coulomb(double energy, const CouplingParams& c) {
  return c.alpha * energy - c.beta_s;
}

double effective_principal(int n_r, const Channel& channel) {
  if (n_r < 0) throw InvalidInput("n_r must be non-negative");
  return n_r + channel.l_star + 1.0;
}

std::pair<SpectrumLine, SpectrumLine> energy_branches(int n_r, const Channel& channel,
                                                      const CouplingParams& c) {
  const double n = effective_principal(n_r, channel);
  const double a2 = c.alpha * c.alpha;
  const double disc = n * n + a2 - c.beta_s * c.beta_s;
  if (disc < 0.0) {
    throw SolverError("no real bound-state energies: N^2 + alpha^2 - beta_s^2 < 0");
  }
  const double denom = n * n + a2;
  const double root = n * std::sqrt(disc);
  const double ab = c.alpha * c.beta_s;

  auto make = [&](Branch b, double e) {
    SpectrumLine line;
    line.channel = channel;
    line.n_r = n_r;
    line.branch = b;
    line.energy = e;
    line.q_eff = effective_coulomb(e, c);
    line.admissible = std::abs(e) < 1.0 && line.q_eff > 0.0;
    line.principal = n;
    return line;
  };
  return {make(Branch::positive, (ab + root) / denom), make(Branch::negative, (ab - root) / denom)};
}

BindingCondition binding_condition(double energy, const CouplingParams& c) {
  return {c.beta_s < c.alpha * energy, c.beta_s < c.alpha};
}

double sommerfeld_reference(int n_r, int kappa, double alpha) {
  if (n_r < 0) throw InvalidInput("n_r must be non-negative");
  const Channel ch = channel_from_kappa(kappa, CouplingParams::make(alpha, 0.0));
  const double shifted = (kappa < 0 ? n_r : n_r + 1) + ch.gamma;
  return 1.0 / std::sqrt(1.0 + alpha * alpha / (shifted * shifted));
}

double decay_constant(const SpectrumLine& line) {
  if (!line.admissible) throw InvalidInput("line is not an admissible bound state");
  return line.q_eff / line.principal;
}

std::vector<double> analytic_radial_R(const SpectrumLine& line, std::span<const double> r) {
  const double lambda = decay_constant(line);
  const double ls = line.channel.l_star;
  const double nu = 2.0 * ls + 1.0;
  const int n = line.n_r;
  // int_0^inf x^(nu+1) e^-x [L_n^nu(x)]^2 dx = Gamma(n + nu + 1) / n! * (2n + nu + 1)
  const double log_norm = ln_gamma(n + nu + 1.0) - ln_gamma(n + 1.0) + std::log(2.0 * n + nu + 1.0);
  const double c = std::sqrt(8.0 * lambda * lambda * lambda) * std::exp(-0.5 * log_norm);

  std::vector<double> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double rho = 2.0 * lambda * r[i];
    out[i] = c * std::pow(rho, ls) * std::exp(-0.5 * rho) *
             generalized_laguerre({n, nu, rho});
  }
  return out;
}

std::vector<ChannelSpectrum> analytic_spectrum(const CouplingParams& c, std::span<const int> kappas,
                                               int nr_max) {
  if (nr_max < 0) throw InvalidInput("nr_max must be non-negative");
  std::vector<ChannelSpectrum> out;
  for (int kappa : kappas) {
    ChannelSpectrum cs;
    cs.kappa = kappa;
    try {
      const Channel ch = channel_from_kappa(kappa, c);
      for (int n_r = 0; n_r <= nr_max; ++n_r) {
        auto [plus, minus] = energy_branches(n_r, ch, c);
        cs.lines.push_back(plus);
        cs.lines.push_back(minus);
      }
    } catch (const Error& e) {
      cs.error = e.what();
      cs.lines.clear();
    }
    out.push_back(std::move(cs));
  }
  return out;
}

}  // namespace dk
