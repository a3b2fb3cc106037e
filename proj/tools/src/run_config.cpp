#include "dirac_kepler_cli/run_config.hpp"

#include <cmath>
#include <cstdlib>

#include "dirac_kepler/errors.hpp"

namespace dk::cli {

bool uses_physical_inputs(const RunConfig& cfg) {
  return cfg.e2.has_value() || cfg.a.has_value() || cfg.mass.has_value();
}

CouplingParams resolve_couplings(const RunConfig& cfg) {
  const bool couplings = cfg.alpha.has_value() || cfg.beta_s.has_value();
  const bool physical = uses_physical_inputs(cfg);
  if (couplings && physical) {
    throw InvalidInput("give either --alpha/--beta-s or --e2/--a/--mass, not both");
  }
  if (physical) {
    if (!cfg.e2 || !cfg.a) throw InvalidInput("--e2 and --a are both required with physical inputs");
    const double mass =
        cfg.mass.value_or(cfg.unit_system == UnitSystem::natural ? 1.0 : codata::electron_mass);
    return derive_couplings(PhysicalInputs(mass, *cfg.e2, *cfg.a, cfg.unit_system));
  }
  if (!cfg.alpha) throw InvalidInput("--alpha (or --e2/--a) is required");
  return CouplingParams::make(*cfg.alpha, cfg.beta_s.value_or(0.0));
}

EnergyWindow parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidInput("window must be lo,hi: " + text);
  const std::string lo_s = text.substr(0, comma), hi_s = text.substr(comma + 1);
  char* end = nullptr;
  const double lo = std::strtod(lo_s.c_str(), &end);
  if (lo_s.empty() || *end != '\0') throw InvalidInput("bad window bound: " + lo_s);
  const double hi = std::strtod(hi_s.c_str(), &end);
  if (hi_s.empty() || *end != '\0') throw InvalidInput("bad window bound: " + hi_s);
  if (!(lo > -1.0 && lo < 1.0 && hi > -1.0 && hi < 1.0)) {
    throw InvalidInput("window must lie inside (-1, 1): " + text);
  }
  return EnergyWindow{lo, hi};
}

SolverOptions solver_options(const RunConfig& cfg) {
  if (cfg.grid_points < 200) throw InvalidInput("--grid-points must be at least 200");
  SolverOptions o;
  o.grid_points = cfg.grid_points;
  return o;
}

std::vector<int> kappas_or(const RunConfig& cfg, std::vector<int> fallback) {
  std::vector<int> k = cfg.kappas.empty() ? std::move(fallback) : cfg.kappas;
  for (int v : k) {
    if (v == 0) throw InvalidInput("kappa must be a nonzero integer");
  }
  return k;
}

ClaimsConfig claims_config(const RunConfig& cfg) {
  ClaimsConfig cc;
  if (cfg.alpha || cfg.beta_s || uses_physical_inputs(cfg)) {
    const CouplingParams c = resolve_couplings(cfg);
    cc.grid.alphas = {c.alpha};
    cc.grid.beta_s = {c.beta_s};
  }
  cc.kappas = kappas_or(cfg, cc.kappas);
  if (cfg.nr_max) cc.nr_max = *cfg.nr_max;
  cc.window = parse_window(cfg.window);
  cc.solver = solver_options(cfg);
  cc.reproduce_flaw = cfg.reproduce_flaw;
  cc.selected = cfg.claims;
  for (const auto& id : cc.selected) {
    if (!is_claim_id(id)) throw InvalidInput("unknown claim id: " + id);
  }
  return cc;
}

double energy_scale(const RunConfig& cfg) {
  if (cfg.energy_units == EnergyUnits::mc2) return 1.0;
  if (!cfg.mc2_ev || !(*cfg.mc2_ev > 0.0) || !std::isfinite(*cfg.mc2_ev)) {
    throw InvalidInput("--units ev needs a positive --mc2 (rest energy in eV)");
  }
  return *cfg.mc2_ev;
}

}  // namespace dk::cli
