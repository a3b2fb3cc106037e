#pragma once
// Everything a CLI invocation can set, from flags or a flat key = value file.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dirac_kepler/claims.hpp"
#include "dirac_kepler/model_params.hpp"
#include "dirac_kepler/radial_solver.hpp"
#include "dirac_kepler_cli/table.hpp"

namespace dk::cli {

enum class EnergyUnits { mc2, ev };

struct RunConfig {
  // Either couplings ...
  std::optional<double> alpha;
  std::optional<double> beta_s;
  // ... or physical inputs.
  std::optional<double> e2;
  std::optional<double> a;
  std::optional<double> mass;
  UnitSystem unit_system = UnitSystem::natural;

  /// Empty means the command's default set.
  std::vector<int> kappas;
  std::optional<int> nr_max;
  std::string window = "-0.999,0.999";
  std::size_t grid_points = SolverOptions{}.grid_points;

  OutputFormat format = OutputFormat::text;
  std::string out;
  EnergyUnits energy_units = EnergyUnits::mc2;
  /// Rest energy in eV, needed for EnergyUnits::ev.
  std::optional<double> mc2_ev;

  std::vector<std::string> claims;
  bool reproduce_flaw = false;

  // scan
  std::string scan_param = "beta-s";
  double scan_from = -0.5;
  double scan_to = 0.4;
  int scan_steps = 10;
};

bool uses_physical_inputs(const RunConfig& cfg);
/// Throws InvalidInput unless exactly one of couplings / physical inputs is given.
CouplingParams resolve_couplings(const RunConfig& cfg);
/// "lo,hi" with -1 < lo, hi < 1. lo >= hi is accepted and selects nothing.
EnergyWindow parse_window(const std::string& text);
SolverOptions solver_options(const RunConfig& cfg);
std::vector<int> kappas_or(const RunConfig& cfg, std::vector<int> fallback);
/// Claims configuration; --alpha/--beta-s (if given) restrict the grid to that point.
ClaimsConfig claims_config(const RunConfig& cfg);
/// 1 for mc^2 units, the rest energy in eV otherwise.
double energy_scale(const RunConfig& cfg);

}  // namespace dk::cli
