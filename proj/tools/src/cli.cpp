#include "dirac_kepler_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dirac_kepler/errors.hpp"
#include "dirac_kepler_cli/commands.hpp"

namespace dk::cli {

namespace {

// Enum-valued flags are read as text and converted after parsing.
struct EnumText {
  std::string unit_system = "natural";
  std::string format = "text";
  std::string units = "mc2";
};

void apply_enums(const EnumText& t, RunConfig& cfg) {
  cfg.unit_system = t.unit_system == "si" ? UnitSystem::si_like : UnitSystem::natural;
  cfg.format = parse_format(t.format);
  cfg.energy_units = t.units == "ev" ? EnergyUnits::ev : EnergyUnits::mc2;
}

void add_shared_options(CLI::App& app, RunConfig& cfg, EnumText& enums) {
  app.add_option("--alpha", cfg.alpha, "Vector coupling e^2/(hbar c)");
  app.add_option("--beta-s", cfg.beta_s, "Scalar coupling m c a / hbar (default 0)");
  app.add_option("--e2", cfg.e2, "e^2 (physical inputs)");
  app.add_option("--a", cfg.a, "Mass length a in m* = m(1 + a/r) (physical inputs)");
  app.add_option("--mass", cfg.mass, "Rest mass m (physical inputs)");
  app.add_option("--unit-system", enums.unit_system, "Units of the physical inputs: natural or si")
      ->check(CLI::IsMember({"natural", "si"}));
  app.add_option("--kappa", cfg.kappas, "Channel kappa, repeatable")->delimiter(',');
  app.add_option("--nr-max", cfg.nr_max, "Largest radial index");
  app.add_option("--window", cfg.window, "Energy window lo,hi in units of mc^2");
  app.add_option("--grid-points", cfg.grid_points, "Radial grid points of the shooting solver");
  app.add_option("--format", enums.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", cfg.out, "Output file (verify-claims: path prefix for .json and .txt)");
  app.add_option("--units", enums.units, "Energy units of the output: mc2 or ev")
      ->check(CLI::IsMember({"mc2", "ev"}));
  app.add_option("--mc2", cfg.mc2_ev, "Rest energy in eV for --units ev");
  app.add_option("--claim", cfg.claims, "Claim id to verify, repeatable")
      ->delimiter(',')
      ->check(CLI::IsMember(claim_ids()));
  app.add_flag("--reproduce-flaw", cfg.reproduce_flaw,
               "Also report the dimension mismatch of the 2x2-sigma coupling");
  app.add_option("--scan", cfg.scan_param, "Scanned coupling: alpha or beta-s")
      ->check(CLI::IsMember({"alpha", "beta-s"}));
  app.add_option("--from", cfg.scan_from, "First scanned value");
  app.add_option("--to", cfg.scan_to, "Last scanned value");
  app.add_option("--steps", cfg.scan_steps, "Number of scanned values");
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int emit(const CommandOutput& res, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto& d : res.diagnostics) err << d << "\n";
  const std::string body = render(res.table, cfg.format);
  if (cfg.out.empty()) {
    out << body;
  } else if (!write_file(cfg.out, body, err)) {
    return kExitFailure;
  }
  return res.exit_code;
}

int emit_claims(const ClaimsOutput& res, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.out.empty()) {
    out << (cfg.format == OutputFormat::json ? res.json : res.text);
    return res.exit_code;
  }
  std::filesystem::path prefix(cfg.out);
  if (prefix.extension() == ".json" || prefix.extension() == ".txt") prefix.replace_extension();
  const std::string base = prefix.string();
  if (!write_file(base + ".json", res.json, err) || !write_file(base + ".txt", res.text, err)) {
    return kExitFailure;
  }
  out << "wrote " << base << ".json and " << base << ".txt\n";
  return res.exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Dirac equation with m* = m(1 + a/r) and U = -e^2/r: spectra, numeric solver and claim checks",
               "dirac-kepler"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value file mirroring the flags; flags win")
      ->envname(kConfigEnv);
  EnumText enums;
  add_shared_options(app, cfg, enums);
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form energies of both branches");
  auto* solve = app.add_subcommand("solve", "Numeric eigenvalues compared with the closed form");
  auto* verify = app.add_subcommand("verify-claims", "Verdicts on the claims plus the oracle sweep");
  auto* scan = app.add_subcommand("scan", "Sweep one coupling, comparing numeric and closed-form energies");
  for (auto* sub : {spectrum, solve, verify, scan}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  apply_enums(enums, cfg);

  try {
    if (spectrum->parsed()) return emit(run_spectrum(cfg), cfg, out, err);
    if (solve->parsed()) return emit(run_solve(cfg), cfg, out, err);
    if (scan->parsed()) return emit(run_scan(cfg), cfg, out, err);
    if (verify->parsed()) return emit_claims(run_verify_claims(cfg), cfg, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dk::cli
