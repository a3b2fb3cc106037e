#pragma once

#include <string>
#include <vector>

#include "dirac_kepler/claims.hpp"
#include "dirac_kepler_cli/run_config.hpp"
#include "dirac_kepler_cli/table.hpp"

namespace dk::cli {

struct CommandOutput {
  Table table;
  int exit_code = 0;
  /// Per-channel or per-state problems, for stderr.
  std::vector<std::string> diagnostics;
};

/// Exact column layout of each table (used to parse them back).
std::vector<Column> spectrum_columns();
std::vector<Column> solve_columns();
std::vector<Column> scan_columns();

/// Tolerance used by solve and scan to flag a numeric state as wrong.
inline constexpr double kStateTolerance = 1e-8;

CommandOutput run_spectrum(const RunConfig& cfg);
CommandOutput run_solve(const RunConfig& cfg);
CommandOutput run_scan(const RunConfig& cfg);

struct ClaimsOutput {
  FullReport report;
  std::string json;
  std::string text;
  int exit_code = 0;
};

ClaimsOutput run_verify_claims(const RunConfig& cfg);

nlohmann::json report_json(const FullReport& rep, const ClaimsConfig& cfg);
std::string report_text(const FullReport& rep, const ClaimsConfig& cfg);

}  // namespace dk::cli
