#pragma once

// Machine-checkable verdicts on the statements made about the Dirac equation
// with m* = m(1 + a/r) and U = -e^2/r. "Supported" always refers to the
// critical comment's claims, never to the criticised derivation.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dirac_kepler/model_params.hpp"
#include "dirac_kepler/radial_solver.hpp"

namespace dk {

enum class Verdict { supported, refuted, boundary };

std::string_view to_string(Verdict v);

struct CouplingGrid {
  std::vector<double> alphas{0.1, 0.2, 0.5};
  std::vector<double> beta_s{-0.5, -0.1, 0.0, 0.1, 0.3, 0.4};

  std::vector<CouplingParams> points() const;
};

struct ClaimsConfig {
  CouplingGrid grid;
  std::vector<int> kappas{-2, -1, 1};
  int nr_max = 2;
  EnergyWindow window;
  SolverOptions solver;
  /// Numeric and analytic energies closer than this are the same state (units mc^2).
  double energy_tolerance = 1e-8;
  /// |l* - round(l*)| below this counts as an integer.
  double integer_tolerance = 1e-9;
  /// Maximum allowed |eig(Lambda(Lambda+1)) - l*(l*+1)|.
  double eigen_tolerance = 1e-12;
  /// Also record the dimension mismatch of the 2x2-sigma coupling.
  bool reproduce_flaw = false;
  /// Claim ids to run; empty means all.
  std::vector<std::string> selected;
};

struct ClaimReport {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::refuted;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> tolerances;
};

inline constexpr std::string_view kClaimOffDiagonal = "offdiagonal-barrier";
inline constexpr std::string_view kClaimLStar = "lstar-noninteger";
inline constexpr std::string_view kClaimTwoBranches = "two-branches";
inline constexpr std::string_view kClaimBinding = "binding-condition";
inline constexpr std::string_view kClaimLambda = "lambda-eigenvalue";

/// Claim ids in report order.
const std::vector<std::string>& claim_ids();
bool is_claim_id(std::string_view id);

ClaimReport claim_offdiagonal(const ClaimsConfig& cfg);
ClaimReport claim_lstar_noninteger(const ClaimsConfig& cfg);
ClaimReport claim_two_branches(const ClaimsConfig& cfg);
ClaimReport claim_binding_condition(const ClaimsConfig& cfg);
ClaimReport claim_lambda_eigencheck(const ClaimsConfig& cfg);

/// One analytic line compared with the numeric solver.
struct SweepRow {
  CouplingParams couplings;
  int kappa = 0;
  int n_r = 0;
  Branch branch = Branch::positive;
  double analytic = 0.0;
  std::optional<double> numeric;
};

/// Analytic-vs-numeric comparison over the whole grid.
struct OracleSweep {
  std::vector<SweepRow> rows;
  /// Numeric states (label kappa in the grid, n_r <= nr_max) with no admissible
  /// analytic partner, as (alpha, beta_s, kappa, n_r, E).
  std::vector<std::vector<double>> unmatched_numeric;
  double max_abs_error = 0.0;
  std::size_t matched = 0;
  std::size_t unmatched_analytic = 0;
  std::vector<std::string> errors;

  bool passed(double tol) const {
    return unmatched_numeric.empty() && unmatched_analytic == 0 && errors.empty() &&
           max_abs_error <= tol;
  }
};

OracleSweep oracle_sweep(const ClaimsConfig& cfg);

struct FullReport {
  std::string framing;
  std::vector<ClaimReport> claims;
  OracleSweep sweep;
  std::vector<std::string> notes;

  bool all_supported() const;
};

/// Runs the selected claims and the oracle sweep. Throws InvalidInput for an
/// empty grid or unknown claim id.
FullReport full_report(const ClaimsConfig& cfg);

}  // namespace dk
