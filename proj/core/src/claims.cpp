#include "dirac_kepler/claims.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "dirac_kepler/analytic_spectrum.hpp"
#include "dirac_kepler/angular_algebra.hpp"
#include "dirac_kepler/errors.hpp"
#include "dirac_kepler/factorization.hpp"

namespace dk {

namespace {

void require_grid(const ClaimsConfig& cfg, bool needs_kappas) {
  if (cfg.grid.alphas.empty() || cfg.grid.beta_s.empty()) {
    throw InvalidInput("coupling grid is empty");
  }
  if (needs_kappas && cfg.kappas.empty()) throw InvalidInput("kappa set is empty");
  for (int k : cfg.kappas) {
    if (k == 0) throw InvalidInput("kappa must be nonzero");
  }
  if (cfg.nr_max < 0) throw InvalidInput("nr_max must be non-negative");
}

double as_double(bool b) { return b ? 1.0 : 0.0; }

std::string fmt_point(const CouplingParams& c, int kappa) {
  std::ostringstream os;
  os << "alpha=" << c.alpha << " beta_s=" << c.beta_s << " kappa=" << kappa;
  return os.str();
}

// Numeric states carrying the squared-equation label `kappa`, or the error text.
struct LabelledStates {
  std::vector<DiracRadialSolution> states;
  std::optional<std::string> error;
};

LabelledStates solve_labelled(int kappa, const CouplingParams& c, const ClaimsConfig& cfg) {
  LabelledStates out;
  try {
    out.states = find_labelled_states(kappa, c, cfg.window, cfg.nr_max, cfg.solver);
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

const DiracRadialSolution* find_state(const std::vector<DiracRadialSolution>& states, int n_r,
                                      Branch b) {
  for (const auto& s : states) {
    if (s.radial_index() == n_r && s.branch() == b) return &s;
  }
  return nullptr;
}

bool in_window(double e, const EnergyWindow& w) { return e > w.lo && e < w.hi; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::supported:
      return "supported";
    case Verdict::refuted:
      return "refuted";
    case Verdict::boundary:
      return "boundary";
  }
  return "refuted";
}

std::vector<CouplingParams> CouplingGrid::points() const {
  std::vector<CouplingParams> pts;
  for (double a : alphas) {
    for (double b : beta_s) pts.push_back(CouplingParams::make(a, b));
  }
  return pts;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{std::string(kClaimOffDiagonal), std::string(kClaimLStar),
                                            std::string(kClaimTwoBranches), std::string(kClaimBinding),
                                            std::string(kClaimLambda)};
  return ids;
}

bool is_claim_id(std::string_view id) {
  const auto& ids = claim_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ClaimReport claim_offdiagonal(const ClaimsConfig& cfg) {
  require_grid(cfg, false);
  ClaimReport rep;
  rep.id = kClaimOffDiagonal;
  rep.statement =
      "The 1/r^2 'centrifugal barrier' of the squared equation has off-diagonal blocks that mix "
      "upper and lower components, so it is not a Schroedinger equation.";
  rep.columns = {"alpha", "beta_s", "upper_left", "upper_right", "lower_left", "lower_right",
                 "mixes", "coincidence"};
  const double zero = 1e-14;
  rep.tolerances = {{"zero_block_norm", zero}};

  int generic = 0, generic_mixing = 0;
  for (const CouplingParams& c : cfg.grid.points()) {
    const BarrierStructure s = barrier_block_structure(c, kReferenceTheta, kReferencePhi, zero);
    const bool free = c.alpha == 0.0 && c.beta_s == 0.0;
    const bool on_set = !free && (std::abs(c.alpha - c.beta_s) <= zero || std::abs(c.alpha + c.beta_s) <= zero);
    rep.rows.push_back({c.alpha, c.beta_s, s.upper_left, s.upper_right, s.lower_left, s.lower_right,
                        as_double(s.mixes_components), as_double(on_set)});
    if (free) {
      rep.notes.push_back("alpha=beta_s=0 is the free particle; excluded from the verdict");
      continue;
    }
    if (on_set) {
      std::ostringstream os;
      os << "alpha=" << c.alpha << " beta_s=" << c.beta_s << ": "
         << (s.upper_right <= zero ? "upper-right" : "lower-left")
         << " block vanishes (scalar and vector strengths coincide); the other still mixes";
      rep.notes.push_back(os.str());
      continue;
    }
    ++generic;
    if (s.mixes_components) ++generic_mixing;
  }
  if (generic > 0) {
    rep.verdict = generic_mixing == generic ? Verdict::supported : Verdict::refuted;
  } else {
    rep.verdict = Verdict::boundary;
  }
  return rep;
}

ClaimReport claim_lstar_noninteger(const ClaimsConfig& cfg) {
  require_grid(cfg, true);
  ClaimReport rep;
  rep.id = kClaimLStar;
  rep.statement =
      "The effective angular momentum l* is not a non-negative integer in general, so the radial "
      "equation cannot be identified with the hydrogen problem.";
  rep.columns = {"alpha", "beta_s", "kappa", "gamma_lambda", "l_star", "l_star_integer",
                 "gamma_integer"};
  rep.tolerances = {{"integer", cfg.integer_tolerance}};

  int total = 0, non_integer = 0, inconsistent = 0;
  for (const CouplingParams& c : cfg.grid.points()) {
    for (int kappa : cfg.kappas) {
      try {
        const Channel ch = channel_from_kappa(kappa, c);
        // gamma taken independently from the spectrum of the Lambda block.
        const double gamma = lambda_block(kappa, c).eigenvalues()[0].real();
        const auto near_int = [&](double x) {
          return x > -cfg.integer_tolerance && std::abs(x - std::round(x)) <= cfg.integer_tolerance;
        };
        const bool l_int = near_int(ch.l_star);
        const bool g_int = near_int(gamma) && gamma > 0.5;
        rep.rows.push_back({c.alpha, c.beta_s, double(kappa), gamma, ch.l_star, as_double(l_int),
                            as_double(g_int)});
        ++total;
        if (!l_int) ++non_integer;
        if (l_int != g_int) ++inconsistent;
      } catch (const SupercriticalError& e) {
        rep.notes.push_back(std::string("skipped: ") + e.what());
      }
    }
  }
  if (total == 0) {
    rep.verdict = Verdict::refuted;
    rep.notes.push_back("no subcritical grid point");
  } else if (inconsistent > 0) {
    rep.verdict = Verdict::refuted;
  } else if (2 * non_integer > total) {
    rep.verdict = Verdict::supported;
  } else {
    rep.verdict = Verdict::boundary;
    rep.notes.push_back("integer l* dominates this grid (alpha = |beta_s| coincidence)");
  }
  return rep;
}

ClaimReport claim_two_branches(const ClaimsConfig& cfg) {
  require_grid(cfg, true);
  ClaimReport rep;
  rep.id = kClaimTwoBranches;
  rep.statement =
      "The energy spectrum has two branches of bound states, with positive and negative energy.";
  rep.columns = {"alpha", "beta_s", "kappa", "n_r", "E_plus", "E_plus_numeric", "E_minus",
                 "E_minus_numeric", "confirmed"};
  rep.tolerances = {{"energy", cfg.energy_tolerance}};

  bool confirmed_any = false;
  for (const CouplingParams& c : cfg.grid.points()) {
    for (int kappa : cfg.kappas) {
      std::vector<std::pair<SpectrumLine, SpectrumLine>> candidates;
      try {
        const Channel ch = channel_from_kappa(kappa, c);
        for (int n_r = 0; n_r <= cfg.nr_max; ++n_r) {
          auto pair = energy_branches(n_r, ch, c);
          if (pair.first.admissible && pair.second.admissible && pair.first.energy > 0.0 &&
              pair.second.energy < 0.0 && in_window(pair.first.energy, cfg.window) &&
              in_window(pair.second.energy, cfg.window)) {
            candidates.push_back(pair);
          }
        }
      } catch (const Error&) {
        continue;
      }
      if (candidates.empty()) continue;
      const LabelledStates num = solve_labelled(kappa, c, cfg);
      if (num.error) {
        rep.notes.push_back(fmt_point(c, kappa) + ": " + *num.error);
        continue;
      }
      for (const auto& [plus, minus] : candidates) {
        const auto* sp = find_state(num.states, plus.n_r, Branch::positive);
        const auto* sm = find_state(num.states, minus.n_r, Branch::negative);
        const double ep = sp ? sp->energy : std::nan("");
        const double em = sm ? sm->energy : std::nan("");
        const bool ok = sp && sm && std::abs(ep - plus.energy) <= cfg.energy_tolerance &&
                        std::abs(em - minus.energy) <= cfg.energy_tolerance && ep > 0.0 && em < 0.0;
        confirmed_any = confirmed_any || ok;
        rep.rows.push_back({c.alpha, c.beta_s, double(kappa), double(plus.n_r), plus.energy, ep,
                            minus.energy, em, as_double(ok)});
      }
    }
  }
  rep.verdict = confirmed_any ? Verdict::supported : Verdict::refuted;
  return rep;
}

ClaimReport claim_binding_condition(const ClaimsConfig& cfg) {
  require_grid(cfg, true);
  ClaimReport rep;
  rep.id = kClaimBinding;
  rep.statement =
      "Bound states require a < e^2 E/(m^2 c^4) (beta_s < alpha E), not a < e^2/(m c^2) "
      "(beta_s < alpha).";
  rep.columns = {"alpha", "beta_s", "kappa", "n_r", "branch", "E", "corrected", "uncorrected",
                 "numeric_state"};
  rep.tolerances = {{"energy", cfg.energy_tolerance}};

  int rows = 0, agree_corrected = 0, disagree_uncorrected = 0;
  for (const CouplingParams& c : cfg.grid.points()) {
    for (int kappa : cfg.kappas) {
      std::vector<SpectrumLine> roots;
      try {
        const Channel ch = channel_from_kappa(kappa, c);
        for (int n_r = 0; n_r <= cfg.nr_max; ++n_r) {
          auto [plus, minus] = energy_branches(n_r, ch, c);
          for (const SpectrumLine& l : {plus, minus}) {
            if (in_window(l.energy, cfg.window)) roots.push_back(l);
          }
        }
      } catch (const Error&) {
        continue;
      }
      if (roots.empty()) continue;
      const LabelledStates num = solve_labelled(kappa, c, cfg);
      if (num.error) {
        rep.notes.push_back(fmt_point(c, kappa) + ": " + *num.error);
        continue;
      }
      for (const SpectrumLine& l : roots) {
        // Any numeric state of the same label at this energy, regardless of its index.
        bool exists = false;
        for (const auto& s : num.states) {
          if (std::abs(s.energy - l.energy) <= cfg.energy_tolerance) exists = true;
        }
        const BindingCondition bc = binding_condition(l.energy, c);
        rep.rows.push_back({c.alpha, c.beta_s, double(kappa), double(l.n_r),
                            l.branch == Branch::positive ? 1.0 : -1.0, l.energy,
                            as_double(bc.corrected), as_double(bc.uncorrected), as_double(exists)});
        ++rows;
        if (exists == bc.corrected) ++agree_corrected;
        if (exists != bc.uncorrected) ++disagree_uncorrected;
      }
    }
  }
  if (rows == 0) {
    rep.verdict = Verdict::refuted;
    rep.notes.push_back("no candidate energies inside the window");
  } else if (agree_corrected == rows && disagree_uncorrected > 0) {
    rep.verdict = Verdict::supported;
  } else if (agree_corrected == rows) {
    rep.verdict = Verdict::boundary;
    rep.notes.push_back("both conditions agree with the solver on this grid");
  } else {
    rep.verdict = Verdict::refuted;
  }
  std::ostringstream os;
  os << agree_corrected << "/" << rows << " candidates agree with beta_s < alpha E; "
     << disagree_uncorrected << " contradict beta_s < alpha";
  rep.notes.push_back(os.str());
  return rep;
}

ClaimReport claim_lambda_eigencheck(const ClaimsConfig& cfg) {
  require_grid(cfg, true);
  ClaimReport rep;
  rep.id = kClaimLambda;
  rep.statement =
      "hbar^2 l*(l*+1) is an eigenvalue of Lambda(Lambda + hbar), with l* given by the "
      "square-root formula and the upper sign for j = l + 1/2.";
  rep.columns = {"alpha", "beta_s", "kappa", "eig_large", "eig_small", "lstar_lower_sign",
                 "lstar_upper_sign", "max_deviation"};
  rep.tolerances = {{"eigenvalue", cfg.eigen_tolerance}};

  double worst = 0.0;
  int checked = 0;
  for (const CouplingParams& c : cfg.grid.points()) {
    for (int kappa : cfg.kappas) {
      try {
        const auto [big, small] = lambda_quadratic_eigs(lambda_block(kappa, c));
        const double j = std::abs(kappa) - 0.5;
        const double l_lower = effective_l_from_j(j, SpinOrbitSign::lower, c);
        const double l_upper = effective_l_from_j(j, SpinOrbitSign::upper, c);
        const double dev = std::max(std::abs(big - l_lower * (l_lower + 1.0)),
                                    std::abs(small - l_upper * (l_upper + 1.0)));
        worst = std::max(worst, dev);
        ++checked;
        rep.rows.push_back({c.alpha, c.beta_s, double(kappa), big, small, l_lower, l_upper, dev});
      } catch (const SupercriticalError& e) {
        rep.notes.push_back(std::string("skipped: ") + e.what());
      }
    }
  }
  rep.verdict = checked > 0 && worst <= cfg.eigen_tolerance ? Verdict::supported : Verdict::refuted;
  std::ostringstream os;
  os.precision(3);
  os << "max deviation " << std::scientific << worst << " over " << checked << " channels";
  rep.notes.push_back(os.str());
  return rep;
}

OracleSweep oracle_sweep(const ClaimsConfig& cfg) {
  require_grid(cfg, true);
  struct PointResult {
    std::vector<SweepRow> rows;
    std::vector<std::vector<double>> unmatched_numeric;
    std::vector<std::string> errors;
  };
  auto run_point = [&cfg](CouplingParams c) {
    PointResult pr;
    for (int kappa : cfg.kappas) {
      std::vector<SpectrumLine> lines;
      try {
        const Channel ch = channel_from_kappa(kappa, c);
        for (int n_r = 0; n_r <= cfg.nr_max; ++n_r) {
          auto [plus, minus] = energy_branches(n_r, ch, c);
          for (const SpectrumLine& l : {plus, minus}) {
            if (l.admissible && in_window(l.energy, cfg.window)) lines.push_back(l);
          }
        }
      } catch (const SupercriticalError&) {
        continue;
      }
      const LabelledStates num = solve_labelled(kappa, c, cfg);
      if (num.error) {
        pr.errors.push_back(fmt_point(c, kappa) + ": " + *num.error);
        continue;
      }
      std::vector<bool> used(num.states.size(), false);
      for (const SpectrumLine& l : lines) {
        SweepRow row{c, kappa, l.n_r, l.branch, l.energy, std::nullopt};
        for (std::size_t i = 0; i < num.states.size(); ++i) {
          const auto& s = num.states[i];
          if (!used[i] && s.radial_index() == l.n_r && s.branch() == l.branch) {
            used[i] = true;
            row.numeric = s.energy;
            break;
          }
        }
        pr.rows.push_back(row);
      }
      for (std::size_t i = 0; i < num.states.size(); ++i) {
        if (used[i]) continue;
        const auto& s = num.states[i];
        pr.unmatched_numeric.push_back(
            {c.alpha, c.beta_s, double(kappa), double(s.radial_index()), s.energy});
      }
    }
    return pr;
  };

  std::vector<std::future<PointResult>> jobs;
  for (const CouplingParams& c : cfg.grid.points()) {
    jobs.push_back(std::async(std::launch::async, run_point, c));
  }
  OracleSweep sweep;
  for (auto& j : jobs) {
    PointResult pr = j.get();
    for (auto& r : pr.rows) {
      if (r.numeric) {
        ++sweep.matched;
        sweep.max_abs_error = std::max(sweep.max_abs_error, std::abs(*r.numeric - r.analytic));
      } else {
        ++sweep.unmatched_analytic;
      }
      sweep.rows.push_back(r);
    }
    for (auto& u : pr.unmatched_numeric) sweep.unmatched_numeric.push_back(std::move(u));
    for (auto& e : pr.errors) sweep.errors.push_back(std::move(e));
  }
  return sweep;
}

bool FullReport::all_supported() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimReport& c) { return c.verdict == Verdict::supported; });
}

FullReport full_report(const ClaimsConfig& cfg) {
  require_grid(cfg, true);
  for (const auto& id : cfg.selected) {
    if (!is_claim_id(id)) throw InvalidInput("unknown claim id: " + id);
  }
  auto wanted = [&cfg](std::string_view id) {
    return cfg.selected.empty() ||
           std::find(cfg.selected.begin(), cfg.selected.end(), id) != cfg.selected.end();
  };

  FullReport rep;
  rep.framing =
      "Verdicts refer to the claims of the critical comment: 'supported' means the computation "
      "agrees with the comment, 'refuted' that it contradicts it, 'boundary' that the grid only "
      "probes a degenerate case.";
  if (wanted(kClaimOffDiagonal)) rep.claims.push_back(claim_offdiagonal(cfg));
  if (wanted(kClaimLStar)) rep.claims.push_back(claim_lstar_noninteger(cfg));
  if (wanted(kClaimTwoBranches)) rep.claims.push_back(claim_two_branches(cfg));
  if (wanted(kClaimBinding)) rep.claims.push_back(claim_binding_condition(cfg));
  if (wanted(kClaimLambda)) rep.claims.push_back(claim_lambda_eigencheck(cfg));
  rep.sweep = oracle_sweep(cfg);

  if (cfg.reproduce_flaw) {
    const FactorizationReport fr =
        verify_factorization(cfg.kappas.front(), cfg.grid.points().front(),
                             FactorizationOptions{.convention = SigmaConvention::pauli_2x2});
    rep.notes.push_back("2x2 sigma in the 1/r^2 coupling: " +
                        fr.inconsistency.value_or("no inconsistency detected"));
  }
  return rep;
}

}  // namespace dk
