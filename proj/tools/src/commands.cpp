#include "dirac_kepler_cli/commands.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "dirac_kepler/analytic_spectrum.hpp"
#include "dirac_kepler/errors.hpp"
#include "dirac_kepler/radial_solver.hpp"

namespace dk::cli {

namespace {

const char* branch_name(Branch b) { return b == Branch::positive ? "positive" : "negative"; }

Cell real_or_empty(double x) { return std::isfinite(x) ? Cell{x} : Cell{std::monostate{}}; }

std::string point_text(const CouplingParams& c, int kappa) {
  std::ostringstream os;
  os << "alpha=" << format_real(c.alpha) << " beta_s=" << format_real(c.beta_s) << " kappa=" << kappa;
  return os.str();
}

// Analytic line carrying the numeric state's label, if the channel is subcritical.
std::optional<SpectrumLine> analytic_partner(const DiracRadialSolution& s, const CouplingParams& c) {
  const int n_r = s.radial_index();
  if (n_r < 0) return std::nullopt;
  const Channel ch = channel_from_kappa(s.label_kappa(), c);
  auto [plus, minus] = energy_branches(n_r, ch, c);
  const SpectrumLine& l = s.branch() == Branch::positive ? plus : minus;
  if (!l.admissible) return std::nullopt;
  return l;
}

}  // namespace

std::vector<Column> spectrum_columns() {
  return {{"kappa", ColumnKind::integer}, {"n_r", ColumnKind::integer}, {"branch", ColumnKind::text},
          {"energy", ColumnKind::real},   {"q_eff", ColumnKind::real},  {"admissible", ColumnKind::boolean},
          {"gamma", ColumnKind::real},    {"l_star", ColumnKind::real}, {"N", ColumnKind::real},
          {"error", ColumnKind::text}};
}

std::vector<Column> solve_columns() {
  return {{"kappa", ColumnKind::integer},   {"n_r", ColumnKind::integer},
          {"E_numeric", ColumnKind::real},  {"E_analytic", ColumnKind::real},
          {"abs_err", ColumnKind::real},    {"q_eff", ColumnKind::real},
          {"gamma", ColumnKind::real},      {"l_star", ColumnKind::real},
          {"N", ColumnKind::real}};
}

std::vector<Column> scan_columns() {
  return {{"alpha", ColumnKind::real},      {"beta_s", ColumnKind::real},
          {"kappa", ColumnKind::integer},   {"n_r", ColumnKind::integer},
          {"branch", ColumnKind::text},     {"E_analytic", ColumnKind::real},
          {"E_numeric", ColumnKind::real},  {"abs_err", ColumnKind::real}};
}

CommandOutput run_spectrum(const RunConfig& cfg) {
  const CouplingParams c = resolve_couplings(cfg);
  const auto kappas = kappas_or(cfg, {-1, 1});
  const int nr_max = cfg.nr_max.value_or(2);
  if (nr_max < 0) throw InvalidInput("--nr-max must be non-negative");
  const double scale = energy_scale(cfg);

  CommandOutput out;
  out.table.columns = spectrum_columns();
  int failed = 0;
  for (const ChannelSpectrum& cs : analytic_spectrum(c, kappas, nr_max)) {
    if (cs.error) {
      ++failed;
      out.diagnostics.push_back("kappa=" + std::to_string(cs.kappa) + ": " + *cs.error);
      out.table.rows.push_back({std::int64_t{cs.kappa}, std::monostate{}, std::monostate{},
                                std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{},
                                std::monostate{}, std::monostate{}, *cs.error});
      continue;
    }
    for (const SpectrumLine& l : cs.lines) {
      out.table.rows.push_back({std::int64_t{cs.kappa}, std::int64_t{l.n_r},
                                std::string(branch_name(l.branch)), l.energy, l.q_eff, l.admissible,
                                l.channel.gamma, l.channel.l_star, l.principal, std::monostate{}});
    }
  }
  if (!kappas.empty() && failed == static_cast<int>(kappas.size())) out.exit_code = 1;
  out.table.scale_columns({"energy"}, scale);
  return out;
}

CommandOutput run_solve(const RunConfig& cfg) {
  const CouplingParams c = resolve_couplings(cfg);
  const auto kappas = kappas_or(cfg, {-1, 1});
  const int nr_max = cfg.nr_max.value_or(2);
  if (nr_max < 0) throw InvalidInput("--nr-max must be non-negative");
  const EnergyWindow window = parse_window(cfg.window);
  const SolverOptions opts = solver_options(cfg);
  const double scale = energy_scale(cfg);

  CommandOutput out;
  out.table.columns = solve_columns();
  if (window.lo >= window.hi) return out;

  int failed_channels = 0;
  for (int kappa : kappas) {
    std::vector<DiracRadialSolution> states;
    try {
      states = find_labelled_states(kappa, c, window, nr_max, opts);
    } catch (const Error& e) {
      ++failed_channels;
      out.diagnostics.push_back(point_text(c, kappa) + ": " + e.what());
      continue;
    }
    for (const auto& s : states) {
      std::optional<SpectrumLine> line;
      try {
        line = analytic_partner(s, c);
      } catch (const Error&) {
      }
      std::vector<Cell> row{std::int64_t{kappa}, std::int64_t{s.radial_index()}, s.energy};
      if (line) {
        const double err = std::abs(s.energy - line->energy);
        row.insert(row.end(), {line->energy, err, line->q_eff, line->channel.gamma,
                               line->channel.l_star, line->principal});
        if (!(err <= kStateTolerance)) {
          out.exit_code = 1;
          out.diagnostics.push_back(point_text(c, kappa) + ": numeric state off by " + format_real(err));
        }
      } else {
        row.insert(row.end(), 6, std::monostate{});
        out.exit_code = 1;
        out.diagnostics.push_back(point_text(c, kappa) + ": numeric state at E=" + format_real(s.energy) +
                                  " has no admissible analytic partner");
      }
      out.table.rows.push_back(std::move(row));
    }
  }
  if (failed_channels > 0) out.exit_code = 1;
  out.table.scale_columns({"E_numeric", "E_analytic", "abs_err"}, scale);
  return out;
}

CommandOutput run_scan(const RunConfig& cfg) {
  if (cfg.scan_steps < 1) throw InvalidInput("--steps must be at least 1");
  if (uses_physical_inputs(cfg)) throw InvalidInput("scan takes --alpha/--beta-s couplings only");
  const bool over_beta = cfg.scan_param == "beta-s";
  if (!over_beta && cfg.scan_param != "alpha") throw InvalidInput("--scan must be alpha or beta-s");
  const double fixed = over_beta ? cfg.alpha.value_or(-1.0) : cfg.beta_s.value_or(0.0);
  if (over_beta && !cfg.alpha) throw InvalidInput("scan over beta-s needs --alpha");

  const auto kappas = kappas_or(cfg, {-1, 1});
  const int nr_max = cfg.nr_max.value_or(1);
  if (nr_max < 0) throw InvalidInput("--nr-max must be non-negative");
  const EnergyWindow window = parse_window(cfg.window);
  const SolverOptions opts = solver_options(cfg);
  const double scale = energy_scale(cfg);

  std::vector<CouplingParams> points;
  for (int i = 0; i < cfg.scan_steps; ++i) {
    const double t = cfg.scan_steps == 1 ? 0.0 : double(i) / (cfg.scan_steps - 1);
    const double v = cfg.scan_from + t * (cfg.scan_to - cfg.scan_from);
    points.push_back(over_beta ? CouplingParams::make(fixed, v) : CouplingParams::make(v, fixed));
  }

  struct PointOut {
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> diagnostics;
    bool failed = false;
  };
  auto run_point = [&](CouplingParams c) {
    PointOut po;
    for (int kappa : kappas) {
      std::vector<SpectrumLine> lines;
      std::vector<DiracRadialSolution> states;
      try {
        const Channel ch = channel_from_kappa(kappa, c);
        for (int n = 0; n <= nr_max; ++n) {
          auto [plus, minus] = energy_branches(n, ch, c);
          for (const auto& l : {plus, minus}) {
            if (l.admissible && l.energy > window.lo && l.energy < window.hi) lines.push_back(l);
          }
        }
        if (window.lo < window.hi) states = find_labelled_states(kappa, c, window, nr_max, opts);
      } catch (const Error& e) {
        po.diagnostics.push_back(point_text(c, kappa) + ": " + e.what());
        continue;
      }
      std::vector<bool> used(states.size(), false);
      for (const auto& l : lines) {
        double e_num = std::nan("");
        for (std::size_t i = 0; i < states.size(); ++i) {
          if (!used[i] && states[i].radial_index() == l.n_r && states[i].branch() == l.branch) {
            used[i] = true;
            e_num = states[i].energy;
            break;
          }
        }
        const double err = std::abs(e_num - l.energy);
        if (!(err <= kStateTolerance)) {
          po.failed = true;
          po.diagnostics.push_back(point_text(c, kappa) + ": line n_r=" + std::to_string(l.n_r) + " " +
                                   branch_name(l.branch) + " not reproduced");
        }
        po.rows.push_back({c.alpha, c.beta_s, std::int64_t{kappa}, std::int64_t{l.n_r},
                           std::string(branch_name(l.branch)), l.energy, real_or_empty(e_num),
                           real_or_empty(err)});
      }
      for (std::size_t i = 0; i < states.size(); ++i) {
        if (used[i]) continue;
        po.failed = true;
        po.diagnostics.push_back(point_text(c, kappa) + ": unmatched numeric state E=" +
                                 format_real(states[i].energy));
        po.rows.push_back({c.alpha, c.beta_s, std::int64_t{kappa}, std::int64_t{states[i].radial_index()},
                           std::string(branch_name(states[i].branch())), std::monostate{},
                           states[i].energy, std::monostate{}});
      }
    }
    return po;
  };

  std::vector<std::future<PointOut>> jobs;
  for (const auto& c : points) jobs.push_back(std::async(std::launch::async, run_point, c));
  CommandOutput out;
  out.table.columns = scan_columns();
  for (auto& j : jobs) {
    PointOut po = j.get();
    for (auto& r : po.rows) out.table.rows.push_back(std::move(r));
    for (auto& d : po.diagnostics) out.diagnostics.push_back(std::move(d));
    if (po.failed) out.exit_code = 1;
  }
  out.table.scale_columns({"E_analytic", "E_numeric", "abs_err"}, scale);
  return out;
}

nlohmann::json report_json(const FullReport& rep, const ClaimsConfig& cfg) {
  using nlohmann::json;
  auto real = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  json j;
  j["framing"] = rep.framing;
  j["config"] = {{"alphas", cfg.grid.alphas},
                 {"beta_s", cfg.grid.beta_s},
                 {"kappas", cfg.kappas},
                 {"nr_max", cfg.nr_max},
                 {"window", {cfg.window.lo, cfg.window.hi}},
                 {"grid_points", cfg.solver.grid_points}};
  j["claims"] = json::array();
  for (const auto& c : rep.claims) {
    json cj;
    cj["id"] = c.id;
    cj["statement"] = c.statement;
    cj["verdict"] = std::string(to_string(c.verdict));
    cj["tolerances"] = json::object();
    for (const auto& [k, v] : c.tolerances) cj["tolerances"][k] = v;
    cj["columns"] = c.columns;
    cj["rows"] = json::array();
    for (const auto& row : c.rows) {
      json r = json::array();
      for (double x : row) r.push_back(real(x));
      cj["rows"].push_back(std::move(r));
    }
    cj["notes"] = c.notes;
    j["claims"].push_back(std::move(cj));
  }
  json sweep;
  sweep["matched"] = rep.sweep.matched;
  sweep["unmatched_analytic"] = rep.sweep.unmatched_analytic;
  sweep["max_abs_error"] = rep.sweep.max_abs_error;
  sweep["unmatched_numeric"] = json::array();
  for (const auto& u : rep.sweep.unmatched_numeric) {
    json r = json::array();
    for (double x : u) r.push_back(real(x));
    sweep["unmatched_numeric"].push_back(std::move(r));
  }
  sweep["errors"] = rep.sweep.errors;
  sweep["rows"] = json::array();
  for (const auto& r : rep.sweep.rows) {
    sweep["rows"].push_back({{"alpha", r.couplings.alpha},
                             {"beta_s", r.couplings.beta_s},
                             {"kappa", r.kappa},
                             {"n_r", r.n_r},
                             {"branch", branch_name(r.branch)},
                             {"E_analytic", r.analytic},
                             {"E_numeric", r.numeric ? json(*r.numeric) : json(nullptr)}});
  }
  j["sweep"] = std::move(sweep);
  j["notes"] = rep.notes;
  j["all_supported"] = rep.all_supported();
  return j;
}

std::string report_text(const FullReport& rep, const ClaimsConfig& cfg) {
  std::ostringstream os;
  os << rep.framing << "\n\n";
  os << "grid: alpha in {";
  for (std::size_t i = 0; i < cfg.grid.alphas.size(); ++i) os << (i ? ", " : "") << cfg.grid.alphas[i];
  os << "}, beta_s in {";
  for (std::size_t i = 0; i < cfg.grid.beta_s.size(); ++i) os << (i ? ", " : "") << cfg.grid.beta_s[i];
  os << "}, kappa in {";
  for (std::size_t i = 0; i < cfg.kappas.size(); ++i) os << (i ? ", " : "") << cfg.kappas[i];
  os << "}, n_r <= " << cfg.nr_max << "\n\n";
  for (const auto& c : rep.claims) {
    os << "[" << to_string(c.verdict) << "] " << c.id << "\n  " << c.statement << "\n";
    os << "  evidence rows: " << c.rows.size();
    for (const auto& [k, v] : c.tolerances) os << ", " << k << " tol " << v;
    os << "\n";
    for (const auto& n : c.notes) os << "  - " << n << "\n";
    os << "\n";
  }
  os << "oracle sweep: " << rep.sweep.matched << " matched, " << rep.sweep.unmatched_analytic
     << " analytic lines without a numeric state, " << rep.sweep.unmatched_numeric.size()
     << " numeric states without an analytic line, max |dE| = " << format_real(rep.sweep.max_abs_error)
     << "\n";
  for (const auto& e : rep.sweep.errors) os << "  error: " << e << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  return os.str();
}

ClaimsOutput run_verify_claims(const RunConfig& cfg) {
  const ClaimsConfig cc = claims_config(cfg);
  ClaimsOutput out;
  out.report = full_report(cc);
  out.json = report_json(out.report, cc).dump(2) + "\n";
  out.text = report_text(out.report, cc);
  const bool sweep_ok = out.report.sweep.passed(cc.energy_tolerance);
  out.exit_code = out.report.all_supported() && sweep_ok ? 0 : 1;
  return out;
}

}  // namespace dk::cli
