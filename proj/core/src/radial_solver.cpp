#include "dirac_kepler/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include "dirac_kepler/errors.hpp"
#include "dirac_kepler/special_functions.hpp"

namespace dk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRescaleAbove = 1e150;

struct State {
  double G;
  double F;
};

// d(G, F)/dx where x is ln r (logarithmic grid) or r (uniform grid).
struct RadialSystem {
  double energy;
  int kappa;
  CouplingParams c;
  bool logarithmic;

  State operator()(double r, State y) const {
    // r * derivative: every 1/r term becomes a constant.
    const double rg = -kappa * y.G + (r * (energy + 1.0) + c.alpha + c.beta_s) * y.F;
    const double rf = kappa * y.F - (r * (energy - 1.0) - c.beta_s + c.alpha) * y.G;
    if (logarithmic) return {rg, rf};
    return {rg / r, rf / r};
  }
};

State rk4_step(const RadialSystem& sys, double r0, double rmid, double r1, double h, State y) {
  const State k1 = sys(r0, y);
  const State k2 = sys(rmid, {y.G + 0.5 * h * k1.G, y.F + 0.5 * h * k1.F});
  const State k3 = sys(rmid, {y.G + 0.5 * h * k2.G, y.F + 0.5 * h * k2.F});
  const State k4 = sys(r1, {y.G + h * k3.G, y.F + h * k3.F});
  return {y.G + h / 6.0 * (k1.G + 2.0 * k2.G + 2.0 * k3.G + k4.G),
          y.F + h / 6.0 * (k1.F + 2.0 * k2.F + 2.0 * k3.F + k4.F)};
}

// Signed rotation from a to b, assuming less than half a turn per step.
double rotation(State a, State b) { return std::atan2(a.G * b.F - a.F * b.G, a.G * b.G + a.F * b.F); }

struct HalfSolution {
  std::vector<double> G;
  std::vector<double> F;
  std::vector<double> log_scale;  // value_i * exp(log_scale_i) is the unscaled solution
  double phase = 0.0;             // unwrapped angle of (G, F) at the far end
  int nodes_G = 0;
};

void check_finite(State y) {
  if (!std::isfinite(y.G) || !std::isfinite(y.F)) {
    throw SolverError("radial integration produced a non-finite value");
  }
}

// Integrates between grid indices `from` and `to` (either direction).
HalfSolution integrate(const RadialSystem& sys, const RadialGrid& grid, std::size_t from,
                       std::size_t to, State start, bool store) {
  HalfSolution out;
  const long dir = to >= from ? 1 : -1;
  const std::size_t count = (dir > 0 ? to - from : from - to) + 1;
  if (store) {
    out.G.reserve(count);
    out.F.reserve(count);
    out.log_scale.reserve(count);
  }
  State y = start;
  double scale = 0.0;
  double phase = std::atan2(y.F, y.G);
  auto record = [&](State s) {
    if (store) {
      out.G.push_back(s.G);
      out.F.push_back(s.F);
      out.log_scale.push_back(scale);
    }
  };
  record(y);
  const double h = dir * grid.step();
  const bool log_grid = grid.spacing() == GridSpacing::logarithmic;
  std::size_t i = from;
  for (std::size_t k = 1; k < count; ++k) {
    const std::size_t j = static_cast<std::size_t>(static_cast<long>(i) + dir);
    const double r0 = grid[i];
    const double r1 = grid[j];
    const double rmid = grid.midpoint(std::min(i, j));
    const double x_step = log_grid ? h : r1 - r0;
    State next = rk4_step(sys, r0, rmid, r1, x_step, y);
    check_finite(next);
    phase += rotation(y, next);
    if ((y.G > 0.0 && next.G < 0.0) || (y.G < 0.0 && next.G > 0.0)) ++out.nodes_G;
    const double norm = std::hypot(next.G, next.F);
    if (norm > kRescaleAbove || (norm < 1.0 / kRescaleAbove && norm > 0.0)) {
      next.G /= norm;
      next.F /= norm;
      scale += std::log(norm);
    }
    y = next;
    record(y);
    i = j;
  }
  out.phase = phase;
  return out;
}

struct TwoSided {
  HalfSolution out;
  HalfSolution in;  // stored from r_max inward
  std::size_t match = 0;
};

State inward_start(double energy) {
  const double lambda = std::sqrt((1.0 - energy) * (1.0 + energy));
  return {1.0, -lambda / (1.0 + energy)};
}

TwoSided shoot(double energy, int kappa, const CouplingParams& c, const RadialGrid& grid,
               bool store) {
  if (!(std::abs(energy) < 1.0)) throw InvalidInput("bound-state energy must satisfy |E| < 1");
  const RadialSystem sys{energy, kappa, c, grid.spacing() == GridSpacing::logarithmic};
  const auto [g0, f0] = frobenius_seed(kappa, c);
  const double gamma = channel_from_kappa(kappa, c).gamma;
  const double amp = std::pow(grid.r_min(), gamma);
  const double r_match = matching_radius(c, grid);
  const auto pts = grid.points();
  const std::size_t match = static_cast<std::size_t>(
      std::lower_bound(pts.begin(), pts.end(), r_match) - pts.begin());

  TwoSided ts;
  ts.match = match;
  ts.out = integrate(sys, grid, 0, match, {amp * g0, amp * f0}, store);
  ts.in = integrate(sys, grid, grid.size() - 1, match, inward_start(energy), store);
  return ts;
}

int sign_changes(std::span<const double> v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double floor = 1e-12 * peak;
  int count = 0;
  int last = 0;
  for (double x : v) {
    if (std::abs(x) <= floor) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t points, GridSpacing spacing)
    : spacing_(spacing) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw InvalidInput("radial grid requires 0 < r_min < r_max");
  }
  if (points < 3) throw InvalidInput("radial grid needs at least 3 points");
  r_.resize(points);
  if (spacing == GridSpacing::logarithmic) {
    const double t0 = std::log(r_min);
    step_ = (std::log(r_max) - t0) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) r_[i] = std::exp(t0 + step_ * static_cast<double>(i));
  } else {
    step_ = (r_max - r_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) r_[i] = r_min + step_ * static_cast<double>(i);
  }
  r_.front() = r_min;
  r_.back() = r_max;
}

double RadialGrid::midpoint(std::size_t i) const {
  if (spacing_ == GridSpacing::logarithmic) return std::sqrt(r_[i] * r_[i + 1]);
  return 0.5 * (r_[i] + r_[i + 1]);
}

RadialDerivative dirac_rhs(double r, double G, double F, double energy, int kappa,
                           const CouplingParams& c) {
  if (!(r > 0.0)) throw InvalidInput("dirac_rhs requires r > 0");
  const double mass = 1.0 + c.beta_s / r;
  const double potential = -c.alpha / r;
  return {-(kappa / r) * G + (energy + mass - potential) * F,
          (kappa / r) * F - (energy - mass - potential) * G};
}

std::pair<double, double> frobenius_seed(int kappa, const CouplingParams& c) {
  // r^gamma (G0, F0) solves the 1/r part:
  //   (gamma + kappa) G0 - (alpha + beta_s) F0 = 0
  //   (beta_s - alpha) G0 + (kappa - gamma) F0 = 0
  const double gamma = channel_from_kappa(kappa, c).gamma;
  const double a0 = gamma + kappa;
  const double b0 = -(c.alpha + c.beta_s);
  const double a1 = c.beta_s - c.alpha;
  const double b1 = kappa - gamma;
  double g, f;
  if (std::hypot(a0, b0) >= std::hypot(a1, b1)) {
    g = -b0;
    f = a0;
  } else {
    g = -b1;
    f = a1;
  }
  const double n = std::hypot(g, f);
  if (g < 0.0 || (g == 0.0 && f < 0.0)) {
    g = -g;
    f = -f;
  }
  return {g / n, f / n};
}

RadialGrid grid_for_energy(double energy, const CouplingParams& c, const SolverOptions& opts) {
  const double lambda2 = (1.0 - energy) * (1.0 + energy);
  const double lambda = std::sqrt(lambda2);
  // Outer root of p^2(r) = (E + alpha/r)^2 - (1 + beta_s/r)^2.
  const double q = c.alpha * energy - c.beta_s;
  const double disc = q * q + lambda2 * (c.alpha * c.alpha - c.beta_s * c.beta_s);
  double turning = 0.0;
  if (disc > 0.0) turning = std::max(0.0, (q + std::sqrt(disc)) / lambda2);
  const double r_max = turning + opts.decay_lengths / lambda;
  return RadialGrid(opts.r_min, std::max(r_max, 10.0), opts.grid_points);
}

double matching_radius(const CouplingParams& c, const RadialGrid& grid) {
  const double target = 2.0 * (c.alpha + std::abs(c.beta_s));
  const std::size_t margin = std::max<std::size_t>(2, grid.size() / 20);
  return std::clamp(target, grid[margin], grid[grid.size() - 1 - margin]);
}

ShootResult shoot_and_match(double energy, int kappa, const CouplingParams& c,
                            const RadialGrid& grid) {
  const TwoSided ts = shoot(energy, kappa, c, grid, false);
  ShootResult res;
  res.match_index = ts.match;
  res.r_match = grid[ts.match];
  res.nodes = ts.out.nodes_G;
  res.phase = ts.in.phase - ts.out.phase;
  res.defect = std::sin(res.phase);
  return res;
}

DiracRadialSolution assemble_solution(double energy, int kappa, const CouplingParams& c,
                                      const SolverOptions& opts) {
  const RadialGrid grid = grid_for_energy(energy, c, opts);
  const TwoSided ts = shoot(energy, kappa, c, grid, true);
  const std::size_t m = ts.match;
  const std::size_t n = grid.size();

  // Bring both halves to a common scale relative to the matching point.
  const double out_ref = ts.out.log_scale.back();
  const double in_ref = ts.in.log_scale.back();
  const double go = ts.out.G.back(), fo = ts.out.F.back();
  const double gi = ts.in.G.back(), fi = ts.in.F.back();
  const double ratio = (go * gi + fo * fi) / (gi * gi + fi * fi);

  DiracRadialSolution sol;
  sol.r.assign(grid.points().begin(), grid.points().end());
  sol.G.resize(n);
  sol.F.resize(n);
  for (std::size_t i = 0; i <= m; ++i) {
    const double s = std::exp(ts.out.log_scale[i] - out_ref);
    sol.G[i] = ts.out.G[i] * s;
    sol.F[i] = ts.out.F[i] * s;
  }
  for (std::size_t k = 0; k + 1 < ts.in.G.size(); ++k) {
    const std::size_t i = n - 1 - k;
    const double s = ratio * std::exp(ts.in.log_scale[k] - in_ref);
    sol.G[i] = ts.in.G[k] * s;
    sol.F[i] = ts.in.F[k] * s;
  }

  std::vector<double> dens(n);
  for (std::size_t i = 0; i < n; ++i) dens[i] = sol.G[i] * sol.G[i] + sol.F[i] * sol.F[i];
  const double norm = integrate(dens, sol.r);
  const double inv = (sol.G[m] < 0.0 && sol.G[0] < 0.0 ? -1.0 : 1.0) / std::sqrt(norm);
  for (std::size_t i = 0; i < n; ++i) {
    sol.G[i] *= inv;
    sol.F[i] *= inv;
  }
  if (sol.G[0] < 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      sol.G[i] = -sol.G[i];
      sol.F[i] = -sol.F[i];
    }
  }

  sol.energy = energy;
  sol.kappa = kappa;
  sol.nodes_G = sign_changes(sol.G);
  sol.nodes_F = sign_changes(sol.F);
  sol.upper_weight = radial_norm(sol.G, sol.r);
  const double go_n = std::hypot(go, fo), gi_n = std::hypot(gi, fi);
  sol.match_defect = (go * fi - gi * fo) / (go_n * gi_n);

  // Least-squares slope of ln|G| vs ln r over the innermost decade.
  const double r_stop = 10.0 * grid.r_min();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (std::size_t i = 0; i < n && grid[i] <= r_stop; ++i) {
    if (sol.G[i] == 0.0) continue;
    const double x = std::log(grid[i]);
    const double y = std::log(std::abs(sol.G[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt >= 2) sol.small_r_exponent = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  return sol;
}

namespace {

class PhaseCounter {
 public:
  PhaseCounter(int kappa, const CouplingParams& c, const SolverOptions& opts)
      : kappa_(kappa), c_(c), opts_(opts) {}

  double operator()(double energy) const {
    const RadialGrid grid = grid_for_energy(energy, c_, opts_);
    return shoot_and_match(energy, kappa_, c_, grid).phase;
  }

 private:
  int kappa_;
  CouplingParams c_;
  SolverOptions opts_;
};

// Solves phase(E) = target on [lo, hi] where phase(lo) < target < phase(hi).
double solve_phase(const PhaseCounter& phase, double target, double lo, double hi, double f_lo,
                   double f_hi, const SolverOptions& opts) {
  f_lo -= target;
  f_hi -= target;
  // Bisection first: the phase is steep near eigenvalues and flat between them.
  int it = 0;
  while (hi - lo > 1e-4 && it < opts.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f = phase(mid) - target;
    if (f < 0.0) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
      f_hi = f;
    }
    ++it;
  }
  // Illinois-modified secant keeps the bracket.
  int side = 0;
  while (hi - lo > opts.energy_tolerance && it < opts.max_iterations) {
    double x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    const double f = phase(x) - target;
    if (f == 0.0) return x;
    if (f < 0.0) {
      lo = x;
      f_lo = f;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = f;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    if (std::abs(f) < 1e-14) return x;
    ++it;
  }
  if (it >= opts.max_iterations) {
    std::ostringstream os;
    os << "eigenvalue search did not converge near E=" << 0.5 * (lo + hi);
    throw SolverError(os.str());
  }
  return 0.5 * (lo + hi);
}

struct SearchSides {
  bool positive = true;
  bool negative = true;
};

std::vector<DiracRadialSolution> search(int kappa, const CouplingParams& c, EnergyWindow window,
                                        int n_max, const SolverOptions& opts, SearchSides sides) {
  if (!(window.lo > -1.0 && window.hi < 1.0)) {
    throw InvalidInput("energy window must lie inside (-1, 1)");
  }
  std::vector<DiracRadialSolution> found;
  if (!(window.hi > window.lo)) return found;
  channel_from_kappa(kappa, c);  // throws when supercritical

  const PhaseCounter phase(kappa, c, opts);
  const double split = std::clamp(0.0, window.lo, window.hi);
  const double p_lo = phase(window.lo);
  const double p_hi = phase(window.hi);
  const double p_split = phase(split);

  // Phase targets m*pi strictly inside (p_lo, p_hi).
  const long m_min = static_cast<long>(std::floor(p_lo / kPi)) + 1;
  const long m_max = static_cast<long>(std::ceil(p_hi / kPi)) - 1;
  const long m_mid = static_cast<long>(std::floor(p_split / kPi));

  if (sides.positive) {
    double lo = split, f_lo = p_split;
    for (long m = std::max(m_mid + 1, m_min); m <= m_max; ++m) {
      const double e = solve_phase(phase, m * kPi, lo, window.hi, f_lo, p_hi, opts);
      DiracRadialSolution s = assemble_solution(e, kappa, c, opts);
      lo = e;
      f_lo = m * kPi;
      if (s.branch() != Branch::positive) continue;
      if (s.radial_index() > n_max) break;
      found.push_back(std::move(s));
    }
  }
  if (sides.negative) {
    double hi = split, f_hi = p_split;
    for (long m = std::min(m_mid, m_max); m >= m_min; --m) {
      if (m * kPi == p_split) continue;
      const double e = solve_phase(phase, m * kPi, window.lo, hi, p_lo, f_hi, opts);
      DiracRadialSolution s = assemble_solution(e, kappa, c, opts);
      hi = e;
      f_hi = m * kPi;
      if (s.branch() != Branch::negative) continue;
      if (s.radial_index() > n_max) break;
      found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return found;
}

}  // namespace

std::vector<DiracRadialSolution> find_eigenvalues(int kappa, const CouplingParams& c,
                                                  EnergyWindow window, int n_max,
                                                  const SolverOptions& opts) {
  return search(kappa, c, window, n_max, opts, {true, true});
}

std::vector<DiracRadialSolution> find_labelled_states(int kappa, const CouplingParams& c,
                                                      EnergyWindow window, int n_max,
                                                      const SolverOptions& opts) {
  auto states = search(kappa, c, window, n_max, opts, {true, false});
  auto conj = search(-kappa, c, window, n_max, opts, {false, true});
  states.insert(states.end(), std::make_move_iterator(conj.begin()),
                std::make_move_iterator(conj.end()));
  std::sort(states.begin(), states.end(),
            [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return states;
}

}  // namespace dk
