#pragma once

// Numeric bound states of the radial Dirac equations for m* = 1 + beta_s/r,
// U = -alpha/r (natural units):
//
//   G' = -(kappa/r) G + (E + m*(r) - U(r)) F
//   F' =  (kappa/r) F - (E - m*(r) - U(r)) G
//
// Solutions are found by two-sided shooting on a logarithmic grid with a
// classical RK4 integrator. Eigenvalues are bracketed with the Pruefer phase
// mismatch, which is strictly increasing in E over the whole gap (-1, 1) and
// therefore counts states on both energy branches, then polished by
// bracketed secant iteration.

#include <cstddef>
#include <span>
#include <vector>

#include "dirac_kepler/analytic_spectrum.hpp"
#include "dirac_kepler/model_params.hpp"

namespace dk {

enum class GridSpacing { logarithmic, uniform };

class RadialGrid {
 public:
  RadialGrid(double r_min, double r_max, std::size_t points,
             GridSpacing spacing = GridSpacing::logarithmic);

  std::size_t size() const noexcept { return r_.size(); }
  double operator[](std::size_t i) const { return r_[i]; }
  std::span<const double> points() const noexcept { return r_; }
  double r_min() const noexcept { return r_.front(); }
  double r_max() const noexcept { return r_.back(); }
  GridSpacing spacing() const noexcept { return spacing_; }
  /// Step in ln r (logarithmic) or in r (uniform).
  double step() const noexcept { return step_; }
  /// Radius halfway (in the grid variable) between points i and i+1.
  double midpoint(std::size_t i) const;

 private:
  std::vector<double> r_;
  GridSpacing spacing_;
  double step_;
};

struct SolverOptions {
  std::size_t grid_points = 12000;
  double r_min = 1e-8;
  /// Tail length beyond the outer classical turning point, in units of 1/lambda.
  double decay_lengths = 45.0;
  double energy_tolerance = 1e-13;
  int max_iterations = 200;
};

struct EnergyWindow {
  double lo = -0.999;
  double hi = 0.999;
};

struct RadialDerivative {
  double dG = 0.0;
  double dF = 0.0;
};

/// Right-hand side of the radial equations. Throws InvalidInput for r <= 0.
RadialDerivative dirac_rhs(double r, double G, double F, double energy, int kappa,
                           const CouplingParams& c);

/// Leading Frobenius direction (G0, F0) of the regular solution r^gamma (G0, F0),
/// normalized with G0 >= 0.
std::pair<double, double> frobenius_seed(int kappa, const CouplingParams& c);

/// Log grid reaching lambda-scaled decay beyond the outer turning point for E.
RadialGrid grid_for_energy(double energy, const CouplingParams& c, const SolverOptions& opts);

/// Radius where |U| + |m* - 1| = 0.5, clamped into the grid interior.
double matching_radius(const CouplingParams& c, const RadialGrid& grid);

struct ShootResult {
  /// (G_out F_in - G_in F_out) / (|out| |in|) at the matching radius.
  double defect = 0.0;
  /// Sign changes of the outward G up to the matching radius.
  int nodes = 0;
  /// Unwrapped phase mismatch theta_in - theta_out; eigenvalues sit at multiples of pi.
  double phase = 0.0;
  double r_match = 0.0;
  std::size_t match_index = 0;
};

ShootResult shoot_and_match(double energy, int kappa, const CouplingParams& c,
                            const RadialGrid& grid);

struct DiracRadialSolution {
  std::vector<double> r;
  /// Large (upper) and small (lower) reduced radial functions.
  std::vector<double> G;
  std::vector<double> F;
  double energy = 0.0;
  int kappa = 0;
  int nodes_G = 0;
  int nodes_F = 0;
  double match_defect = 0.0;
  /// int G^2 dr after normalization (int (G^2 + F^2) dr = 1).
  double upper_weight = 0.0;
  /// Slope of ln|G| against ln r near the origin.
  double small_r_exponent = 0.0;

  /// Upper-dominant states belong to the positive branch.
  Branch branch() const noexcept { return upper_weight >= 0.5 ? Branch::positive : Branch::negative; }
  /// Channel label of the squared equation: kappa for the positive branch,
  /// -kappa for the negative one (charge conjugation swaps G and F).
  int label_kappa() const noexcept { return branch() == Branch::positive ? kappa : -kappa; }
  /// Dirac radial quantum number n': the node count of the small component
  /// (F on the positive branch, G on the negative one). The large component
  /// can carry one extra node near the origin when kappa > 0, so it is not used.
  int dirac_radial_number() const noexcept {
    return branch() == Branch::positive ? nodes_F : nodes_G;
  }
  /// Radial index n_r of the matching analytic line: n' for label kappa < 0
  /// and n' - 1 for label kappa > 0.
  int radial_index() const noexcept { return dirac_radial_number() - (label_kappa() > 0 ? 1 : 0); }
};

/// Builds the normalized eigenfunction at an (already converged) energy.
DiracRadialSolution assemble_solution(double energy, int kappa, const CouplingParams& c,
                                      const SolverOptions& opts = {});

/// All eigenvalues of Dirac channel kappa inside the window whose radial index
/// does not exceed n_max, sorted by energy.
std::vector<DiracRadialSolution> find_eigenvalues(int kappa, const CouplingParams& c,
                                                  EnergyWindow window = {}, int n_max = 5,
                                                  const SolverOptions& opts = {});

/// Eigenstates of the Dirac channels kappa and -kappa whose squared-equation
/// label is kappa: these pair one-to-one with analytic lines of that kappa.
std::vector<DiracRadialSolution> find_labelled_states(int kappa, const CouplingParams& c,
                                                      EnergyWindow window = {}, int n_max = 5,
                                                      const SolverOptions& opts = {});

}  // namespace dk
