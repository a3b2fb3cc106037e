#include <cmath>

#include "doctest.h"
#include "dirac_kepler/errors.hpp"
#include "dirac_kepler/radial_solver.hpp"
#include "dirac_kepler/special_functions.hpp"
#include "oracles.hpp"

using namespace dk;

TEST_CASE("radial grids") {
  const RadialGrid g(1e-6, 100.0, 101);
  CHECK(g.size() == 101);
  CHECK(g.r_min() == doctest::Approx(1e-6));
  CHECK(g.r_max() == doctest::Approx(100.0));
  CHECK(g[50] == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(g.midpoint(0) == doctest::Approx(std::sqrt(g[0] * g[1])));
  const RadialGrid u(1.0, 2.0, 11, GridSpacing::uniform);
  CHECK(u.step() == doctest::Approx(0.1));
  CHECK(u.midpoint(0) == doctest::Approx(1.05));
  CHECK_THROWS_AS(RadialGrid(0.0, 1.0, 10), InvalidInput);
  CHECK_THROWS_AS(RadialGrid(1.0, 0.5, 10), InvalidInput);
  CHECK_THROWS_AS(RadialGrid(1e-3, 1.0, 2), InvalidInput);
}

TEST_CASE("right-hand side and Frobenius seed") {
  const auto c = CouplingParams::make(0.2, -0.5);
  CHECK_THROWS_AS(dirac_rhs(0.0, 1, 1, 0.5, -1, c), InvalidInput);
  const auto d = dirac_rhs(2.0, 1.0, 0.5, 0.3, -1, c);
  CHECK(d.dG == doctest::Approx(0.5 + (0.3 + 1 + (0.2 - 0.5) / 2.0) * 0.5));
  CHECK(d.dF == doctest::Approx(-0.5 * 0.5 - (0.3 - 1 + (0.2 + 0.5) / 2.0)));
  // r^gamma (G0, F0) cancels the 1/r terms
  for (int k : {-2, -1, 1, 2}) {
    const auto [g0, f0] = frobenius_seed(k, c);
    const double gamma = channel_from_kappa(k, c).gamma;
    CHECK(g0 >= 0.0);
    CHECK(std::abs((gamma + k) * g0 - (c.alpha + c.beta_s) * f0) < 1e-14);
    CHECK(std::abs((gamma - k) * f0 + (c.alpha - c.beta_s) * g0) < 1e-14);
  }
}

TEST_CASE("flagship eigenvalues from the numeric solver") {
  const auto c = CouplingParams::make(0.2, -0.5);
  const auto neg_k = find_eigenvalues(-1, c, {}, 0);
  REQUIRE(!neg_k.empty());
  bool found = false;
  for (const auto& s : neg_k) found = found || std::abs(s.energy - 0.8) < 1e-10;
  CHECK(found);
  const auto labelled = find_labelled_states(-1, c, {}, 0);
  REQUIRE(labelled.size() == 2);
  CHECK(labelled[0].energy == doctest::Approx(-0.96).epsilon(1e-11));
  CHECK(labelled[0].branch() == Branch::negative);
  CHECK(labelled[0].kappa == 1);
  CHECK(labelled[0].label_kappa() == -1);
  CHECK(labelled[0].radial_index() == 0);
  CHECK(labelled[1].energy == doctest::Approx(0.8).epsilon(1e-11));
  CHECK(labelled[1].branch() == Branch::positive);
  CHECK(labelled[1].radial_index() == 0);
}

TEST_CASE("phase mismatch grows monotonically through the gap") {
  const auto c = CouplingParams::make(0.2, -0.5);
  for (int k : {-1, 1}) {
    double last = -1e300;
    for (double e = -0.99; e <= 0.99; e += 0.02) {
      const RadialGrid g = grid_for_energy(e, c, SolverOptions{});
      const double ph = shoot_and_match(e, k, c, g).phase;
      CHECK(ph > last);
      last = ph;
    }
  }
}

TEST_CASE("eigenfunctions: normalization, exponent and nodes") {
  const auto c = CouplingParams::make(0.2, -0.5);
  for (int k : {-2, -1, 1}) {
    for (const auto& s : find_labelled_states(k, c, {}, 2)) {
      std::vector<double> rho(s.G.size());
      for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = s.G[i] * s.G[i] + s.F[i] * s.F[i];
      CHECK(integrate(rho, s.r) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(s.G.front() > 0.0);
      const double gamma = channel_from_kappa(s.kappa, c).gamma;
      CHECK(std::abs(s.small_r_exponent - gamma) < 0.02 * gamma);
      CHECK(std::abs(s.match_defect) < 1e-8);
      CHECK(s.radial_index() >= 0);
      CHECK(s.radial_index() <= 2);
      CHECK(s.label_kappa() == k);
      // small component nodes from an independent count
      CHECK(oracle::sign_changes(s.branch() == Branch::positive ? s.F : s.G, 1e-9) == s.dirac_radial_number());
    }
  }
}

TEST_CASE("numeric spectrum at zero scalar coupling is the Sommerfeld spectrum") {
  const auto c = CouplingParams::make(0.3, 0.0);
  for (int k : {-1, 1, -2}) {
    for (const auto& s : find_eigenvalues(k, c, {}, 2)) {
      CHECK(s.branch() == Branch::positive);
      CHECK(s.energy == doctest::Approx(oracle::sommerfeld(s.dirac_radial_number(), std::abs(k), 0.3)).epsilon(1e-10));
    }
  }
}

TEST_CASE("window and input validation") {
  const auto c = CouplingParams::make(0.2, -0.5);
  CHECK_THROWS_AS(find_eigenvalues(-1, c, {-1.2, 0.5}), InvalidInput);
  CHECK_THROWS_AS(find_eigenvalues(-1, CouplingParams::make(1.5, 0.0)), SupercriticalError);
  CHECK(find_eigenvalues(-1, c, {0.81, 0.9}, 0).empty());
  CHECK_THROWS_AS(grid_for_energy(1.0, c, SolverOptions{}), InvalidInput);
}

TEST_CASE("repulsive scalar equal to the vector coupling binds nothing") {
  const auto c = CouplingParams::make(0.3, 0.3);
  CHECK(find_labelled_states(-1, c, {}, 2).empty());
}
