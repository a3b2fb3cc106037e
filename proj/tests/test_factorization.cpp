#include <cmath>

#include "doctest.h"
#include "dirac_kepler/factorization.hpp"

using namespace dk;

TEST_CASE("radial barrier coupling from the projection") {
  for (int k : {-2, -1, 1, 2}) {
    const auto c = CouplingParams::make(0.2, -0.5);
    const Eigen::Matrix2d m = radial_barrier_coupling(k, c);
    CHECK(std::abs(m(0, 0)) < 1e-13);
    CHECK(std::abs(m(1, 1)) < 1e-13);
    CHECK(m(0, 1) == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(m(1, 0) == doctest::Approx(0.3).epsilon(1e-13));
    // together with kappa(kappa+-1) its spectrum gives gamma(gamma+-1)
    Eigen::Matrix2d full;
    full << k * (k + 1) + 0.25 - 0.04, m(0, 1), m(1, 0), k * (k - 1) + 0.25 - 0.04;
    const double g = std::sqrt(k * k + 0.25 - 0.04);
    Eigen::EigenSolver<Eigen::Matrix2d> es(full);
    std::vector<double> ev{es.eigenvalues()[0].real(), es.eigenvalues()[1].real()};
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(g * (g - 1)).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(g * (g + 1)).epsilon(1e-12));
  }
}

TEST_CASE("squared operator identity converges at second order") {
  for (int k : {-2, -1, 1, 2}) {
    for (auto c : {CouplingParams::make(0.2, -0.5), CouplingParams::make(0.5, 0.4), CouplingParams::make(0.1, 0.0)}) {
      const auto rep = verify_factorization(k, c);
      REQUIRE(rep.levels.size() == 2);
      CHECK_FALSE(rep.inconsistency.has_value());
      CHECK(rep.levels[0].relative_residual < 1e-6);
      CHECK(rep.observed_order == doctest::Approx(2.0).epsilon(0.05));
    }
  }
}

TEST_CASE("free field residual is at rounding level") {
  const auto rep = verify_factorization(-1, CouplingParams::make(0.0, 0.0));
  CHECK(rep.levels[0].relative_residual < 1e-12);
}

TEST_CASE("residual is reproducible for a fixed seed") {
  const auto c = CouplingParams::make(0.2, -0.5);
  FactorizationOptions o;
  CHECK(factorization_residual(-1, c, o) == factorization_residual(-1, c, o));
  FactorizationOptions o2 = o;
  o2.seed = 99;
  CHECK(factorization_residual(-1, c, o2) != factorization_residual(-1, c, o));
}

TEST_CASE("2x2 sigma convention is flagged") {
  FactorizationOptions o;
  o.convention = SigmaConvention::pauli_2x2;
  const auto rep = verify_factorization(-1, CouplingParams::make(0.2, -0.5), o);
  REQUIRE(rep.inconsistency.has_value());
  CHECK(rep.levels.empty());
}
