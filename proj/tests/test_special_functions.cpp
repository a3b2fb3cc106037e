#include <cmath>
#include <vector>

#include "doctest.h"
#include "dirac_kepler/errors.hpp"
#include "dirac_kepler/special_functions.hpp"
#include "oracles.hpp"

using namespace dk;

TEST_CASE("ln_gamma at integers matches log-factorials") {
  for (int n = 1; n <= 60; ++n) {
    const double ref = oracle::ln_factorial_gamma(n);
    CHECK(std::abs(ln_gamma(n) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("ln_gamma at non-integers") {
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  for (double x : {1e-3, 0.1, 0.37, 1.5, 2.7, 13.25, 101.9}) {
    CHECK(ln_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  // recurrence Gamma(x+1) = x Gamma(x)
  for (double x : {0.2, 1.3, 7.7}) {
    CHECK(ln_gamma(x + 1) - ln_gamma(x) == doctest::Approx(std::log(x)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(ln_gamma(0.0), InvalidInput);
  CHECK_THROWS_AS(ln_gamma(-1.5), InvalidInput);
}

TEST_CASE("generalized Laguerre matches the explicit sum") {
  for (int n = 0; n <= 8; ++n) {
    for (double nu : {-0.5, 0.0, 0.2, 1.0, 2.2, 5.7}) {
      for (double x : {0.0, 0.3, 1.0, 4.5, 11.0}) {
        const auto [ref, mag] = oracle::laguerre_series(n, nu, x);
        const double got = generalized_laguerre({n, nu, x});
        CHECK(std::abs(got - ref) <= 1e-13 * std::max(1.0, mag));
      }
    }
  }
  CHECK_THROWS_AS(generalized_laguerre({2, -1.0, 0.5}), InvalidInput);
  CHECK_THROWS_AS(generalized_laguerre({-1, 0.5, 0.5}), InvalidInput);
}

TEST_CASE("Laguerre orthogonality for non-integer order") {
  // int x^nu e^-x L_m L_n dx = delta_mn Gamma(n+nu+1)/n!
  const double nu = 1.2;
  std::vector<double> x, f01, f11;
  for (int i = 0; i <= 40000; ++i) {
    const double xi = 60.0 * i / 40000.0;
    x.push_back(xi);
    const double w = std::pow(xi, nu) * std::exp(-xi);
    f01.push_back(w * generalized_laguerre({0, nu, xi}) * generalized_laguerre({1, nu, xi}));
    f11.push_back(w * generalized_laguerre({1, nu, xi}) * generalized_laguerre({1, nu, xi}));
  }
  CHECK(std::abs(integrate(f01, x)) < 1e-6);
  CHECK(integrate(f11, x) == doctest::Approx(std::tgamma(2 + nu)).epsilon(1e-6));
}

TEST_CASE("non-uniform Simpson integrates quadratics exactly") {
  for (int n : {6, 7}) {  // even and odd interval counts
    std::vector<double> r, f;
    for (int i = 0; i <= n; ++i) {
      const double ri = 0.1 + std::pow(double(i) / n, 1.7) * 2.0;
      r.push_back(ri);
      f.push_back(3 * ri * ri - 2 * ri + 1);
    }
    auto F = [](double t) { return t * t * t - t * t + t; };
    CHECK(integrate(f, r) == doctest::Approx(F(r.back()) - F(r.front())).epsilon(1e-13));
  }
}

TEST_CASE("radial norms") {
  std::vector<double> r, u;
  for (int i = 0; i <= 4000; ++i) {
    r.push_back(i * 0.01);
    u.push_back(2 * r.back() * std::exp(-r.back()));  // hydrogen 1s, u = r R
  }
  // uniform-grid Simpson error is h^4/180 times the third derivative at 0 (48 here)
  CHECK(std::abs(radial_norm(u, r) - 1.0) < 3e-9);
  std::vector<double> R(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) R[i] = 2 * std::exp(-r[i]);
  CHECK(std::abs(radial_norm(R, r, RadialMeasure::full) - 1.0) < 3e-9);
  CHECK(radial_norm(R, r, RadialMeasure::full, Quadrature::trapezoid) == doctest::Approx(1.0).epsilon(1e-4));

  std::vector<double> bad_r{0.0, 1.0, 1.0};
  std::vector<double> f3{1.0, 1.0, 1.0};
  CHECK_THROWS_AS(radial_norm(f3, bad_r), InvalidInput);
  std::vector<double> nan_f{1.0, NAN, 1.0}, ok_r{0.0, 1.0, 2.0};
  CHECK_THROWS_AS(radial_norm(nan_f, ok_r), InvalidInput);
  std::vector<double> short_r{0.0, 1.0};
  CHECK_THROWS_AS(radial_norm(f3, short_r), InvalidInput);
}
