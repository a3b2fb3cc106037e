#include <cmath>

#include "doctest.h"
#include "dirac_kepler/claims.hpp"
#include "dirac_kepler/errors.hpp"

using namespace dk;

namespace {

ClaimsConfig single_point(double a, double b) {
  ClaimsConfig cfg;
  cfg.grid.alphas = {a};
  cfg.grid.beta_s = {b};
  return cfg;
}

}  // namespace

TEST_CASE("claim ids") {
  CHECK(claim_ids().size() == 5);
  CHECK(is_claim_id("two-branches"));
  CHECK_FALSE(is_claim_id("two_branches"));
}

TEST_CASE("off-diagonal barrier claim") {
  ClaimsConfig cfg;
  const auto rep = claim_offdiagonal(cfg);
  CHECK(rep.verdict == Verdict::supported);
  CHECK(rep.rows.size() == 18);
  const auto on_set = claim_offdiagonal(single_point(0.3, 0.3));
  CHECK(on_set.verdict == Verdict::boundary);
  REQUIRE(on_set.rows.size() == 1);
  CHECK(on_set.rows[0][3] == 0.0);  // upper-right block
  CHECK(on_set.rows[0][4] > 0.0);
  const auto free = claim_offdiagonal(single_point(0.0, 0.0));
  CHECK(free.verdict == Verdict::boundary);
  CHECK_FALSE(free.notes.empty());
}

TEST_CASE("non-integer l* claim") {
  ClaimsConfig cfg;
  CHECK(claim_lstar_noninteger(cfg).verdict == Verdict::supported);
  auto pt = single_point(0.2, -0.5);
  pt.kappas = {-1};
  const auto rep = claim_lstar_noninteger(pt);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0][4] == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(rep.rows[0][5] == 0.0);
  const auto coincide = claim_lstar_noninteger(single_point(0.4, -0.4));
  CHECK(coincide.verdict == Verdict::boundary);
  for (const auto& row : coincide.rows) {
    CHECK(row[5] == 1.0);
    CHECK(row[6] == 1.0);
  }
  auto sup = single_point(1.5, 0.0);
  sup.kappas = {-1, -2};
  const auto r = claim_lstar_noninteger(sup);
  CHECK(r.rows.size() == 1);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("two-branch claim") {
  auto cfg = single_point(0.2, -0.5);
  cfg.kappas = {-1};
  cfg.nr_max = 0;
  const auto rep = claim_two_branches(cfg);
  CHECK(rep.verdict == Verdict::supported);
  REQUIRE(rep.rows.size() == 1);
  CHECK(std::abs(rep.rows[0][5] - 0.8) < 1e-8);
  CHECK(std::abs(rep.rows[0][7] + 0.96) < 1e-8);
  // vector coupling alone: no negative branch
  auto vec = single_point(0.5, 0.0);
  vec.kappas = {-1};
  CHECK(claim_two_branches(vec).verdict == Verdict::refuted);
}

TEST_CASE("binding-condition claim") {
  auto cfg = single_point(0.5, 0.4);
  cfg.kappas = {-1};
  const auto rep = claim_binding_condition(cfg);
  CHECK(rep.verdict == Verdict::supported);
  bool contradicted = false;
  for (const auto& row : rep.rows) {
    CHECK(row[8] == row[6]);  // solver agrees with the corrected condition
    contradicted = contradicted || row[8] != row[7];
  }
  CHECK(contradicted);
  // attractive scalar: both conditions hold for every positive-branch root
  auto att = single_point(0.2, -0.5);
  att.kappas = {-1};
  const auto r2 = claim_binding_condition(att);
  for (const auto& row : r2.rows) CHECK(row[8] == row[6]);
}

TEST_CASE("eigenvalue claim over the default grid") {
  ClaimsConfig cfg;
  const auto rep = claim_lambda_eigencheck(cfg);
  CHECK(rep.verdict == Verdict::supported);
  for (const auto& row : rep.rows) CHECK(row[7] <= 1e-12);
  auto one = single_point(0.2, -0.5);
  one.kappas = {-1};
  const auto r = claim_lambda_eigencheck(one);
  CHECK(r.rows[0][3] == doctest::Approx(2.31).epsilon(1e-13));
  CHECK(r.rows[0][4] == doctest::Approx(0.11).epsilon(1e-13));
}

TEST_CASE("full report") {
  ClaimsConfig cfg;
  cfg.reproduce_flaw = true;
  const FullReport rep = full_report(cfg);
  CHECK(rep.claims.size() == 5);
  CHECK(rep.all_supported());
  CHECK(rep.sweep.passed(1e-8));
  CHECK(rep.sweep.rows.size() <= 150);
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].find("2x2") != std::string::npos);
  CHECK(rep.framing.find("comment") != std::string::npos);

  ClaimsConfig sel;
  sel.selected = {"lambda-eigenvalue"};
  sel.grid.alphas = {0.2};
  CHECK(full_report(sel).claims.size() == 1);

  ClaimsConfig empty;
  empty.grid.alphas.clear();
  CHECK_THROWS_AS(full_report(empty), InvalidInput);
  ClaimsConfig bogus;
  bogus.selected = {"nope"};
  CHECK_THROWS_AS(full_report(bogus), InvalidInput);
}
