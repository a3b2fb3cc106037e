#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dirac_kepler/errors.hpp"
#include "dirac_kepler_cli/cli.hpp"
#include "dirac_kepler_cli/commands.hpp"

using namespace dk;
using namespace dk::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dk_cli_test_" + name);
}

bool same_cells(const Table& a, const Table& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i] != b.rows[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("spectrum flagship rows") {
  RunConfig cfg;
  cfg.alpha = 0.2;
  cfg.beta_s = -0.5;
  cfg.kappas = {-1};
  cfg.nr_max = 0;
  const auto res = run_spectrum(cfg);
  CHECK(res.exit_code == 0);
  REQUIRE(res.table.rows.size() == 2);
  CHECK(std::abs(std::get<double>(res.table.rows[0][3]) - 0.8) < 1e-15);
  CHECK(std::abs(std::get<double>(res.table.rows[1][3]) + 0.96) < 1e-15);
}

TEST_CASE("spectrum supercritical channel") {
  auto r = invoke({"spectrum", "--alpha", "2.0", "--kappa", "-1"});
  CHECK(r.code == kExitFailure);
  CHECK(r.err.find("supercritical") != std::string::npos);
  // one good channel is enough for success
  r = invoke({"spectrum", "--alpha", "1.5", "--kappa", "-1,-2", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("supercritical") != std::string::npos);
}

TEST_CASE("coincident couplings give integer l* rows") {
  RunConfig cfg;
  cfg.alpha = 0.5;
  cfg.beta_s = 0.5;
  cfg.kappas = {-1};
  const auto res = run_spectrum(cfg);
  for (const auto& row : res.table.rows) CHECK(std::get<double>(row[7]) == 0.0);
}

TEST_CASE("solve header and flagship accuracy") {
  auto r = invoke({"solve", "--alpha", "0.2", "--beta-s", "-0.5", "--kappa", "-1", "--nr-max", "0", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("kappa,n_r,E_numeric,E_analytic,abs_err,q_eff,gamma,l_star,N\n", 0) == 0);
  const Table t = parse_csv(r.out, solve_columns());
  REQUIRE(t.rows.size() == 2);
  for (const auto& row : t.rows) CHECK(std::get<double>(row[4]) <= 1e-8);
}

TEST_CASE("solve at zero scalar coupling tracks the Sommerfeld formula") {
  RunConfig cfg;
  cfg.alpha = 0.3;
  cfg.kappas = {-1, 1};
  cfg.nr_max = 1;
  const auto res = run_solve(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.table.rows.size() == 4);
  for (const auto& row : res.table.rows) {
    const int k = int(std::get<std::int64_t>(row[0]));
    const int n = int(std::get<std::int64_t>(row[1]));
    CHECK(std::get<double>(row[2]) == doctest::Approx(sommerfeld_reference(n, k, 0.3)).epsilon(1e-9));
  }
}

TEST_CASE("empty window gives an empty table") {
  auto r = invoke({"solve", "--alpha", "0.2", "--beta-s", "-0.5", "--window", "0.5,0.5", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "kappa,n_r,E_numeric,E_analytic,abs_err,q_eff,gamma,l_star,N\n");
}

TEST_CASE("CSV and JSON round-trip bit for bit") {
  RunConfig cfg;
  cfg.alpha = 0.2;
  cfg.beta_s = -0.5;
  cfg.kappas = {-2, -1, 1};
  cfg.nr_max = 2;
  for (const auto& res : {run_spectrum(cfg), run_solve(cfg)}) {
    const auto cols = res.table.columns;
    CHECK(same_cells(parse_csv(to_csv(res.table), cols), res.table));
    const auto j = nlohmann::json::parse(to_json(res.table).dump());
    CHECK(same_cells(from_json(j, cols), res.table));
  }
  RunConfig sup = cfg;
  sup.alpha = 1.5;
  const auto err_rows = run_spectrum(sup);
  CHECK(same_cells(parse_csv(to_csv(err_rows.table), spectrum_columns()), err_rows.table));
  CHECK(same_cells(from_json(to_json(err_rows.table), spectrum_columns()), err_rows.table));
}

TEST_CASE("CSV quoting") {
  Table t;
  t.columns = {{"name", ColumnKind::text}, {"x", ColumnKind::real}};
  t.rows.push_back({std::string("a, \"b\""), 0.1});
  t.rows.push_back({std::monostate{}, 1e-300});
  CHECK(same_cells(parse_csv(to_csv(t), t.columns), t));
  CHECK_THROWS(parse_csv("wrong,x\n", t.columns));
  CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("config file, environment and flag precedence") {
  const auto path = temp_file("cfg.ini");
  {
    std::ofstream f(path);
    f << "alpha = 0.2\nbeta-s = -0.5\nkappa = -1\nnr-max = 0\nformat = csv\n";
  }
  auto r = invoke({"spectrum", "--config", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.79999999999999982") != std::string::npos);

  r = invoke({"spectrum", "--config", path.string(), "--alpha", "0.3"});
  CHECK(r.out.find("0.79999999999999982") == std::string::npos);

  setenv(kConfigEnv, path.string().c_str(), 1);
  r = invoke({"spectrum"});
  unsetenv(kConfigEnv);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("-0.95999999999999996") != std::string::npos);

  r = invoke({"spectrum", "--config", (path.string() + ".missing")});
  CHECK(r.code == kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--alpha", "x"}).code == kExitUsage);
  CHECK(invoke({"spectrum"}).code == kExitUsage);  // no couplings
  CHECK(invoke({"spectrum", "--alpha", "0.2", "--e2", "0.2", "--a", "0.1"}).code == kExitUsage);
  CHECK(invoke({"solve", "--alpha", "0.2", "--window", "-1.5,0.5"}).code == kExitUsage);
  CHECK(invoke({"verify-claims", "--claim", "bogus"}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--alpha", "0.2", "--units", "ev"}).code == kExitUsage);
  CHECK(invoke({"spectrum", "--alpha", "0.2", "--format", "xml"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("physical inputs and eV output") {
  auto a = invoke({"spectrum", "--e2", "0.2", "--a", "-0.5", "--kappa", "-1", "--nr-max", "0", "--format", "csv"});
  auto b = invoke({"spectrum", "--alpha", "0.2", "--beta-s", "-0.5", "--kappa", "-1", "--nr-max", "0", "--format", "csv"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto ev = invoke({"spectrum", "--alpha", "0.2", "--beta-s", "-0.5", "--kappa", "-1", "--nr-max", "0", "--format",
                 "csv", "--units", "ev", "--mc2", "1000"});
  const Table t = parse_csv(ev.out, spectrum_columns());
  CHECK(std::get<double>(t.rows[0][3]) == doctest::Approx(800.0).epsilon(1e-14));
}

TEST_CASE("verify-claims writes both reports and is deterministic") {
  const auto prefix = temp_file("report");
  const std::vector<std::string> args{"verify-claims", "--alpha", "0.2", "--beta-s", "-0.5", "--kappa", "-1",
                                      "--nr-max", "0", "--claim", "two-branches,lambda-eigenvalue",
                                      "--out", prefix.string()};
  auto r = invoke(args);
  CHECK(r.code == kExitOk);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string json1 = slurp(prefix.string() + ".json");
  const std::string text1 = slurp(prefix.string() + ".txt");
  CHECK(text1.find("[supported] two-branches") != std::string::npos);
  const auto j = nlohmann::json::parse(json1);
  CHECK(j["claims"].size() == 2);
  CHECK(j["all_supported"] == true);
  r = invoke(args);
  CHECK(slurp(prefix.string() + ".json") == json1);
  std::filesystem::remove(prefix.string() + ".json");
  std::filesystem::remove(prefix.string() + ".txt");
}

TEST_CASE("verify-claims on coincident couplings records boundary verdicts") {
  auto r = invoke({"verify-claims", "--alpha", "0.3", "--beta-s", "0.3", "--claim",
                "offdiagonal-barrier,lstar-noninteger"});
  CHECK(r.code == kExitFailure);
  CHECK(r.out.find("[boundary] offdiagonal-barrier") != std::string::npos);
  CHECK(r.out.find("[boundary] lstar-noninteger") != std::string::npos);
}

TEST_CASE("scan") {
  RunConfig cfg;
  cfg.alpha = 0.2;
  cfg.kappas = {-1};
  cfg.nr_max = 0;
  cfg.scan_from = -0.5;
  cfg.scan_to = 0.1;
  cfg.scan_steps = 3;
  const auto res = run_scan(cfg);
  CHECK(res.exit_code == 0);
  // beta_s = -0.5: both branches; -0.2 = -alpha: E- sits at -1; 0.1: positive only
  CHECK(res.table.rows.size() == 4);
  for (const auto& row : res.table.rows) CHECK(std::get<double>(row[7]) <= 1e-8);
  RunConfig bad = cfg;
  bad.alpha.reset();
  CHECK_THROWS_AS(run_scan(bad), InvalidInput);
}
