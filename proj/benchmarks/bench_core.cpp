#include <benchmark/benchmark.h>

#include "dirac_kepler/analytic_spectrum.hpp"
#include "dirac_kepler/angular_algebra.hpp"
#include "dirac_kepler/radial_solver.hpp"
#include "dirac_kepler/special_functions.hpp"

using namespace dk;

static void BM_LnGamma(benchmark::State& st) {
  double x = 0.37;
  for (auto _ : st) {
    benchmark::DoNotOptimize(ln_gamma(x));
    x = x < 50 ? x + 0.731 : 0.37;
  }
}
BENCHMARK(BM_LnGamma);

static void BM_Laguerre(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  double x = 0.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(generalized_laguerre({n, 1.2, x}));
    x = x < 20 ? x + 0.1 : 0.0;
  }
}
BENCHMARK(BM_Laguerre)->Arg(2)->Arg(10)->Arg(40);

static void BM_LambdaBlock(benchmark::State& st) {
  const auto c = CouplingParams::make(0.2, -0.5);
  for (auto _ : st) benchmark::DoNotOptimize(lambda_block(static_cast<int>(st.range(0)), c));
}
BENCHMARK(BM_LambdaBlock)->Arg(-1)->Arg(3);

static void BM_AnalyticRadial(benchmark::State& st) {
  const auto c = CouplingParams::make(0.2, -0.5);
  const auto line = energy_branches(2, channel_from_kappa(-1, c), c).first;
  std::vector<double> r(1000);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = 0.05 * (i + 1);
  for (auto _ : st) benchmark::DoNotOptimize(analytic_radial_R(line, r));
}
BENCHMARK(BM_AnalyticRadial);

static void BM_ShootAndMatch(benchmark::State& st) {
  const auto c = CouplingParams::make(0.2, -0.5);
  const RadialGrid g = grid_for_energy(0.8, c, SolverOptions{});
  for (auto _ : st) benchmark::DoNotOptimize(shoot_and_match(0.8, -1, c, g));
}
BENCHMARK(BM_ShootAndMatch)->Unit(benchmark::kMicrosecond);

static void BM_FindEigenvalues(benchmark::State& st) {
  const auto c = CouplingParams::make(0.2, -0.5);
  const int n_max = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(find_labelled_states(-1, c, {}, n_max));
}
BENCHMARK(BM_FindEigenvalues)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
