#include <benchmark/benchmark.h>

#include <vector>

#include "prcurve/asymptotics.hpp"
#include "prcurve/empirical.hpp"
#include "prcurve/population.hpp"
#include "prcurve/presets.hpp"
#include "prcurve/random_stream.hpp"
#include "prcurve/simulation.hpp"
#include "prcurve/special_functions.hpp"

using namespace prcurve;

static void BM_NormalQuantile(benchmark::State& state) {
  double p = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_quantile(p));
    p += 1e-7;
    if (p > 0.999) p = 0.001;
  }
}
BENCHMARK(BM_NormalQuantile);

static void BM_BetaQuantile(benchmark::State& state) {
  double p = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(incomplete_beta_inv(5.0, 2.0, p));
    p += 1e-7;
    if (p > 0.999) p = 0.001;
  }
}
BENCHMARK(BM_BetaQuantile);

static void BM_EvalPrGrid(benchmark::State& state) {
  const ClassScoreModel model =
      make_case_model(state.range(0) == 0 ? "case-a" : "case-c", 0.2);
  const std::vector<double> xs = default_grid(256);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : xs) acc += eval_pr(model, x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EvalPrGrid)->Arg(0)->Arg(1);

static void BM_PrHatEval(benchmark::State& state) {
  const ClassScoreModel model = make_case_model("case-a", 0.2);
  RandomStream rng(1, 0);
  EmpiricalSample s;
  s.s_plus = draw_samples(model.plus(), state.range(0) / 5, rng);
  s.s_minus = draw_samples(model.minus(), state.range(0), rng);
  const PRHatCurve curve(s);
  double x = 0.101;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve.value(x));
    x += 1e-5;
    if (x > 0.99) x = 0.101;
  }
}
BENCHMARK(BM_PrHatEval)->Arg(1000)->Arg(100000);

static void BM_SimulationReplicates(benchmark::State& state) {
  SimulationConfig cfg{make_case_model("case-a", 1.0 / 11.0)};
  cfg.n = 1000;
  cfg.replicates = static_cast<int>(state.range(0));
  cfg.grid = {0.1, 0.3, 0.5, 0.7, 0.9};
  cfg.master_seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(cfg, 1));
  }
}
BENCHMARK(BM_SimulationReplicates)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_SigmaSquaredGrid(benchmark::State& state) {
  const ClassScoreModel model = make_case_model("case-a", 0.2);
  const std::vector<double> xs = default_grid(256);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : xs) acc += sigma_squared(model, x).sigma2;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_SigmaSquaredGrid);

BENCHMARK_MAIN();
