#include <benchmark/benchmark.h>

#include "fuzzdyn/checks.hpp"
#include "fuzzdyn/dynamics.hpp"
#include "fuzzdyn/metrics.hpp"
#include "fuzzdyn/random.hpp"

using namespace fuzzdyn;

namespace {

const GroundSpace& interval() {
  static const GroundSpace space = GroundSpace::unit_interval();
  return space;
}

void BM_hausdorff(benchmark::State& state) {
  Rng rng(1);
  Compactum a = random_compactum(rng, interval(), state.range(0), 64);
  Compactum b = random_compactum(rng, interval(), state.range(0), 64);
  for (auto _ : state) {
    Rat d = hausdorff_distance(a, b);
    benchmark::DoNotOptimize(d);
  }
}

void BM_level_metric(benchmark::State& state) {
  Rng rng(2);
  StepFuzzySet u = random_step_fuzzy(rng, interval(), state.range(0), 6, 16);
  StepFuzzySet v = random_step_fuzzy(rng, interval(), state.range(0), 6, 16);
  for (auto _ : state) {
    Rat d = d_infty(u, v);
    benchmark::DoNotOptimize(d);
  }
}

void BM_warped_metric(benchmark::State& state) {
  Rng rng(3);
  StepFuzzySet u = random_step_fuzzy(rng, interval(), state.range(0), 6, 16);
  StepFuzzySet v = random_step_fuzzy(rng, interval(), state.range(0), 6, 16);
  for (auto _ : state) {
    Rat d = d_skorokhod(u, v);
    benchmark::DoNotOptimize(d);
  }
}

// brute force reference the solver is checked against; here to show the gap
void BM_warped_grid_oracle(benchmark::State& state) {
  Rng rng(3);
  StepFuzzySet u = random_step_fuzzy(rng, interval(), state.range(0), 6, 16);
  StepFuzzySet v = random_step_fuzzy(rng, interval(), state.range(0), 6, 16);
  for (auto _ : state) {
    Rat d = skorokhod_grid_oracle(u, v, 32);
    benchmark::DoNotOptimize(d);
  }
}

void BM_witness(benchmark::State& state) {
  Rng rng(5);
  StepFuzzySet u = random_step_fuzzy(rng, interval(), 3, 6, 16);
  StepFuzzySet v = random_step_fuzzy(rng, interval(), 3, 6, 16);
  const Rat eps = rat(1, state.range(0));
  for (auto _ : state) {
    auto cert = fuzzy_witness(DynMap::tent(), u, v, eps);
    benchmark::DoNotOptimize(cert.n);
  }
}

void BM_cover_time(benchmark::State& state) {
  const DynMap tent = DynMap::tent();
  const Rat lo = rat(1, 3);
  const Rat hi = lo + rat(1, state.range(0));
  for (auto _ : state) {
    long n = interval_cover_time(tent, lo, hi);
    benchmark::DoNotOptimize(n);
  }
}

BENCHMARK(BM_hausdorff)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_level_metric)->Arg(2)->Arg(4);
BENCHMARK(BM_warped_metric)->Arg(2)->Arg(4);
BENCHMARK(BM_warped_grid_oracle)->Arg(2)->Arg(3);
BENCHMARK(BM_witness)->Arg(16)->Arg(256);
BENCHMARK(BM_cover_time)->Arg(64)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
