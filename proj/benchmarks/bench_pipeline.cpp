#include "beamalign/beamset.hpp"
#include "beamalign/codes.hpp"
#include "beamalign/experiment.hpp"
#include "beamalign/strategies.hpp"

#include <benchmark/benchmark.h>

using namespace beamalign;

static void UncertaintyMapBisection(benchmark::State& state) {
  const ScanningBeamSet set = bisection_beamset(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    UncertaintyMap map = uncertainty_map(set);
    benchmark::DoNotOptimize(map);
  }
}
BENCHMARK(UncertaintyMapBisection)->Arg(3)->Arg(5)->Arg(7);

static void ExpectedWidthExhaustive(benchmark::State& state) {
  const ScanningBeamSet set = exhaustive_beamset(static_cast<int>(state.range(0)), 4);
  const Prior prior = Prior::uniform();
  for (auto _ : state) {
    Rat width = expected_beamwidth(set, prior);
    benchmark::DoNotOptimize(width);
  }
}
BENCHMARK(ExpectedWidthExhaustive)->Arg(7)->Arg(15)->Arg(31);

static void CardinalityOracle(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CardinalitySearch search = max_cardinality_bruteforce(b, 3, 3 * (1 << b));
    benchmark::DoNotOptimize(search);
  }
}
BENCHMARK(CardinalityOracle)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void DurationSweep(benchmark::State& state) {
  ExperimentConfig config;
  config.d_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::string csv = duration_sweep_csv(config);
    benchmark::DoNotOptimize(csv);
  }
}
BENCHMARK(DurationSweep)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
