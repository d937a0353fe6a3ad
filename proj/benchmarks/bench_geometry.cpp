#include "beamalign/geometry.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace beamalign;

namespace {

// Arc widths shrink with the count so unions keep many disjoint pieces
// instead of collapsing to the full circle.
std::vector<AngularInterval> random_arcs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(2, 64);
  std::vector<AngularInterval> arcs;
  arcs.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(arcs.size()) < count) {
    const int q = den(rng);
    std::uniform_int_distribution<int> num(1, q - 1);
    const Rat lo(num(rng), q);
    const Rat width(num(rng), q * 4 * count);
    arcs.push_back(make_arc(lo, lo + width));
  }
  return arcs;
}

}  // namespace

static void RegionIntersect(benchmark::State& state) {
  const auto arcs = random_arcs(static_cast<int>(2 * state.range(0)), 11);
  const std::vector<AngularInterval> first(arcs.begin(), arcs.begin() + state.range(0));
  const std::vector<AngularInterval> second(arcs.begin() + state.range(0), arcs.end());
  const AngularRegion a = AngularRegion::from_arcs(first);
  const AngularRegion b = AngularRegion::from_arcs(second);
  for (auto _ : state) {
    AngularRegion out = intersect(a, b);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(RegionIntersect)->Arg(2)->Arg(8)->Arg(32);

static void PartitionBeams(benchmark::State& state) {
  const auto arcs = random_arcs(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    ComponentBeamLoop loop = partition(arcs);
    benchmark::DoNotOptimize(loop);
  }
}
BENCHMARK(PartitionBeams)->Arg(4)->Arg(16)->Arg(64);
