#include <benchmark/benchmark.h>

#include "sg/constructions.hpp"
#include "sg/enumeration.hpp"
#include "sg/fishburn.hpp"
#include "sg/search.hpp"
#include "sg/weightedness.hpp"

namespace {

void BM_CheckWeightedUN(benchmark::State& state) {
  const auto g = sg::un_security_council();
  for (auto _ : state) benchmark::DoNotOptimize(sg::check_weighted(g));
}
BENCHMARK(BM_CheckWeightedUN)->Unit(benchmark::kMillisecond);

void BM_CheckRoughFano(benchmark::State& state) {
  const auto g = sg::fano();
  for (auto _ : state) benchmark::DoNotOptimize(sg::check_rough(g));
}
BENCHMARK(BM_CheckRoughFano)->Unit(benchmark::kMicrosecond);

void BM_ComputeG(benchmark::State& state) {
  const auto g = state.range(0) == 0 ? sg::fano() : sg::gn2_game(static_cast<int>(state.range(0)));
  sg::SearchLimits limits;
  limits.lp_shortcut = false;
  for (auto _ : state) benchmark::DoNotOptimize(sg::compute_g(g, limits));
}
BENCHMARK(BM_ComputeG)->Arg(0)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ComputeFDoubling(benchmark::State& state) {
  auto sys = sg::fishburn_system(std::vector<std::int64_t>{1, 2, 5, 6, 10}, 4);
  const auto d = sg::doubling_game(*sys, {112, false});
  for (auto _ : state) benchmark::DoNotOptimize(sg::compute_f(d.game));
}
BENCHMARK(BM_ComputeFDoubling)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sg::count_games(n, {}));
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ClassifyFour(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sg::enumerate_and_classify(4, {}));
}
BENCHMARK(BM_ClassifyFour)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
