#include <benchmark/benchmark.h>

#include "richflow/building_phi.hpp"
#include "richflow/catalog.hpp"
#include "richflow/connectivity.hpp"
#include "richflow/oracle.hpp"
#include "richflow/rich_flow.hpp"
#include "richflow/seymour.hpp"

using namespace richflow;

static void BM_SynthPetersen(benchmark::State& state) {
  const Multigraph g = catalog::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_rich_flow(g).max_abs);
}
BENCHMARK(BM_SynthPetersen);

static void BM_SynthK4Chain(benchmark::State& state) {
  const Multigraph g = catalog::k4_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_rich_flow(g).max_abs);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SynthK4Chain)->RangeMultiplier(2)->Range(2, 32)->Complexity();

static void BM_BuildingPhiWagner(benchmark::State& state) {
  const Multigraph g = catalog::wagner();
  for (auto _ : state) benchmark::DoNotOptimize(building_phi(g, 0, false, {1, 1}, 3).k);
}
BENCHMARK(BM_BuildingPhiWagner);

static void BM_ExactDT(benchmark::State& state) {
  const Multigraph g = catalog::multi_triangle(2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rich_flow_number(g).value);
}
BENCHMARK(BM_ExactDT);

static void BM_ExactPetersen(benchmark::State& state) {
  const Multigraph g = catalog::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(exact_rich_flow_number(g).value);
}
BENCHMARK(BM_ExactPetersen)->Unit(benchmark::kMillisecond);

static void BM_ChromaticIndexPetersen(benchmark::State& state) {
  const Multigraph g = catalog::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_index(g).value);
}
BENCHMARK(BM_ChromaticIndexPetersen);

static void BM_Z6K4(benchmark::State& state) {
  const Multigraph g = catalog::complete(4);
  for (auto _ : state) benchmark::DoNotOptimize(nowhere_zero_z6(g).group());
}
BENCHMARK(BM_Z6K4);

static void BM_TwoCutsK4Chain(benchmark::State& state) {
  const Multigraph g = catalog::k4_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_two_edge_cuts(g).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoCutsK4Chain)->RangeMultiplier(2)->Range(2, 64)->Complexity();

BENCHMARK_MAIN();
