#include <benchmark/benchmark.h>

#include "pca/config_space.hpp"
#include "pca/flux.hpp"
#include "pca/markov.hpp"
#include "pca/simulator.hpp"

namespace {

using namespace pca;

void BM_Step(benchmark::State& state, Model model) {
  const auto L = static_cast<std::size_t>(state.range(0));
  CounterRng rng(1);
  RingConfig x = model == Model::Epbca2 ? random_species(L, L / 4, L / 4, rng) : random_binary(L, L / 2, rng);
  const ModelParams p{model, 0.8, 0.3};
  for (auto _ : state) {
    x = step(x, p, rng).next;
    benchmark::DoNotOptimize(x);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(L));
}
BENCHMARK_CAPTURE(BM_Step, pbca, Model::Pbca)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_Step, epbca1, Model::Epbca1)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_Step, epbca2, Model::Epbca2)->Arg(30)->Arg(1000);

void BM_EnumerateBinary(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_binary(L, L / 2).size());
}
BENCHMARK(BM_EnumerateBinary)->Arg(12)->Arg(16);

void BM_EnumerateSpecies(benchmark::State& state) {
  const auto x0 = RingConfig::parse("AABAAB0000");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_species_reachable(x0).size());
}
BENCHMARK(BM_EnumerateSpecies);

void BM_Stationary(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  auto space = std::make_shared<const ConfigSpace>(enumerate_binary(L, L / 2));
  const auto mat = build_matrix(space, ModelParams{Model::Epbca1, 0.6, 0.3});
  for (auto _ : state) benchmark::DoNotOptimize(stationary(mat).residual);
  state.counters["states"] = static_cast<double>(space->size());
}
BENCHMARK(BM_Stationary)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FluxClosedForm(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    double sum = 0.0;
    for (std::size_t m = 1; m < L; ++m) sum += flux_epbca1(L, m, 0.8, 0.1).flux;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_FluxClosedForm)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FluxEpbca2Grouped(benchmark::State& state) {
  for (auto _ : state) {
    double sum = 0.0;
    for (std::size_t a = 0; a <= 15; ++a) sum += flux_epbca2(30, a, 15, 0.3, 0.6).flux;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_FluxEpbca2Grouped)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
