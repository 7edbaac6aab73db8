#include <benchmark/benchmark.h>

#include "degmix/enumeration.hpp"
#include "degmix/realization_space.hpp"

namespace {

using namespace degmix;

void BM_Census(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_bipartite_graphical(n, jobs));
}
BENCHMARK(BM_Census)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_RealizationGraph(benchmark::State& state) {
  const auto p = RealizationProblem::bipartite({{2, 2, 2, 2, 2}, {2, 2, 2, 2, 2}});
  EnumerationLimits limits;
  limits.max_chords = 64;
  for (auto _ : state) benchmark::DoNotOptimize(build_realization_graph(p, limits));
}
BENCHMARK(BM_RealizationGraph)->Unit(benchmark::kMillisecond);

void BM_SpectralReport(benchmark::State& state) {
  const auto rg = build_realization_graph(RealizationProblem::simple(DegreeSequence({2, 2, 2, 2, 1, 1})));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_report(rg));
}
BENCHMARK(BM_SpectralReport);

}  // namespace
