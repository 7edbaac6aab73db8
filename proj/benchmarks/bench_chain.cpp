#include <benchmark/benchmark.h>

#include "degmix/decomposition.hpp"
#include "degmix/swap_chain.hpp"

namespace {

using namespace degmix;

void BM_ChainStepSimple(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ChainState chain(RealizationProblem::simple(DegreeSequence(std::vector<int>(n, 4))), 1);
  for (auto _ : state) chain.step();
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ChainStepSimple)->Arg(16)->Arg(128)->Arg(1024);

void BM_ChainStepDirected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ChainState chain(RealizationProblem::directed({std::vector<int>(n, 3), std::vector<int>(n, 3)}), 1);
  for (auto _ : state) chain.step();
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ChainStepDirected)->Arg(16)->Arg(128)->Arg(1024);

// Factorized versus whole-graph sampling of the same composed sequence.
void BM_SampleComposed(benchmark::State& state) {
  DegreeSequence d({2, 2, 2, 2, 2, 2});
  for (int i = 0; i < 4; ++i) d = compose(SplitSequence{{4, 4, 3}, {2, 2, 1}}, d);
  SampleOptions opt;
  opt.burn_in = 2000;
  opt.thin = 0;
  const bool factorize = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample(d, opt, factorize));
}
BENCHMARK(BM_SampleComposed)->Arg(0)->Arg(1);

}  // namespace
