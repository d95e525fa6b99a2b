// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "swapgraph/enumerator.hpp"
#include "swapgraph/oracle.hpp"
#include "swapgraph/sweep.hpp"

using namespace swapgraph;

namespace {

const ParikhVector& diameter_input(int which) {
  static const ParikhVector inputs[] = {ParikhVector({3, 3, 2}), ParikhVector({4, 3, 2}),
                                        ParikhVector({3, 3, 3})};
  return inputs[which];
}

void BM_DiameterSerial(benchmark::State& state) {
  const auto g = oracle::ConfigGraph::build(diameter_input(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::diameter_serial(g));
  state.counters["vertices"] = static_cast<double>(g.size());
}

void BM_DiameterParallel(benchmark::State& state) {
  const auto g = oracle::ConfigGraph::build(diameter_input(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::diameter(g));
  state.counters["vertices"] = static_cast<double>(g.size());
}

const std::vector<Word>& sweep_input() {
  static const auto words = all_words(ParikhVector({2, 2, 2, 1}));
  return words;
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep::hamiltonian_sweep_serial(sweep_input()));
  state.counters["starts"] = static_cast<double>(sweep_input().size());
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep::hamiltonian_sweep(sweep_input()));
  state.counters["starts"] = static_cast<double>(sweep_input().size());
}

void BM_EnumerateSwaps(benchmark::State& state) {
  const Word w = balanced_random_word(static_cast<std::size_t>(state.range(0)),
                                      static_cast<int>(state.range(1)), 3);
  const std::uint64_t steps = 100'000;
  for (auto _ : state) benchmark::DoNotOptimize(measure_delay(w, steps));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * steps));
}

}  // namespace

BENCHMARK(BM_DiameterSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSwaps)
    ->ArgsProduct({{64, 1024, 4096}, {2, 3, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
