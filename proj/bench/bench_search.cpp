// Serial reference against the OpenMP kernels for the two heavy workloads.

#include <benchmark/benchmark.h>

#include "pleth/classify.hpp"

namespace {

pleth::SearchBounds searchBounds(int maxSize) {
  pleth::SearchBounds b;
  b.maxSize = maxSize;
  b.maxEll = b.maxM = 2 * maxSize - 2;
  b.primeOnly = true;
  return b;
}

void searchRun(benchmark::State& state, pleth::Execution exec) {
  const pleth::SearchBounds b = searchBounds(static_cast<int>(state.range(0)));
  std::size_t found = 0;
  for (auto _ : state) {
    const auto records = pleth::searchEquivalences(b, exec);
    found = records.size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["equivalences"] = static_cast<double>(found);
}

void censusRun(benchmark::State& state, pleth::Execution exec) {
  std::uint64_t total = 0;
  for (auto _ : state) {
    total = pleth::exceptionalCensus(static_cast<int>(state.range(0)), 0, false, exec).total;
    benchmark::DoNotOptimize(total);
  }
  state.counters["exceptional"] = static_cast<double>(total);
}

void BM_SearchSerial(benchmark::State& s) { searchRun(s, pleth::Execution::Serial); }
void BM_SearchParallel(benchmark::State& s) { searchRun(s, pleth::Execution::Parallel); }
void BM_CensusSerial(benchmark::State& s) { censusRun(s, pleth::Execution::Serial); }
void BM_CensusParallel(benchmark::State& s) { censusRun(s, pleth::Execution::Parallel); }

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
