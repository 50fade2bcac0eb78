// Microbenchmarks for the hot paths: subgroup-count tables, the two
// census routes, basis enumeration, and the exhaustive oracle. Run with
// --benchmark_filter=... to focus on one family.

#include <cstdint>

#include <benchmark/benchmark.h>

#include "homcount/counting.hpp"
#include "homcount/lattice.hpp"
#include "homcount/numtheory.hpp"
#include "homcount/oracle.hpp"
#include "homcount/series.hpp"

namespace {

void BM_LambdaTable(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto n_max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homcount::lattice::lambda_table(rank, n_max));
  }
}
BENCHMARK(BM_LambdaTable)
    ->Args({2, 10'000})
    ->Args({5, 10'000})
    ->Args({8, 10'000})
    ->Unit(benchmark::kMillisecond);

void BM_CountTuplesEuler(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto n_max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homcount::count_tuples(rank, n_max));
  }
}
BENCHMARK(BM_CountTuplesEuler)
    ->Args({2, 500})
    ->Args({4, 500})
    ->Args({6, 1'000})
    ->Unit(benchmark::kMillisecond);

void BM_CountTuplesExpFormula(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto n_max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        homcount::count_tuples_via_exp_formula(rank, n_max));
  }
}
BENCHMARK(BM_CountTuplesExpFormula)
    ->Args({2, 200})
    ->Args({5, 500})
    ->Unit(benchmark::kMillisecond);

void BM_OrbitCensusFormula(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto n_max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homcount::count_tuples_by_orbits(rank, n_max));
  }
}
BENCHMARK(BM_OrbitCensusFormula)
    ->Args({3, 100})
    ->Args({3, 200})
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateHnf(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto index = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homcount::lattice::count_hnf(rank, index));
  }
}
BENCHMARK(BM_EnumerateHnf)
    ->Args({3, 64})
    ->Args({4, 48})
    ->Args({4, 96})
    ->Unit(benchmark::kMillisecond);

void BM_OracleCensus(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto degree = static_cast<std::uint32_t>(state.range(1));
  homcount::oracle::CensusOptions options;
  options.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        homcount::oracle::oracle_census(rank, degree, options));
  }
}
BENCHMARK(BM_OracleCensus)
    ->Args({2, 5, 1})
    ->Args({2, 6, 1})
    ->Args({2, 6, 4})
    ->Args({3, 4, 1})
    ->Unit(benchmark::kMillisecond);

void BM_PartitionNumbers(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homcount::numtheory::partition_numbers(n_max));
  }
}
BENCHMARK(BM_PartitionNumbers)->Arg(2'000)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
    return 1;
  }
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
