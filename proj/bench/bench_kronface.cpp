// Serial reference vs memoized serial vs OpenMP-parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "kronface/kronecker.hpp"
#include "kronface/order_matrix.hpp"

using namespace kronface;

namespace {

std::vector<KroneckerQuery> random_queries(int n, int count) {
  std::mt19937 rng(20240517);
  const auto ps = partitions_of(n, n);
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  std::vector<KroneckerQuery> qs;
  for (int i = 0; i < count; ++i) qs.push_back({ps[pick(rng)], ps[pick(rng)], ps[pick(rng)]});
  return qs;
}

void BM_KroneckerReference(benchmark::State& state) {
  const auto qs = random_queries(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) {
    for (const auto& q : qs) benchmark::DoNotOptimize(kronecker_reference(q.alpha, q.beta, q.gamma));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
}

// Cold caches each iteration so the memo is rebuilt and not just read back.
void BM_KroneckerSerial(benchmark::State& state) {
  const auto qs = random_queries(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) {
    CharacterTable table;
    KroneckerOracle oracle(table);
    benchmark::DoNotOptimize(oracle.batch_serial(qs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
}

void BM_KroneckerParallel(benchmark::State& state) {
  const auto qs = random_queries(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) {
    CharacterTable table;
    KroneckerOracle oracle(table);
    benchmark::DoNotOptimize(oracle.batch(qs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const int n1 = static_cast<int>(state.range(0));
  const int n2 = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_order_matrices_serial(n1, n2));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int n1 = static_cast<int>(state.range(0));
  const int n2 = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_order_matrices(n1, n2));
}

}  // namespace

BENCHMARK(BM_KroneckerReference)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KroneckerSerial)->Arg(6)->Arg(7)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KroneckerParallel)->Arg(6)->Arg(7)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateParallel)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
