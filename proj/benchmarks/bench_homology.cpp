#include <benchmark/benchmark.h>

#include <random>

#include "polystrata/hyperbolic.hpp"
#include "polystrata/permutahedron.hpp"
#include "polystrata/strata.hpp"

using namespace polystrata;

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> value(-3, 3);
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 4 == 0) m.add(i, j, value(rng));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(16)->Arg(64)->Arg(128);

void BM_OrderComplexHomology(benchmark::State& state) {
  const NumberPartition lambda = NumberPartition::hook(static_cast<int>(state.range(0)), 2);
  const auto poset = c_lambda_poset(lambda).poset;
  for (auto _ : state) benchmark::DoNotOptimize(simplicial_homology(order_complex(poset)));
  state.counters["elements"] = static_cast<double>(poset.size());
}
BENCHMARK(BM_OrderComplexHomology)->DenseRange(4, 7);

void BM_HypBackend(benchmark::State& state) {
  const NumberPartition lambda({1, 1, 1, 2, 2});
  const auto backend = static_cast<HypBackend>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyp_homology(lambda, backend));
  state.SetLabel(to_string(backend));
}
BENCHMARK(BM_HypBackend)->DenseRange(0, 2);

void BM_PolHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pol_homology(NumberPartition({2}), n));
}
BENCHMARK(BM_PolHomology)->DenseRange(4, 12, 4);

void BM_YoungQuotient(benchmark::State& state) {
  const NumberPartition lambda({3, 5, 6, 7});
  for (auto _ : state) benchmark::DoNotOptimize(verify_young_quotient(lambda));
}
BENCHMARK(BM_YoungQuotient);

}  // namespace

BENCHMARK_MAIN();
