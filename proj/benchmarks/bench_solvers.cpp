#include <benchmark/benchmark.h>

#include "carsync/constructions.hpp"
#include "carsync/landau.hpp"
#include "carsync/matrices.hpp"
#include "carsync/solvers.hpp"

using namespace carsync;

static void BM_LinearSync(benchmark::State& state) {
  const PartialDfa dfa = build_linear(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shortest_careful_sync(dfa));
}
BENCHMARK(BM_LinearSync)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_ConstSync(benchmark::State& state) {
  const PartialDfa dfa = build_const_alphabet(static_cast<unsigned>(state.range(0)),
                                              static_cast<unsigned>(state.range(1)),
                                              Variant::Repaired);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_careful_sync(dfa));
}
BENCHMARK(BM_ConstSync)
    ->Args({2, 3})
    ->Args({3, 3})
    ->Args({2, 4})
    ->Args({4, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_BinarySync(benchmark::State& state) {
  const PartialDfa dfa = build_binary(static_cast<unsigned>(state.range(0)),
                                      static_cast<unsigned>(state.range(1)),
                                      Variant::Repaired);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_careful_sync(dfa));
}
BENCHMARK(BM_BinarySync)->Args({2, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

static void BM_PanteleevDepth(benchmark::State& state) {
  const Construction inst = build_panteleev(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(depth_of(inst.dfa, *inst.target));
}
BENCHMARK(BM_PanteleevDepth)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_MatrixSemigroup(benchmark::State& state) {
  const Construction inst = build_panteleev(2);
  std::vector<ZeroOneMatrix> gens;
  for (LetterId a = 0; a < inst.dfa.num_letters(); ++a) {
    gens.push_back(to_matrix(inst.dfa.letter_transformation(a)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(matrix_semigroup_summary(gens));
}
BENCHMARK(BM_MatrixSemigroup)->Unit(benchmark::kMillisecond);

static void BM_Landau(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(landau(n));
}
BENCHMARK(BM_Landau)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
