// Benchmarks comparing the parallel kernels against their serial references,
// plus the two comparison routines.
#include <benchmark/benchmark.h>

#include "dicelab/die.hpp"
#include "dicelab/enumeration.hpp"
#include "dicelab/experiment.hpp"
#include "dicelab/onestep.hpp"
#include "dicelab/rng.hpp"
#include "dicelab/tournament.hpp"

namespace {

using namespace dicelab;

Die random_die(int n, CounterRng& rng) {
  std::vector<Face> f(static_cast<std::size_t>(n));
  for (auto& v : f) v = static_cast<Face>(uniform_below(rng, static_cast<std::uint64_t>(n)) + 1);
  return Die(std::move(f));
}

void BM_compare_merge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(1);
  const Die a = random_die(n, rng), b = random_die(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_compare_merge)->Arg(10)->Arg(100)->Arg(1000);

void BM_compare_naive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(1);
  const Die a = random_die(n, rng), b = random_die(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compare_naive(a, b));
}
BENCHMARK(BM_compare_naive)->Arg(10)->Arg(100)->Arg(1000);

void BM_onestep_relations_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(OneStepUniverse(n, false));
}
BENCHMARK(BM_onestep_relations_serial)->Arg(20)->Arg(40);

void BM_onestep_relations_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(OneStepUniverse(n, true));
}
BENCHMARK(BM_onestep_relations_parallel)->Arg(20)->Arg(40);

void BM_triangles_direct(benchmark::State& state) {
  const OneStepUniverse u(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(u.graph().count_strict_triangles_direct());
}
BENCHMARK(BM_triangles_direct)->Arg(12)->Arg(20);

void BM_triangles_bitrows(benchmark::State& state) {
  const OneStepUniverse u(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(u.graph().count_strict_triangles());
}
BENCHMARK(BM_triangles_bitrows)->Arg(12)->Arg(20)->Arg(40);

void BM_mc_table_serial(benchmark::State& state) {
  TableSpec spec;
  spec.n_list = {10};
  spec.trials = 2000;
  spec.methods = {SampleMethod::ExactDp};
  shared_count_table(10);
  for (auto _ : state) benchmark::DoNotOptimize(run_intransitive_table(spec, false));
}
BENCHMARK(BM_mc_table_serial);

void BM_mc_table_parallel(benchmark::State& state) {
  TableSpec spec;
  spec.n_list = {10};
  spec.trials = 2000;
  spec.methods = {SampleMethod::ExactDp};
  shared_count_table(10);
  for (auto _ : state) benchmark::DoNotOptimize(run_intransitive_table(spec, true));
}
BENCHMARK(BM_mc_table_parallel);

void BM_orientation_census_serial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orientation_census(k, false));
}
BENCHMARK(BM_orientation_census_serial)->Arg(5)->Arg(6);

void BM_orientation_census_parallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orientation_census(k, true));
}
BENCHMARK(BM_orientation_census_parallel)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
