#include <benchmark/benchmark.h>

#include "homspace/classical.hpp"
#include "homspace/maxdim.hpp"
#include "homspace/rootsys.hpp"
#include "homspace/verify.hpp"

namespace {

using namespace homspace;

void BM_BuildRootSystem(benchmark::State& state, Family family, int rank) {
  const SimpleType type = is_classical(family) ? SimpleType(family, rank) : SimpleType(family);
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(type));
}
BENCHMARK_CAPTURE(BM_BuildRootSystem, E8, Family::E8, 8);
BENCHMARK_CAPTURE(BM_BuildRootSystem, D12, Family::D, 12);

void BM_ProjectiveSweep(benchmark::State& state, Family family) {
  const SimpleType type(family);
  for (auto _ : state) benchmark::DoNotOptimize(verify_projective_simple(type));
}
BENCHMARK_CAPTURE(BM_ProjectiveSweep, E8, Family::E8);
BENCHMARK_CAPTURE(BM_ProjectiveSweep, F4, Family::F4);

void BM_SemisimpleTable(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(semisimple_max_dim_table(rank));
}
BENCHMARK(BM_SemisimpleTable)->Arg(12)->Arg(30);

void BM_MaxCentralizer(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = 1; k <= rank; ++k) benchmark::DoNotOptimize(max_centralizer_dim(Family::D, rank, k));
  }
}
BENCHMARK(BM_MaxCentralizer)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ProductSweep(benchmark::State& state) {
  const auto product = SemisimpleProduct::parse("A2,B3,G2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_semisimple_product(product, SweepMode::projective));
  }
}
BENCHMARK(BM_ProductSweep);

}  // namespace

BENCHMARK_MAIN();
