#include <benchmark/benchmark.h>

#include "stripwalk/oracle.hpp"

using namespace stripwalk;

namespace {

void BM_Serial(benchmark::State& state) {
  const WalkModel b = WalkModel::basketball();
  const auto w = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::count_serial(b, w, 0, 0, 200, CountMode::all));
  }
}

void BM_OpenMP(benchmark::State& state) {
  const WalkModel b = WalkModel::basketball();
  const auto w = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::count_openmp(b, w, 0, 0, 200, CountMode::all));
  }
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(16)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)->Arg(16)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
