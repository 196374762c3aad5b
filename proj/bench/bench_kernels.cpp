// Serial reference vs OpenMP symmetrization over all fixed-point pairs.
// Arg(0) = restriction matrix size n.

#include <benchmark/benchmark.h>

#include "hilbstab/envelope.hpp"
#include "hilbstab/limits.hpp"

using namespace hilbstab;

namespace {

template <Backend B>
void elliptic_matrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratorContext ctx = make_context(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(restriction_matrix(ctx, n, B));
}

template <Backend B>
void kth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratorContext ctx = make_context(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kth_matrix(ctx, n, 0.3 / n, B));
}

template <Backend B>
void coh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CohContext ctx = make_coh_context(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coh_matrix(ctx, n, B));
}

}  // namespace

BENCHMARK(elliptic_matrix<Backend::Serial>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(elliptic_matrix<Backend::OpenMP>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(kth<Backend::Serial>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(kth<Backend::OpenMP>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(coh<Backend::Serial>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(coh<Backend::OpenMP>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
