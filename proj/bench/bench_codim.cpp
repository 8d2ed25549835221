#include "gradalg/builders.hpp"
#include "gradalg/identities.hpp"

#include <benchmark/benchmark.h>

using namespace gradalg;

namespace {

void run(benchmark::State& state, const char* name, bool parallel) {
  const GradedAlgebra a = builtin(name);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t value = 0;
  for (auto _ : state) {
    value = parallel ? graded_codimension(a, n).value : graded_codimension_serial(a, n).value;
    benchmark::DoNotOptimize(value);
  }
  state.counters["c_n"] = static_cast<double>(value);
}

void BM_m2_z2_serial(benchmark::State& s) { run(s, "m2_z2", false); }
void BM_m2_z2_parallel(benchmark::State& s) { run(s, "m2_z2", true); }
void BM_free_trunc_serial(benchmark::State& s) { run(s, "free_trunc_2_3", false); }
void BM_free_trunc_parallel(benchmark::State& s) { run(s, "free_trunc_2_3", true); }
void BM_gl2_z2_serial(benchmark::State& s) { run(s, "gl2_z2", false); }
void BM_gl2_z2_parallel(benchmark::State& s) { run(s, "gl2_z2", true); }

} // namespace

BENCHMARK(BM_m2_z2_serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_m2_z2_parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_free_trunc_serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_free_trunc_parallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_gl2_z2_serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gl2_z2_parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
