#include <benchmark/benchmark.h>

#include "chow/terracini.hpp"

namespace {

using namespace chow;

// the heaviest shapes of the bounded-s verification
void BM_BuildStatementMatrix(benchmark::State& state) {
    const PrimeField f(kDefaultPrime);
    const int s = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const int d = static_cast<int>(state.range(2));
    const Statement st{n, d, s, 0, 0, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_statement_matrix(st, 7, f));
    }
}
BENCHMARK(BM_BuildStatementMatrix)
    ->Args({10, 11, 3})
    ->Args({35, 23, 3})
    ->Args({35, 3, 22})
    ->Unit(benchmark::kMillisecond);

void BM_SecantCase(benchmark::State& state) {
    const PrimeField f(kDefaultPrime);
    const int s = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const int d = static_cast<int>(state.range(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(secant_dimension(n, d, s, 1, 7, f));
    }
}
BENCHMARK(BM_SecantCase)
    ->Args({10, 11, 3})
    ->Args({20, 15, 3})
    ->Args({35, 23, 3})
    ->Unit(benchmark::kMillisecond);

}  // namespace
