#include <benchmark/benchmark.h>

#include "chow/dense_matrix.hpp"
#include "chow/rng.hpp"

namespace {

using namespace chow;

DenseMatrix random_square(std::size_t n, const PrimeField& f) {
    DenseMatrix m(n, n);
    SplitMix64 rng(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.next_mod(f);
    return m;
}

void BM_RankSquare(benchmark::State& state) {
    const PrimeField f(kDefaultPrime);
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix m = random_square(n, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m, f));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankSquare)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)->Arg(2048)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

void BM_BarrettReduce(benchmark::State& state) {
    const PrimeField f(kDefaultPrime);
    SplitMix64 rng(9);
    std::uint64_t x = rng.next();
    for (auto _ : state) {
        x = x * 6364136223846793005ull + 1442695040888963407ull;
        benchmark::DoNotOptimize(f.reduce(x));
    }
}
BENCHMARK(BM_BarrettReduce);

}  // namespace
