#include "diagseq/census.hpp"
#include "diagseq/enumeration.hpp"

#include <benchmark/benchmark.h>

using namespace diagseq;

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
    const Int n = state.range(0);
    for (auto _ : state) {
        std::size_t count = 0;
        for (const Partition& p : partition_range(n)) {
            benchmark::DoNotOptimize(p);
            ++count;
        }
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);

void BM_ClassesOracle(benchmark::State& state) {
    const Int n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(classes_oracle(n));
}
BENCHMARK(BM_ClassesOracle)->Arg(15)->Arg(22);

void BM_EnumerateClass(benchmark::State& state) {
    const DiagonalSequence d = validate_diagonal({1, 2, 3, 4, 4, 4, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(d));
}
BENCHMARK(BM_EnumerateClass);

void BM_EnumerateVn(benchmark::State& state) {
    const VnMultiset m(0, std::vector<Int>(static_cast<std::size_t>(state.range(0)), 1));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_vn(m, [&](std::span<const Int>) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateVn)->Arg(8)->Arg(12);

void BM_CensusCheck(benchmark::State& state) {
    const Int n = state.range(0);
    CensusOptions options;
    options.check_oracle = true;
    for (auto _ : state) benchmark::DoNotOptimize(run_census(n, n, options));
}
BENCHMARK(BM_CensusCheck)->Arg(12)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
