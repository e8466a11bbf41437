#include "diagseq/counting.hpp"
#include "diagseq/extremal.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace diagseq;

namespace {

// wide, repetitive profile: many strata, sizeable binomials
DiagonalSequence wide_sequence(Int q) {
    SProfile sp;
    sp.q = q;
    sp.s.assign(static_cast<std::size_t>(q), 3);
    return from_s_profile(sp);
}

void BM_DiagonalSequence(benchmark::State& state) {
    const Int q = state.range(0);
    SProfile sp;
    sp.q = q;
    sp.s.assign(static_cast<std::size_t>(q), 2);
    const Partition p = alpha_under(sp);
    for (auto _ : state) benchmark::DoNotOptimize(diagonal_sequence(p));
}
BENCHMARK(BM_DiagonalSequence)->Arg(8)->Arg(32)->Arg(128);

void BM_CountClass(benchmark::State& state) {
    const DiagonalSequence d = wide_sequence(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_class(d));
}
BENCHMARK(BM_CountClass)->Arg(8)->Arg(32)->Arg(128);

void BM_CountStrataSweep(benchmark::State& state) {
    const DiagonalSequence d = wide_sequence(state.range(0));
    for (auto _ : state) {
        BigCount total = 0;
        for (Int k = d.q(); k <= d.length(); ++k) total += count_stratum(d, k);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_CountStrataSweep)->Arg(8)->Arg(32);

void BM_KvnCount(benchmark::State& state) {
    const VnMultiset m(0, std::vector<Int>(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(kvn_count(m, 3));
}
BENCHMARK(BM_KvnCount)->Arg(8)->Arg(64);

void BM_PartitionCount(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(partition_count(state.range(0)));
}
BENCHMARK(BM_PartitionCount)->Arg(100)->Arg(400);

void BM_ClassOfSize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(class_of_size(state.range(0)));
}
BENCHMARK(BM_ClassOfSize)->Arg(36)->Arg(720);

}  // namespace

BENCHMARK_MAIN();
