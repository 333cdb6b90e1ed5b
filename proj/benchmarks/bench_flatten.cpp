#include <benchmark/benchmark.h>

#include "pierirank/bounds.hpp"
#include "pierirank/flatten.hpp"

using namespace pierirank;

namespace {

void BM_build_flattening(benchmark::State& state) {
    PieriTensor t = build_pieri_tensor(Partition{6, 2}, Partition{6, 3}, UKind::V(), 3);
    for (auto _ : state) {
        SparseIntMatrix flat = build_flattening(t);
        benchmark::DoNotOptimize(flat.nnz());
    }
    state.SetLabel("3840x3840");
}

void BM_flattening_rank_mod_p(benchmark::State& state) {
    PieriTensor t = build_pieri_tensor(Partition{6, 2}, Partition{6, 3}, UKind::V(), 3);
    SparseIntMatrix flat = build_flattening(t);
    for (auto _ : state) {
        auto cert = rank_mod_p_random(flat, 7, 1);
        benchmark::DoNotOptimize(cert.rank);
    }
    state.SetLabel("3840x3840 single prime");
}

void BM_generic_rank_trial(benchmark::State& state) {
    PieriTensor t = build_pieri_tensor(Partition{6, 2}, Partition{6, 3}, UKind::V(), 3);
    uint64_t seed = 1;
    for (auto _ : state) {
        // one exact-rank sample of phi(u) at a random point
        auto probe = generic_rank_probe(t, 1, seed++);
        benchmark::DoNotOptimize(probe.max_rank);
    }
    state.SetLabel("phi(u) 64x60 exact");
}

}  // namespace

BENCHMARK(BM_build_flattening)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_flattening_rank_mod_p)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_generic_rank_trial)->Unit(benchmark::kMillisecond);
