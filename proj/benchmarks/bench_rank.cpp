#include <benchmark/benchmark.h>

#include <random>

#include "pierirank/rank.hpp"

using namespace pierirank;

namespace {

SparseIntMatrix random_matrix(int side, double density, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    std::uniform_int_distribution<int64_t> coeff(-1000, 1000);
    SparseIntMatrix m(side, side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            if (pick(rng) < density) m.add(i, j, Int(static_cast<long>(coeff(rng))));
    m.finalize();
    return m;
}

void BM_rank_mod_p(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    SparseIntMatrix m = random_matrix(side, 0.02, 11);
    for (auto _ : state) {
        auto cert = rank_mod_p_random(m, 1234, 1);
        benchmark::DoNotOptimize(cert.rank);
    }
    state.SetLabel(std::to_string(side) + "x" + std::to_string(side) + " @2%");
}

void BM_rank_exact_bareiss(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    SparseIntMatrix m = random_matrix(side, 0.5, 23);
    for (auto _ : state) {
        auto cert = rank_exact(m);
        benchmark::DoNotOptimize(cert.rank);
    }
}

}  // namespace

BENCHMARK(BM_rank_mod_p)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_exact_bareiss)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
