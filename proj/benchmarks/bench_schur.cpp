#include <benchmark/benchmark.h>

#include "pierirank/pieri_tensor.hpp"
#include "pierirank/schur_module.hpp"

using namespace pierirank;

namespace {

void BM_build_schur_module(benchmark::State& state) {
    const std::vector<std::pair<Partition, int>> shapes = {
        {Partition{3, 1}, 4},
        {Partition{4, 2, 1}, 4},
        {Partition{5, 2, 1}, 4},
        {Partition{3, 2, 2, 1}, 5},
    };
    const auto& [shape, n] = shapes[static_cast<size_t>(state.range(0))];
    for (auto _ : state) {
        SchurModule m(shape, n);
        benchmark::DoNotOptimize(m.dim());
    }
    state.SetLabel(shape.to_string() + " n=" + std::to_string(n));
}

void BM_straighten(benchmark::State& state) {
    // worst-case-ish input: reversed column fillings of a medium shape
    SchurModule m(Partition{4, 3, 2}, 4);
    ColumnTableau ct = {{2, 3, 4}, {1, 3, 4}, {1, 2}, {1}};
    for (auto _ : state) {
        SchurModule fresh(Partition{4, 3, 2}, 4);  // cold memo
        benchmark::DoNotOptimize(fresh.straighten(ct));
    }
}

void BM_solve_intertwiner(benchmark::State& state) {
    struct Case {
        Partition lambda, mu;
        UKind u;
        int n;
    };
    const std::vector<Case> cases = {
        {Partition{6, 2}, Partition{6, 3}, UKind::V(), 3},
        {Partition{3, 1}, Partition{3, 3}, UKind::Sym(2), 4},
        {Partition{4, 2, 1}, Partition{4, 4, 1}, UKind::Sym(2), 4},
    };
    const Case& c = cases[static_cast<size_t>(state.range(0))];
    for (auto _ : state) {
        PieriTensor t = build_pieri_tensor(c.lambda, c.mu, c.u, c.n);
        benchmark::DoNotOptimize(t.f1.nnz());
    }
    state.SetLabel(c.lambda.to_string() + "->" + c.mu.to_string());
}

}  // namespace

BENCHMARK(BM_build_schur_module)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_straighten)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_solve_intertwiner)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
