#include <benchmark/benchmark.h>

#include "cbramsey/constructions.hpp"
#include "cbramsey/formula.hpp"
#include "cbramsey/generators.hpp"
#include "cbramsey/oracle.hpp"
#include "cbramsey/verify.hpp"

using namespace cbramsey;

static void BM_Predict(benchmark::State& state) {
    const auto k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(predict(2, k, 21, 12).g);
}
BENCHMARK(BM_Predict)->DenseRange(1, 6);

// Gamma_3 witness on 53 vertices; arg is k.
static void BM_MinUnion(benchmark::State& state) {
    const Witness w = lower_bound_witness(validate(2, 3, 22, 12));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(min_union_neighborhood(w.graph, k).value);
}
BENCHMARK(BM_MinUnion)->DenseRange(1, 4);

static void BM_MinUnionByComponents(benchmark::State& state) {
    const Witness w = lower_bound_witness(validate(2, 3, 22, 12));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(min_union_by_components(w.graph, k).value);
}
BENCHMARK(BM_MinUnionByComponents)->DenseRange(1, 4);

// Exhaustive cycle search on a block-clique graph, where the answer is "absent".
static void BM_CycleSearchBlockClique(benchmark::State& state) {
    Rng rng(1);
    const Graph g = random_block_clique(rng, static_cast<int>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(has_cycle_of_length(g, 10).found());
}
BENCHMARK(BM_CycleSearchBlockClique)->Arg(20)->Arg(40)->Arg(80);

static void BM_CycleSearchDense(benchmark::State& state) {
    Rng rng(2);
    const Graph g = random_two_connected(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(has_cycle_of_length(g, 6).found());
}
BENCHMARK(BM_CycleSearchDense)->Arg(10)->Arg(20)->Arg(30);

static void BM_CanonicalForm(benchmark::State& state) {
    Rng rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int order = static_cast<int>(state.range(0));
    GraphBuilder b(order);
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i)
            if (unit(rng) < 0.5) b.add_edge(i, j);
    const Graph g = std::move(b).build();
    for (auto _ : state) benchmark::DoNotOptimize(oracle::canonical_form(g).key);
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

static void BM_EnumerateClasses(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::nonisomorphic_graphs(order).size());
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
