#include <benchmark/benchmark.h>

#include "strdom/families.hpp"
#include "strdom/graph.hpp"
#include "strdom/reduction.hpp"
#include "strdom/solver.hpp"
#include "strdom/trees.hpp"

using namespace strdom;

namespace {

void BM_SolveStrdfPath(benchmark::State& state) {
    Graph g = generate(FamilySpec::path(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(solve_strdf_exact(g).value);
}
BENCHMARK(BM_SolveStrdfPath)->Arg(8)->Arg(12)->Arg(16);

void BM_SolveStrdfSpiderChain(benchmark::State& state) {
    Graph g = generate(FamilySpec::gnqjl(static_cast<int>(state.range(0)), 2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(solve_strdf_exact(g).value);
}
BENCHMARK(BM_SolveStrdfSpiderChain)->Arg(0)->Arg(1);

void BM_SolveRomanCycle(benchmark::State& state) {
    Graph g = generate(FamilySpec::cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(solve_roman_exact(g).value);
}
BENCHMARK(BM_SolveRomanCycle)->Arg(12)->Arg(16);

void BM_ReductionSolve(benchmark::State& state) {
    CnfFormula f;
    f.variable_count = 3;
    f.clauses = {{{0, false}, {1, false}, {2, true}},
                 {{0, true}, {2, false}},
                 {{0, false}, {1, true}, {2, false}}};
    auto rg = build_reduction_graph(f);
    for (auto _ : state) benchmark::DoNotOptimize(solve_strdf_exact(rg.graph).value);
}
BENCHMARK(BM_ReductionSolve);

void BM_ConstructTree(benchmark::State& state) {
    auto trees = sample_random_trees(static_cast<int>(state.range(0)), 64, 99);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_tree_strdf(trees[i]).labeling.weight());
        i = (i + 1) % trees.size();
    }
}
BENCHMARK(BM_ConstructTree)->Arg(12)->Arg(24)->Arg(48);

void BM_EnumerateTrees(benchmark::State& state) {
    for (auto _ : state) {
        long long total = 0;
        enumerate_labeled_trees(static_cast<int>(state.range(0)),
                                [&](const Graph& t) { total += t.size(); });
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_EnumerateTrees)->Arg(6)->Arg(7);

} // namespace

BENCHMARK_MAIN();
