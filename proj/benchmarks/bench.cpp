#include <mng/convexity.hpp>
#include <mng/decision.hpp>
#include <mng/families.hpp>
#include <mng/io.hpp>
#include <mng/search.hpp>
#include <mng/twotree.hpp>

#include <benchmark/benchmark.h>

using namespace mng;

namespace {

void BM_simple_clique_recognition(benchmark::State& state) {
    MixedGraph g = cayley_oriented_clique(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_simple_clique(g));
}
BENCHMARK(BM_simple_clique_recognition)->Arg(7)->Arg(11);

void BM_two_colour_decision(benchmark::State& state) {
    MixedGraph g = random_mixed(1, 1, static_cast<int>(state.range(0)), 0.3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(decide_chi_s_two(g));
}
BENCHMARK(BM_two_colour_decision)->Arg(30)->Arg(100);

void BM_complete_graph_chi_s(benchmark::State& state) {
    MixedGraph g = cayley_2ec_clique(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(complete_chi_s(g));
}
BENCHMARK(BM_complete_graph_chi_s)->Arg(8)->Arg(16);

void BM_brute_force_chi_s(benchmark::State& state) {
    MixedGraph g = random_mixed(1, 1, static_cast<int>(state.range(0)), 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(brute_chi_s(g));
}
BENCHMARK(BM_brute_force_chi_s)->Arg(6)->Arg(9);

void BM_pair_hull(benchmark::State& state) {
    MixedGraph g = random_mixed(1, 1, static_cast<int>(state.range(0)), 0.3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull(g, {0, 1}));
}
BENCHMARK(BM_pair_hull)->Arg(20)->Arg(60);

void BM_oriented_2tree_colouring(benchmark::State& state) {
    MixedGraph g = random_2tree(static_cast<int>(state.range(0)),
                                TwoTreeKind::oriented, 5);
    for (auto _ : state) benchmark::DoNotOptimize(colour_oriented_2tree(g));
}
BENCHMARK(BM_oriented_2tree_colouring)->Arg(50)->Arg(200);

void BM_2ec_2tree_colouring(benchmark::State& state) {
    MixedGraph g = random_2tree(static_cast<int>(state.range(0)),
                                TwoTreeKind::two_edge_coloured, 6);
    for (auto _ : state) benchmark::DoNotOptimize(colour_2ec_2tree(g));
}
BENCHMARK(BM_2ec_2tree_colouring)->Arg(50)->Arg(200);

void BM_round_trip(benchmark::State& state) {
    std::string text = serialize(
        random_mixed(2, 2, static_cast<int>(state.range(0)), 0.4, 13));
    for (auto _ : state) benchmark::DoNotOptimize(serialize(parse(text)));
}
BENCHMARK(BM_round_trip)->Arg(40)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
