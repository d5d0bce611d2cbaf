#include <benchmark/benchmark.h>

#include "edgereg/covers.hpp"
#include "edgereg/graph_io.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/regularity.hpp"

using namespace edgereg;

namespace {

graph dense_random(int n, unsigned seed) {
    graph g(n);
    std::uint64_t state = seed;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next() % 100 < 45) g.add_edge_checked(u, v);
    return g;
}

void bm_reduced_betti_cycle(benchmark::State& state) {
    simplicial_complex ind = independence_complex(families::cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(ind, field_spec(2)).betti.size());
}
BENCHMARK(bm_reduced_betti_cycle)->Arg(12)->Arg(15)->Arg(18);

void bm_reduced_betti_matching_gf3(benchmark::State& state) {
    simplicial_complex ind = independence_complex(families::matching(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(ind, field_spec(3)).betti.size());
}
BENCHMARK(bm_reduced_betti_matching_gf3)->Arg(5)->Arg(6)->Arg(7);

void bm_regularity_petersen(benchmark::State& state) {
    graph pet = families::petersen();
    regularity_options opts;
    opts.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(complex_regularity(pet, field_spec(2), opts).value);
}
BENCHMARK(bm_regularity_petersen)->Arg(1)->Arg(4);

void bm_regularity_random_n8(benchmark::State& state) {
    graph g = dense_random(8, 7);
    for (auto _ : state) benchmark::DoNotOptimize(complex_regularity(g, field_spec(2)).value);
}
BENCHMARK(bm_regularity_random_n8);

void bm_cochord_exact_cycle(benchmark::State& state) {
    graph c = families::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cochord_exact(c, std::chrono::milliseconds{0}).value);
}
BENCHMARK(bm_cochord_exact_cycle)->Arg(8)->Arg(10)->Arg(12);

void bm_cochord_exact_random_n7(benchmark::State& state) {
    graph g = dense_random(7, 21);
    for (auto _ : state)
        benchmark::DoNotOptimize(cochord_exact(g, std::chrono::milliseconds{0}).value);
}
BENCHMARK(bm_cochord_exact_random_n7);

void bm_split_cover_cycle(benchmark::State& state) {
    graph c = families::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(split_cover(c).partition.cliques.size());
}
BENCHMARK(bm_split_cover_cycle)->Arg(9)->Arg(12);

void bm_max_clique_random_n30(benchmark::State& state) {
    graph g = dense_random(30, 5);
    for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).value);
}
BENCHMARK(bm_max_clique_random_n30);

void bm_induced_matching_petersen(benchmark::State& state) {
    graph pet = families::petersen();
    for (auto _ : state) benchmark::DoNotOptimize(induced_matching_number(pet).value);
}
BENCHMARK(bm_induced_matching_petersen);

void bm_graph6_round_trip(benchmark::State& state) {
    graph g = dense_random(40, 11);
    std::string enc = emit_graph6(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(emit_graph6(parse_graph6(enc)).size());
    }
}
BENCHMARK(bm_graph6_round_trip);

} // namespace

BENCHMARK_MAIN();
