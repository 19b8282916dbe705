// Microbenchmarks for the hot path: cell reconstruction, the acoustic
// point update inside a full step, and whole-step throughput.
#include <benchmark/benchmark.h>

#include "activeflux/initializers.hpp"
#include "activeflux/reconstruction.hpp"
#include "activeflux/scheme.hpp"

namespace {

using namespace activeflux;

GridState make_vortex_grid(int n) {
    GridState g(n, n, 0.0, 10.0, 0.0, 10.0, BoundaryKind::periodic);
    fill_grid(g, moving_vortex_field(5.0, 1.4), 1.4);
    return g;
}

void bm_reconstruct_cell(benchmark::State& state) {
    GridState g = make_vortex_grid(32);
    CellRecon rc;
    for (auto _ : state) {
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) {
                reconstruct_cell(g, i, j, 1.4, rc);
                benchmark::DoNotOptimize(rc);
            }
    }
    state.SetItemsProcessed(state.iterations() * g.nx() * g.ny());
}
BENCHMARK(bm_reconstruct_cell);

void bm_full_step(benchmark::State& state) {
    const int n = int(state.range(0));
    SchemeParams params;
    Solver solver(make_vortex_grid(n), params);
    for (auto _ : state) {
        solver.step();
        benchmark::DoNotOptimize(solver.state().time);
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(bm_full_step)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
