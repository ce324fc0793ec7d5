#include <benchmark/benchmark.h>

#include "rigidity/rigidity.hpp"

using namespace rigidity;

namespace {

Embedding seeded_points(int n, int d, std::uint64_t seed) {
    Rng rng(seed);
    Embedding p(d, n);
    for (double& x : p.flat()) x = rng.uniform01();
    return p;
}

Matrix seeded_psd(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix b(n, n);
    for (double& x : b.data()) x = rng.uniform(-1.0, 1.0);
    return gram(b);
}

void bm_eigenvalues(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Matrix m = seeded_psd(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(m));
}

void bm_stiffness_assembly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = complete_graph(n);
    const Framework fw(g, seeded_points(n, 3, 2));
    const WeightFn f = WeightFn::ones(n);
    for (auto _ : state) benchmark::DoNotOptimize(stiffness(fw, f));
}

void bm_apply_stiffness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = complete_graph(n);
    const Framework fw(g, seeded_points(n, 3, 3));
    const WeightFn f = WeightFn::ones(n);
    std::vector<double> phi(static_cast<std::size_t>(3 * n), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(apply_stiffness(fw, f, phi));
}

void bm_apply_stiffness_dense(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = complete_graph(n);
    const Framework fw(g, seeded_points(n, 3, 3));
    const Matrix l = stiffness(fw, WeightFn::ones(n));
    std::vector<double> phi(static_cast<std::size_t>(3 * n), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(l * phi);
}

// The point of the decomposition: predicted blow-up spectra cost a handful
// of small eigenproblems, not one on the blown-up graph.
void bm_blowup_rhs(benchmark::State& state) {
    const int copies = static_cast<int>(state.range(0));
    const Graph g = complete_graph(5);
    const Embedding p = seeded_points(5, 2, 4);
    const WeightFn a(std::vector<double>(5, static_cast<double>(copies)));
    for (auto _ : state) benchmark::DoNotOptimize(blowup_spectrum_rhs(g, p, a));
}

void bm_blowup_direct(benchmark::State& state) {
    const int copies = static_cast<int>(state.range(0));
    const Graph g = complete_graph(5);
    const Embedding p = seeded_points(5, 2, 4);
    const WeightFn a(std::vector<double>(5, static_cast<double>(copies)));
    for (auto _ : state) {
        const BlowupResult big = blow_up(g, a);
        const Embedding bp = blow_up_embedding(p, a, big.index);
        benchmark::DoNotOptimize(eigenvalues_sym(stiffness(Framework(big.graph, bp))));
    }
}

void bm_gap_objective(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Framework fw(complete_graph(n), seeded_points(n, 2, 5));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(fw));
}

void bm_optimize_small(benchmark::State& state) {
    OptimizerConfig cfg;
    cfg.restarts = 2;
    cfg.max_iters = 200;
    const Graph g = complete_graph(4);
    for (auto _ : state) benchmark::DoNotOptimize(maximize_spectral_gap(g, 2, cfg));
}

}  // namespace

BENCHMARK(bm_eigenvalues)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_stiffness_assembly)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_apply_stiffness)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_apply_stiffness_dense)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_blowup_rhs)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_blowup_direct)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_gap_objective)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bm_optimize_small);

BENCHMARK_MAIN();
