#include <benchmark/benchmark.h>

#include <numbers>

#include "cebeam/coherence.hpp"
#include "cebeam/schmidt.hpp"

using namespace cebeam;

static void BM_SampleGhz(benchmark::State& state) {
    const VectorBeam beam = make_ghz_beam();
    const int n = static_cast<int>(state.range(0));
    const FieldGrid grid = make_grid(n, n, 8.0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_beam(beam, grid));
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_SampleGhz)->Arg(128)->Arg(256)->Arg(512);

static void BM_SchmidtRadial(benchmark::State& state) {
    const VectorBeam beam = make_radial_beam();
    const int n = static_cast<int>(state.range(0));
    const FieldGrid grid = make_grid(n, n, 8.0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(schmidt_decompose(beam, grid));
    }
}
BENCHMARK(BM_SchmidtRadial)->Arg(128)->Arg(256)->Arg(512);

static void BM_CovariancePp(benchmark::State& state) {
    const VectorBeam beam = make_pp_beam(3.0);
    const int n = static_cast<int>(state.range(0));
    const FieldGrid grid = default_grid(beam, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(covariance_matrix(coherence_density(beam, grid)));
    }
}
BENCHMARK(BM_CovariancePp)->Arg(128)->Arg(256)->Arg(512);

static void BM_OverlapQuadrature(benchmark::State& state) {
    const GaussianFundamental base{1.0};
    const int n = static_cast<int>(state.range(0));
    const FieldGrid grid = make_grid(n, n, 8.0, 0.0);
    const SampledScalarField up = sample_mode(shifted(base, 0.0, 1.0), grid);
    const SampledScalarField down = sample_mode(shifted(base, 0.0, -1.0), grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inner_product_sampled(up, down));
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_OverlapQuadrature)->Arg(256)->Arg(512);

static void BM_NoonTripartite(benchmark::State& state) {
    const VectorBeam beam = make_noon_beam(1, std::numbers::pi / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize_tripartite(beam));
    }
}
BENCHMARK(BM_NoonTripartite);

BENCHMARK_MAIN();
