#include <benchmark/benchmark.h>

#include "ihspace/chain_complex.hpp"
#include "ihspace/rational_matrix.hpp"
#include "ihspace/stratified.hpp"

using namespace ihs;

static void BM_BoundaryRank(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ChainComplex c = chain_complex(boundary_of_simplex(n + 1), true);
    const RationalMatrix& d = c.boundary(n / 2 + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(d));
    state.SetLabel(std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
}
BENCHMARK(BM_BoundaryRank)->DenseRange(3, 7);

static void BM_SphereBetti(benchmark::State& state)
{
    const SimplicialComplex k = boundary_of_simplex(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti(chain_complex(k, true)));
}
BENCHMARK(BM_SphereBetti)->DenseRange(1, 6);

static void BM_SubdividedSphere(benchmark::State& state)
{
    const SimplicialComplex k = barycentric_subdivision(boundary_of_simplex(static_cast<int>(state.range(0)) + 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti(chain_complex(k, true)));
    state.SetLabel(std::to_string(k.size()) + " simplices");
}
BENCHMARK(BM_SubdividedSphere)->DenseRange(1, 3);

static void BM_Tensor(benchmark::State& state)
{
    const ChainComplex a = chain_complex(boundary_of_simplex(static_cast<int>(state.range(0)) + 1), true);
    const ChainComplex b = chain_complex(boundary_of_simplex(static_cast<int>(state.range(1)) + 1), true);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti(tensor(a, b)));
}
BENCHMARK(BM_Tensor)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Args({3, 5})->Unit(benchmark::kMillisecond);

static void BM_ConeChainModelSweep(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ChainComplex link = chain_complex(boundary_of_simplex(n + 1), true);
    const auto perversities = sweep_perversities(n);
    for (auto _ : state)
        for (const auto& p : perversities)
            benchmark::DoNotOptimize(hi_cone_chain_model(link, n, p));
}
BENCHMARK(BM_ConeChainModelSweep)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SuspensionChainModelSweep(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ChainComplex link = chain_complex(boundary_of_simplex(n + 1), true);
    const auto perversities = sweep_perversities(n);
    for (auto _ : state)
        for (const auto& p : perversities)
            benchmark::DoNotOptimize(hi_suspension_chain_model(link, n, p));
}
BENCHMARK(BM_SuspensionChainModelSweep)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
