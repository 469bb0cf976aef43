#include "mixc1/basisgen.hpp"
#include "mixc1/c1space.hpp"
#include "mixc1/examples.hpp"
#include "mixc1/verify.hpp"

#include <benchmark/benchmark.h>

using namespace mixc1;

namespace {

const char* const kMeshes[] = {"ex1-generic", "ex2-generic", "ex3"};

void BM_Gluing(benchmark::State& state)
{
    const MeshPair m = bundled_example(kMeshes[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_gluing(m));
    state.SetLabel(kMeshes[state.range(0)]);
}
BENCHMARK(BM_Gluing)->DenseRange(0, 2);

void BM_Algorithm1(benchmark::State& state)
{
    const GluingData g = compute_gluing(bundled_example("ex1-generic"));
    const auto d = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(algorithm1(g, g.cls, d));
}
BENCHMARK(BM_Algorithm1)->Arg(3)->Arg(6)->Arg(10);

void BM_GenerateBasis(benchmark::State& state)
{
    const MeshPair m = bundled_example("ex1-generic");
    const GluingData g = compute_gluing(m);
    const TraceNormalSpace t = algorithm1(g, g.cls, static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_basis(m, g, t));
}
BENCHMARK(BM_GenerateBasis)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DimensionOracle(benchmark::State& state)
{
    const MeshPair m = bundled_example("ex1-generic");
    const GluingData g = compute_gluing(m);
    const auto d = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dimension_oracle(m, g, d));
}
BENCHMARK(BM_DimensionOracle)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_IdentityCheck(benchmark::State& state)
{
    const MeshPair m = bundled_example("ex1-generic");
    const GluingData g = compute_gluing(m);
    const BasisSet b = generate_basis(m, g, algorithm1(g, g.cls, 6));
    for (auto _ : state)
        for (const auto& f : b.interface_functions)
            benchmark::DoNotOptimize(c1_identity_check(f, g));
}
BENCHMARK(BM_IdentityCheck)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
