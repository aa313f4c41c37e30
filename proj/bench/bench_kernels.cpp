#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lmc/cli.hpp"
#include "lmc/symfun.hpp"

using namespace lmc;

static void BM_DualCauchySerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dual_cauchy_rhs_serial(4, 3, 3));
}
BENCHMARK(BM_DualCauchySerial)->Unit(benchmark::kMillisecond);

static void BM_DualCauchyParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dual_cauchy_rhs(4, 3, 3));
}
BENCHMARK(BM_DualCauchyParallel)->Unit(benchmark::kMillisecond);

static void tensor_inputs(TotalClass& eta, TotalClass& xi) {
    const auto cp = make_complex_projective(8);
    eta = dual_total_class(tangent_class(cp, ClassKind::Chern, 5));
    const auto R = RingSpec::make(5, 8, 15);
    xi = TotalClass(GradedPoly::one(R) + GradedPoly::monomial(R, 1), ClassKind::Chern);
}

static void BM_TensorTopSerial(benchmark::State& state) {
    auto eta = TotalClass::trivial(RingSpec::make(5, 2, 0), ClassKind::Chern), xi = eta;
    tensor_inputs(eta, xi);
    for (auto _ : state) benchmark::DoNotOptimize(tensor_top_class_serial(eta, xi, 17, 4));
}
BENCHMARK(BM_TensorTopSerial)->Unit(benchmark::kMillisecond);

static void BM_TensorTopParallel(benchmark::State& state) {
    auto eta = TotalClass::trivial(RingSpec::make(5, 2, 0), ClassKind::Chern), xi = eta;
    tensor_inputs(eta, xi);
    for (auto _ : state) benchmark::DoNotOptimize(tensor_top_class(eta, xi, 17, 4));
}
BENCHMARK(BM_TensorTopParallel)->Unit(benchmark::kMillisecond);

static void BM_AtlasSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(run_atlas_serial(Corollary::Rp_Euclidean, {}, {2, 3, 4, 5}, {2, 4, 8, 16}));
}
BENCHMARK(BM_AtlasSerial)->Unit(benchmark::kMillisecond);

static void BM_AtlasParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(run_atlas(Corollary::Rp_Euclidean, {}, {2, 3, 4, 5}, {2, 4, 8, 16}));
}
BENCHMARK(BM_AtlasParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
