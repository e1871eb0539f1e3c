#include <benchmark/benchmark.h>

#include <centrum/fixtures.hpp>

using namespace centrum;
using namespace centrum::fixtures;

static void BM_Center(benchmark::State& state) {
    Algebra a = full_matrix_algebra(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(center(a));
}
BENCHMARK(BM_Center)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    Matrix m = random_matrix(n, n, 9, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMicrosecond);

// Column times row over M_n has dimension n^2.
static void BM_TensorOver(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Bimodule c = column_module(n), r = row_module(n);
    Bimodule reg = regular_bimodule(full_matrix_algebra(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor_over(c, r));
        benchmark::DoNotOptimize(tensor_over(reg, c));
    }
}
BENCHMARK(BM_TensorOver)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_Beta(benchmark::State& state) {
    Rng rng(7);
    BetaInstance inst = random_beta_instance(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(beta(inst.Mu, inst.Nu, inst.M, inst.N));
}
BENCHMARK(BM_Beta)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_LaxFunctor(benchmark::State& state) {
    Rng rng(11);
    auto chain = random_chain(3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(verify_lax_functor(chain[0], chain[1], chain[2]));
}
BENCHMARK(BM_LaxFunctor)->Unit(benchmark::kMillisecond);

static void BM_SemisimpleCase(benchmark::State& state) {
    Rng rng(13);
    SemisimpleCase sc = semisimple_case(2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(check_theorem58_hypotheses(sc.lefts, sc.rights));
}
BENCHMARK(BM_SemisimpleCase)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
