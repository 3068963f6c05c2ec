#include <benchmark/benchmark.h>

#include "znx/construction.hpp"
#include "znx/factorization.hpp"
#include "znx/pipeline.hpp"
#include "znx/sparsity.hpp"
#include "znx/tietze.hpp"

namespace {

void BM_BuildX(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(znx::build_x(m));
}
BENCHMARK(BM_BuildX)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_HomologyX(benchmark::State& state) {
    const auto x = znx::build_x(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(znx::homology(x, 1));
        benchmark::DoNotOptimize(znx::homology(x, 2));
    }
}
BENCHMARK(BM_HomologyX)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_HomologyW(benchmark::State& state) {
    const auto w = znx::build_w(static_cast<int>(state.range(0))).complex;
    for (auto _ : state) benchmark::DoNotOptimize(znx::homology(w, 2));
}
BENCHMARK(BM_HomologyW)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_OrthogonalPair(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(znx::orthogonal_pair(size));
}
BENCHMARK(BM_OrthogonalPair)->Arg(8)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
    const auto x = znx::build_x(static_cast<int>(state.range(0)));
    const auto d2 = znx::boundary_matrix(x, 2);
    for (auto _ : state) benchmark::DoNotOptimize(znx::smith_normal_form(d2));
}
BENCHMARK(BM_SmithNormalForm)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MinimizeExtracted(benchmark::State& state) {
    const auto p = znx::extract_presentation(znx::build_x(static_cast<int>(state.range(0))), 0);
    for (auto _ : state) benchmark::DoNotOptimize(znx::minimize(p));
}
BENCHMARK(BM_MinimizeExtracted)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_RunLower(benchmark::State& state) {
    const auto p = znx::standard_zn(static_cast<int>(state.range(0)), znx::ZnStyle::intro3);
    for (auto _ : state) benchmark::DoNotOptimize(znx::run_lower(p));
}
BENCHMARK(BM_RunLower)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
