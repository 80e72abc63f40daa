#include "wr/cover.hpp"
#include "wr/rayclass.hpp"
#include "wr/witt.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wr;

namespace {

WittVec random_witt(FieldCtx k, unsigned n, std::mt19937_64& g)
{
    std::uniform_int_distribution<uint32_t> d(0, k.p() - 1);
    std::vector<FqElem> c;
    for (unsigned i = 0; i < n; ++i) {
        Coeffs x;
        for (unsigned j = 0; j < k.e(); ++j) x.push_back(d(g));
        c.push_back(FqElem(k, std::move(x)));
    }
    return WittVec(k, std::move(c));
}

void BM_WittMul(benchmark::State& st)
{
    FieldCtx k = make_field(uint32_t(st.range(0)), 4);
    std::mt19937_64 g(7);
    WittVec a = random_witt(k, unsigned(st.range(1)), g), b = random_witt(k, unsigned(st.range(1)), g);
    for (auto _ : st) {
        a = a * b + b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_WittMul)->Args({2, 2})->Args({5, 2})->Args({5, 3})->Args({3, 4});

void BM_WittAdd(benchmark::State& st)
{
    FieldCtx k = make_field(5, 4);
    std::mt19937_64 g(11);
    WittVec a = random_witt(k, 2, g), b = random_witt(k, 2, g);
    for (auto _ : st) {
        a = a + b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_WittAdd);

void BM_GsTable(benchmark::State& st)
{
    GsOptions opt;
    opt.invariants = st.range(1) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(gs_table(5, 4, uint64_t(st.range(0)), opt));
}
BENCHMARK(BM_GsTable)->Args({60, 1})->Args({131, 0})->Args({131, 1})->Unit(benchmark::kMillisecond);

void BM_TowerCompose(benchmark::State& st)
{
    auto covers = family_build("lauter-even", {5, 4, 2, 0}).covers;
    for (auto _ : st) benchmark::DoNotOptimize(tower_compose(covers));
}
BENCHMARK(BM_TowerCompose)->Unit(benchmark::kMillisecond);

void BM_AnalyzeHermitian(benchmark::State& st)
{
    auto c = family_build("table-row", {5, 4, 2, 27}).covers[0];
    for (auto _ : st) benchmark::DoNotOptimize(analyze(c));
}
BENCHMARK(BM_AnalyzeHermitian)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
