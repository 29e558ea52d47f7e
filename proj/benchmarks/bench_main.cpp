#include <benchmark/benchmark.h>

#include "hookcontent/diffop.hpp"
#include "hookcontent/identities.hpp"
#include "hookcontent/partial_fraction.hpp"
#include "hookcontent/tableaux.hpp"

using namespace hookcontent;

static void BM_HookProduct(benchmark::State& state) {
    const StrictPartition lambda({12, 10, 9, 7, 4, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(hook_product(lambda));
}
BENCHMARK(BM_HookProduct);

// Fresh counter each iteration so the memo table is rebuilt.
static void BM_SkewCount(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const StrictPartition mu({2, 1});
    for (auto _ : state) {
        SkewTableauCounter counter;
        Integer total = 0;
        for (const auto& lambda : enumerate_extensions(mu, n)) total += counter.count(SkewShape(lambda, mu));
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_SkewCount)->Arg(8)->Arg(12)->Arg(16);

static void BM_DPower(benchmark::State& state) {
    const auto r = static_cast<unsigned>(state.range(0));
    const StrictPartition lambda({5, 3, 1});
    const auto g = content_sum_function("binom(c,2)", [](int c) { return binom(c, 2); });
    for (auto _ : state) benchmark::DoNotOptimize(apply_D_power(g, lambda, r));
}
BENCHMARK(BM_DPower)->Arg(1)->Arg(3)->Arg(5);

static void BM_PfExpand(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pf_expand(k));
}
BENCHMARK(BM_PfExpand)->Arg(4)->Arg(8)->Arg(12);

static void BM_Normalization(benchmark::State& state) {
    auto check = default_check("normalization");
    check.n_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_identity(check).pass);
}
BENCHMARK(BM_Normalization)->Arg(12)->Arg(18);
BENCHMARK_MAIN();
