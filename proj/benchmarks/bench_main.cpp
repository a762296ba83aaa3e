#include <benchmark/benchmark.h>

#include "spinblocks/am_verify.hpp"
#include "spinblocks/bijections.hpp"
#include "spinblocks/oracles.hpp"
#include "spinblocks/sweep.hpp"

using namespace spinblocks;

static void BM_CoreAndQuotient(benchmark::State& state) {
    const auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& lambda : parts) {
            benchmark::DoNotOptimize(two_core(lambda));
            benchmark::DoNotOptimize(two_quotient(lambda));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_CoreAndQuotient)->Arg(10)->Arg(20)->Arg(30);

static void BM_HookDegree(benchmark::State& state) {
    const auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& lambda : parts) benchmark::DoNotOptimize(hook_degree(lambda));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_HookDegree)->Arg(12)->Arg(24);

static void BM_SpinDegree(benchmark::State& state) {
    const auto bars = enumerate_bar_partitions(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& mu : bars) benchmark::DoNotOptimize(spin_degree(mu));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bars.size()));
}
BENCHMARK(BM_SpinDegree)->Arg(12)->Arg(24);

static void BM_CharactersOf(benchmark::State& state) {
    const auto family = all_families[static_cast<std::size_t>(state.range(0))];
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(characters_of(family, n));
}
BENCHMARK(BM_CharactersOf)->Args({0, 20})->Args({2, 20})->Args({3, 20});

static void BM_RimHookOracle(benchmark::State& state) {
    const auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& lambda : parts) benchmark::DoNotOptimize(rim_hook_terminals(lambda));
    }
}
BENCHMARK(BM_RimHookOracle)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_AmSweep(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CharacterTableCache cache;
        for (Family f : all_families) {
            benchmark::DoNotOptimize(sweep(min_rank(f), 20, threads, [&](int n) { return am_check(f, n, cache); }));
        }
    }
}
BENCHMARK(BM_AmSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_HeightComparisons(benchmark::State& state) {
    for (auto _ : state) {
        CharacterTableCache cache;
        for (Family f : all_families) {
            for (int n = min_rank(f); n <= 14; ++n) {
                for (const auto& block : blocks_of(f, n)) {
                    if (block.weight == 0) continue;
                    benchmark::DoNotOptimize(verify_nonspin_bijection(block, cache));
                    if (is_cover(f)) benchmark::DoNotOptimize(verify_spin_bijection(block, cache));
                }
            }
        }
    }
}
BENCHMARK(BM_HeightComparisons)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
