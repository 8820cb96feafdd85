// Serial reference vs OpenMP kernels on generated systems.

#include "generator.hpp"

#include "svcdep/match.hpp"

#include <benchmark/benchmark.h>

using namespace svcdep;

namespace {

const SystemIR& system_of(int services, int endpoints, int calls, int entities) {
    static std::map<std::tuple<int, int, int, int>, SystemIR> cache;
    auto key = std::make_tuple(services, endpoints, calls, entities);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, testing::generate_ir_system(7, {services, endpoints, calls, entities}).ir).first;
    }
    return it->second;
}

void resolve(benchmark::State& state, Execution execution) {
    const auto& ir = system_of(10, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 0);
    const TypePatterns patterns;
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolve_calls(ir, patterns, execution));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void entities(benchmark::State& state, Execution execution) {
    const auto& ir = system_of(10, 1, 0, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(match_entities(ir, SimilarityConfig{}, {}, execution));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ResolveCallsSerial(benchmark::State& s) { resolve(s, Execution::Serial); }
void BM_ResolveCallsParallel(benchmark::State& s) { resolve(s, Execution::Parallel); }
void BM_MatchEntitiesSerial(benchmark::State& s) { entities(s, Execution::Serial); }
void BM_MatchEntitiesParallel(benchmark::State& s) { entities(s, Execution::Parallel); }

} // namespace

BENCHMARK(BM_ResolveCallsSerial)->Args({50, 100})->Args({400, 2000})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ResolveCallsParallel)->Args({50, 100})->Args({400, 2000})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatchEntitiesSerial)->Arg(60)->Arg(150)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatchEntitiesParallel)->Arg(60)->Arg(150)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
