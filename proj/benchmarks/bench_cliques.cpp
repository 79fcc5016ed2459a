#include <benchmark/benchmark.h>

#include "chronomine/clique_miner.hpp"
#include "chronomine/generator.hpp"

using namespace chronomine;

namespace {

TemporalGraph instance(std::int64_t edges) {
    return generate_graph(GenParams{200, static_cast<std::size_t>(edges), 500, 7, 0.0, false});
}

void enumerate(benchmark::State& state, MemoryMode mode) {
    const TemporalGraph g = instance(state.range(0));
    MinerConfig config;
    config.memory = mode;
    config.record_delays = true;
    RunStats last;
    for (auto _ : state) {
        last = enumerate_closed_active_cliques(g, config, [](const CliqueState& k) { benchmark::DoNotOptimize(k); });
    }
    state.counters["outputs"] = static_cast<double>(last.outputs);
    state.counters["max_delay_us"] = static_cast<double>(last.max_delay.count()) / 1e3;
    state.counters["peak_state"] = static_cast<double>(last.peak_tracked_state);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(last.outputs));
}

void BM_CliquesStack(benchmark::State& state) { enumerate(state, MemoryMode::stack); }
void BM_CliquesRestart(benchmark::State& state) { enumerate(state, MemoryMode::restart); }

void BM_CliquesSigma(benchmark::State& state) {
    const TemporalGraph g = instance(2000);
    MinerConfig config;
    config.sigma = static_cast<TimeStamp>(state.range(0));
    std::size_t outputs = 0;
    for (auto _ : state) {
        outputs = enumerate_closed_active_cliques(g, config, [](const CliqueState&) {}).outputs;
    }
    state.counters["outputs"] = static_cast<double>(outputs);
}

void BM_Closure(benchmark::State& state) {
    const TemporalGraph g = instance(state.range(0));
    const CliqueEnumerator en(g);
    EdgeId e = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(en.closure(make_clique(g, {e})));
        e = static_cast<EdgeId>((e + 1) % static_cast<EdgeId>(g.edge_count()));
    }
}

}  // namespace

BENCHMARK(BM_CliquesStack)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliquesRestart)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliquesSigma)->Arg(0)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Closure)->Arg(2000)->Arg(4000);

BENCHMARK_MAIN();
