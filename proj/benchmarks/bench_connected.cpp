#include <benchmark/benchmark.h>

#include "chronomine/connected_miner.hpp"
#include "chronomine/generator.hpp"

using namespace chronomine;

namespace {

void mine(benchmark::State& state, ConnectivityKind kind, bool directed) {
    const TemporalGraph g = generate_graph(
        GenParams{static_cast<Vertex>(state.range(0)), static_cast<std::size_t>(state.range(1)), 60, 11, 0.2, directed});
    ConnectedOptions options;
    options.threads = static_cast<unsigned>(state.range(2));
    std::size_t outputs = 0;
    for (auto _ : state) {
        outputs = enumerate_closed_connected(g, kind, options, [](const ConnectedRecord& r) {
                      benchmark::DoNotOptimize(r);
                  }).outputs;
    }
    state.counters["outputs"] = static_cast<double>(outputs);
}

void BM_Weak(benchmark::State& s) { mine(s, ConnectivityKind::weak, false); }
void BM_TwoEdge(benchmark::State& s) { mine(s, ConnectivityKind::two_edge, false); }
void BM_TwoVertex(benchmark::State& s) { mine(s, ConnectivityKind::two_vertex, false); }
void BM_Strong(benchmark::State& s) { mine(s, ConnectivityKind::strong, true); }

}  // namespace

BENCHMARK(BM_Weak)->Args({50, 150, 1})->Args({100, 300, 1})->Args({100, 300, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoEdge)->Args({50, 150, 1})->Args({100, 300, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoVertex)->Args({50, 150, 1})->Args({100, 300, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Strong)->Args({50, 300, 1})->Args({100, 600, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
