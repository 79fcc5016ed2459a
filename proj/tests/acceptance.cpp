// Acceptance suite: one PASS/FAIL line per criterion. Criterion 7 is
// reported as SOFT-PASS/SOFT-FAIL and never affects the exit code.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chronomine/clique_miner.hpp"
#include "chronomine/connected_miner.hpp"
#include "chronomine/generator.hpp"
#include "chronomine/oracle.hpp"
#include "cli.hpp"

using namespace chronomine;

namespace {

// instance family
constexpr std::uint64_t kFirstSeed = 1;
constexpr std::uint64_t kLastSeed = 200;
constexpr Vertex kMaxN = 9;
constexpr std::size_t kMaxPairs = 18;
constexpr TimeStamp kMaxTmax = 12;
constexpr double kMultiInterval = 0.2;

// limits
constexpr double kCliqueSeconds = 60.0;
constexpr double kConnectedSeconds = 120.0;
constexpr std::size_t kClosureDraws = 1000;
constexpr std::size_t kRecordsPerLevel = 4;

// delay sanity (soft)
constexpr Vertex kDelayVertices = 200;
constexpr std::size_t kDelayEdges = 2000;
constexpr TimeStamp kDelayTmax = 500;
constexpr double kMaxOverMedian = 50.0;
constexpr double kDoublingGrowth = 8.0;
constexpr int kDelayRepeats = 5;

int hard_failures = 0;

void report(bool pass, int id, const std::string& name, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++hard_failures;
}

std::vector<TemporalGraph> family(bool directed) {
    std::vector<TemporalGraph> out;
    for (std::uint64_t seed = kFirstSeed; seed <= kLastSeed; ++seed) {
        out.push_back(generate_graph(random_family_params(seed, kMaxN, kMaxPairs, kMaxTmax, kMultiInterval, directed)));
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

void oracle_cliques(const std::vector<TemporalGraph>& graphs) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t mismatches = 0, records = 0;
    std::string first;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto mined = oracle::keys(enumerate_closed_active_cliques(graphs[i]));
        records += mined.size();
        const auto brute = oracle::compare(oracle::keys(oracle::brute_closed_cliques(graphs[i])), mined);
        const auto simple = oracle::compare(oracle::keys(oracle::simple_clique_enum(graphs[i])), mined);
        if (!brute.ok() || !simple.ok()) {
            if (first.empty()) first = " first at seed " + std::to_string(kFirstSeed + i);
            ++mismatches;
        }
    }
    const double secs = seconds_since(start);
    report(mismatches == 0 && secs < kCliqueSeconds, 1, "oracle equivalence (cliques)",
           std::to_string(graphs.size()) + " instances, " + std::to_string(records) + " cliques, " +
               std::to_string(mismatches) + " mismatches" + first + fmt(", %.2fs (limit %.0fs)", secs, kCliqueSeconds));
}

void oracle_connected(const std::vector<TemporalGraph>& undirected, const std::vector<TemporalGraph>& directed) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t mismatches = 0, records = 0, runs = 0;
    std::string first;
    auto run = [&](const TemporalGraph& g, ConnectivityKind kind, std::size_t index) {
        const auto mined = oracle::keys(enumerate_closed_connected(g, kind));
        records += mined.size();
        ++runs;
        if (!oracle::compare(oracle::keys(oracle::brute_closed_connected(g, kind)), mined).ok()) {
            if (first.empty()) {
                first = std::string(" first at seed ") + std::to_string(kFirstSeed + index) + " kind " +
                        std::string(to_string(kind));
            }
            ++mismatches;
        }
    };
    for (std::size_t i = 0; i < undirected.size(); ++i) {
        for (auto kind : {ConnectivityKind::weak, ConnectivityKind::two_edge, ConnectivityKind::two_vertex}) {
            run(undirected[i], kind, i);
        }
    }
    for (std::size_t i = 0; i < directed.size(); ++i) run(directed[i], ConnectivityKind::strong, i);
    const double secs = seconds_since(start);
    report(mismatches == 0 && secs < kConnectedSeconds, 2, "oracle equivalence (connected, 4 kinds)",
           std::to_string(runs) + " runs, " + std::to_string(records) + " records, " + std::to_string(mismatches) +
               " mismatches" + first + fmt(", %.2fs (limit %.0fs)", secs, kConnectedSeconds));
}

void closure_laws(const std::vector<TemporalGraph>& graphs) {
    std::mt19937_64 rng(20241014);
    std::vector<std::vector<CliqueState>> actives;
    for (const auto& g : graphs) actives.push_back(oracle::brute_active_cliques(g));
    std::size_t draws = 0, violations = 0;
    while (draws < kClosureDraws) {
        const std::size_t gi = rng() % graphs.size();
        if (actives[gi].empty()) continue;
        const auto& g = graphs[gi];
        const CliqueState& k = actives[gi][rng() % actives[gi].size()];
        ++draws;
        const CliqueState x = closure_X(g, k);
        const bool idempotent = closure_X(g, x) == x;
        const bool extensive = std::includes(x.edges.begin(), x.edges.end(), k.edges.begin(), k.edges.end());
        const bool same_tau = x.tau == k.tau;
        const bool lex_min = oracle::brute_lex_min_closure(g, k) == x;
        if (!(idempotent && extensive && same_tau && lex_min)) ++violations;
    }
    report(violations == 0, 3, "closure laws",
           std::to_string(draws) + " random active cliques, " + std::to_string(violations) + " violations");
}

void parent_soundness(const std::vector<TemporalGraph>& graphs) {
    std::size_t checked = 0, violations = 0;
    for (const auto& g : graphs) {
        const CliqueEnumerator en(g);
        const auto all = enumerate_closed_active_cliques(g);
        for (const auto& k : all) {
            if (en.is_root(k)) continue;
            ++checked;
            const CliqueState p = en.parent(k);
            const bool wider = p.tau->contains(*k.tau) && p.tau != k.tau;
            const bool smaller = p.tau == k.tau && lex_less(p.edges, k.edges);
            if (!(wider || smaller)) ++violations;
            CliqueState cur = k;
            std::size_t steps = 0;
            while (!en.is_root(cur) && steps <= all.size()) {
                cur = en.parent(cur);
                ++steps;
            }
            if (!en.is_root(cur)) ++violations;
        }
    }
    report(violations == 0, 4, "parent-relation soundness",
           std::to_string(checked) + " non-root cliques, " + std::to_string(violations) + " violations");
}

void sigma_filter(const std::vector<TemporalGraph>& graphs) {
    std::mt19937_64 rng(5);
    std::size_t mismatches = 0;
    for (const auto& g : graphs) {
        const auto sigma = static_cast<TimeStamp>(1 + rng() % static_cast<std::uint64_t>(g.ground().t_max));
        auto all = enumerate_closed_active_cliques(g);
        std::erase_if(all, [&](const CliqueState& k) { return k.duration() < sigma; });
        MinerConfig config;
        config.sigma = sigma;
        if (!oracle::compare(oracle::keys(all), oracle::keys(enumerate_closed_active_cliques(g, config))).ok()) {
            ++mismatches;
        }
    }
    report(mismatches == 0, 5, "sigma-filter law",
           std::to_string(graphs.size()) + " instances with random sigma, " + std::to_string(mismatches) +
               " mismatches");
}

void modes(const std::vector<TemporalGraph>& graphs) {
    std::size_t mismatches = 0, over = 0;
    double worst = 0.0;
    for (const auto& g : graphs) {
        MinerConfig stack, restart;
        restart.memory = MemoryMode::restart;
        std::vector<std::string> a, b;
        enumerate_closed_active_cliques(g, stack, [&](const CliqueState& k) { a.push_back(oracle::canonical_key(k)); });
        const RunStats rs = enumerate_closed_active_cliques(
            g, restart, [&](const CliqueState& k) { b.push_back(oracle::canonical_key(k)); });
        if (!oracle::compare(a, b).ok()) ++mismatches;
        const std::size_t levels = rs.max_depth + 1;
        worst = std::max(worst, static_cast<double>(rs.peak_tracked_state) / static_cast<double>(levels));
        if (rs.peak_tracked_state > kRecordsPerLevel * levels) ++over;
    }
    report(mismatches == 0 && over == 0, 6, "mode equivalence and memory contract",
           std::to_string(mismatches) + " set mismatches, " + std::to_string(over) +
               " runs over budget" + fmt(", worst %.2f records per level (limit %.0f)", worst,
                                          static_cast<double>(kRecordsPerLevel)));
}

struct DelayProfile {
    double max_ns = 0;
    double median_ns = 0;
    std::size_t outputs = 0;
};

// The emission sequence is deterministic, so gap i measures the same work
// in every repeat; its minimum over repeats strips scheduler noise.
DelayProfile profile(std::size_t edges) {
    const TemporalGraph g = generate_graph(GenParams{kDelayVertices, edges, kDelayTmax, 7, 0.0, false});
    std::vector<double> gaps;
    std::size_t outputs = 0;
    for (int r = 0; r < kDelayRepeats; ++r) {
        MinerConfig config;
        config.record_delays = true;
        const RunStats stats = enumerate_closed_active_cliques(g, config, [](const CliqueState&) {});
        outputs = stats.outputs;
        if (gaps.empty()) gaps.assign(stats.delays.size(), 0.0);
        for (std::size_t i = 0; i < stats.delays.size(); ++i) {
            const auto x = static_cast<double>(stats.delays[i].count());
            gaps[i] = r == 0 ? x : std::min(gaps[i], x);
        }
    }
    if (gaps.empty()) return {};
    const double max_ns = *std::max_element(gaps.begin(), gaps.end());
    std::nth_element(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2), gaps.end());
    return {max_ns, gaps[gaps.size() / 2], outputs};
}

void delay_sanity() {
    const DelayProfile base = profile(kDelayEdges);
    const DelayProfile doubled = profile(2 * kDelayEdges);
    const double spread = base.median_ns > 0 ? base.max_ns / base.median_ns : 0.0;
    const double growth = base.max_ns > 0 ? doubled.max_ns / base.max_ns : 0.0;
    const bool ok = spread <= kMaxOverMedian && growth <= kDoublingGrowth;
    std::printf("[%s] 7 delay sanity (soft): |E|=%zu: %zu outputs, max %.0fus, median %.1fus, max/median %.1f "
                "(limit %.0f); |E|=%zu: %zu outputs, max %.0fus, growth %.2fx (limit %.0fx)\n",
                ok ? "SOFT-PASS" : "SOFT-FAIL", kDelayEdges, base.outputs, base.max_ns / 1e3, base.median_ns / 1e3,
                spread, kMaxOverMedian, 2 * kDelayEdges, doubled.outputs, doubled.max_ns / 1e3, growth,
                kDoublingGrowth);
    std::fflush(stdout);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void golden() {
    const std::filesystem::path fixtures = CHRONOMINE_FIXTURE_DIR;
    const std::filesystem::path goldens = CHRONOMINE_GOLDEN_DIR;
    struct Case {
        std::vector<std::string> args;
        std::string golden;
    };
    const std::vector<Case> cases{
        {{"mine", "connected", (fixtures / "graph_a.txt").string()}, "graph_a_connected.jsonl"},
        {{"mine", "cliques", (fixtures / "triangle.txt").string()}, "triangle_cliques.jsonl"},
        {{"mine", "cliques", (fixtures / "triangle.txt").string(), "--memory", "restart"}, "triangle_cliques.jsonl"},
    };
    std::size_t differ = 0;
    for (const auto& c : cases) {
        std::ostringstream out, err;
        const int code = cli::run_cli(c.args, out, err);
        const std::string expected = slurp(goldens / c.golden);
        if (code != 0 || expected.empty() || out.str() != expected) ++differ;
    }
    report(differ == 0, 8, "hand-derived fixtures",
           std::to_string(cases.size()) + " byte-exact golden comparisons, " + std::to_string(differ) + " differ");
}

}  // namespace

int main() {
    const auto undirected = family(false);
    const auto directed = family(true);
    oracle_cliques(undirected);
    oracle_connected(undirected, directed);
    closure_laws(undirected);
    parent_soundness(undirected);
    sigma_filter(undirected);
    modes(undirected);
    delay_sanity();
    golden();
    std::printf("%s: %d hard failure(s)\n", hard_failures == 0 ? "ACCEPTED" : "REJECTED", hard_failures);
    return hard_failures == 0 ? 0 : 1;
}
