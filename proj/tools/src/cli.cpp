#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "chronomine/clique_miner.hpp"
#include "chronomine/connected_miner.hpp"
#include "chronomine/errors.hpp"
#include "chronomine/generator.hpp"
#include "chronomine/oracle.hpp"
#include "json_output.hpp"

namespace chronomine::cli {

namespace {

struct MineArgs {
    std::string file;
    std::string kind = "weak";
    TimeStamp min_duration = 0;
    std::size_t min_size = 2;
    bool include_singletons = false;
    std::string memory = "stack";
    bool stats = false;
    std::string output;
};

struct CheckArgs {
    std::string file;
    bool random = false;
    std::uint64_t seed = 1;
    std::size_t count = 200;
    Vertex max_n = 9;
    std::size_t max_pairs = 18;
    TimeStamp max_tmax = 12;
    double multi_interval = 0.2;
    TimeStamp min_duration = 0;
};

struct GenArgs {
    GenParams params;
    std::string output;
};

struct OracleArgs {
    std::string file;
    std::string kind = "weak";
    std::string method = "brute";
    std::string output;
};

ConnectivityKind kind_of(const std::string& name) {
    const auto kind = parse_connectivity_kind(name);
    if (!kind) throw UsageError("unknown connectivity kind '" + name + "'");
    return *kind;
}

unsigned threads_from_env() {
    const char* raw = std::getenv("CHRONOMINE_THREADS");
    if (!raw || !*raw) return 1;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1 || value > 1024) {
        throw UsageError(std::string("CHRONOMINE_THREADS must be a positive integer, got '") + raw + "'");
    }
    return static_cast<unsigned>(value);
}

// Writes to --output when given, else to `fallback`.
class Destination {
public:
    Destination(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot write " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void emit(std::ostream& os, const Json& j) { os << j.dump() << '\n'; }

ConnectedOptions connected_options(const MineArgs& m) {
    ConnectedOptions o;
    o.min_size = m.min_size;
    o.include_singletons = m.include_singletons;
    o.min_duration = std::max<TimeStamp>(m.min_duration, 1);
    o.threads = threads_from_env();
    return o;
}

int mine_connected(const MineArgs& m, std::ostream& out) {
    const TemporalGraph g = TemporalGraph::load(m.file);
    const ConnectivityKind kind = kind_of(m.kind);
    Destination dest(m.output, out);
    const RunStats stats = enumerate_closed_connected(
        g, kind, connected_options(m), [&](const ConnectedRecord& r) { emit(dest.get(), to_json(g, r)); });
    if (m.stats) emit(dest.get(), to_json(stats));
    return 0;
}

int mine_cliques(const MineArgs& m, std::ostream& out) {
    const TemporalGraph g = TemporalGraph::load(m.file);
    MinerConfig config;
    config.sigma = m.min_duration;
    config.memory = m.memory == "restart" ? MemoryMode::restart : MemoryMode::stack;
    Destination dest(m.output, out);
    const RunStats stats = enumerate_closed_active_cliques(g, config, [&](const CliqueState& k) {
        if (k.vertices.size() >= m.min_size) emit(dest.get(), to_json(g, k));
    });
    if (m.stats) emit(dest.get(), to_json(stats));
    return 0;
}

int oracle_connected(const OracleArgs& a, std::ostream& out) {
    const TemporalGraph g = TemporalGraph::load(a.file);
    Destination dest(a.output, out);
    for (const auto& r : oracle::brute_closed_connected(g, kind_of(a.kind))) {
        emit(dest.get(), to_json(g, r));
    }
    return 0;
}

int oracle_cliques(const OracleArgs& a, std::ostream& out) {
    const TemporalGraph g = TemporalGraph::load(a.file);
    Destination dest(a.output, out);
    const auto cliques = a.method == "simple" ? oracle::simple_clique_enum(g) : oracle::brute_closed_cliques(g);
    for (const auto& k : cliques) emit(dest.get(), to_json(g, k));
    return 0;
}

// One miner-vs-oracle comparison; returns the mismatch text or nullopt.
std::optional<std::string> check_graph(const TemporalGraph& g, TimeStamp sigma, std::size_t& comparisons) {
    auto differs = [&](const std::string& what, const oracle::OracleReport& r) -> std::optional<std::string> {
        ++comparisons;
        if (r.ok()) return std::nullopt;
        return what + ": " + r.first_mismatch() + " (expected " + std::to_string(r.expected.size()) + ", got " +
               std::to_string(r.actual.size()) + ")";
    };

    if (!g.directed()) {
        MinerConfig config;
        config.sigma = sigma;
        const auto mined = oracle::keys(enumerate_closed_active_cliques(g, config));
        auto by_duration = [&](std::vector<CliqueState> ks) {
            std::erase_if(ks, [&](const CliqueState& k) { return k.duration() < std::max<TimeStamp>(sigma, 1); });
            return oracle::keys(ks);
        };
        if (auto m = differs("cliques vs simple", oracle::compare(by_duration(oracle::simple_clique_enum(g)), mined))) {
            return m;
        }
        if (g.vertex_count() <= 10) {
            if (auto m = differs("cliques vs brute",
                                 oracle::compare(by_duration(oracle::brute_closed_cliques(g)), mined))) {
                return m;
            }
        }
    }
    if (g.vertex_count() <= 14) {
        const std::vector<ConnectivityKind> kinds =
            g.directed() ? std::vector{ConnectivityKind::strong}
                         : std::vector{ConnectivityKind::weak, ConnectivityKind::two_edge, ConnectivityKind::two_vertex};
        ConnectedOptions options;
        options.min_duration = std::max<TimeStamp>(sigma, 1);
        for (ConnectivityKind kind : kinds) {
            const auto expected = oracle::keys(oracle::brute_closed_connected(g, kind, options));
            const auto actual = oracle::keys(enumerate_closed_connected(g, kind, options));
            if (auto m = differs("connected/" + std::string(to_string(kind)), oracle::compare(expected, actual))) {
                return m;
            }
        }
    }
    return std::nullopt;
}

int run_check(const CheckArgs& a, std::ostream& out) {
    std::size_t comparisons = 0;
    if (!a.random) {
        if (a.file.empty()) throw UsageError("check needs FILE or --random");
        const TemporalGraph g = TemporalGraph::load(a.file);
        if (g.directed() && g.vertex_count() > 14) throw UsageError("graph exceeds every oracle cap");
        if (auto m = check_graph(g, a.min_duration, comparisons)) {
            out << "MISMATCH " << a.file << ": " << *m << '\n';
            return 1;
        }
        out << "ok: " << comparisons << " comparisons on " << a.file << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < a.count; ++i) {
        const std::uint64_t seed = a.seed + i;
        for (bool directed : {false, true}) {
            const GenParams p =
                random_family_params(seed, a.max_n, a.max_pairs, a.max_tmax, a.multi_interval, directed);
            const TemporalGraph g = generate_graph(p);
            if (auto m = check_graph(g, a.min_duration, comparisons)) {
                out << "MISMATCH seed " << seed << (directed ? " (directed)" : "") << ": " << *m << '\n';
                return 1;
            }
        }
    }
    out << "ok: " << comparisons << " comparisons over " << a.count << " seeds\n";
    return 0;
}

int run_gen(const GenArgs& a, std::ostream& out) {
    const std::string text = generate_edge_list(a.params);
    Destination dest(a.output, out);
    dest.get() << text;
    return 0;
}

void add_mine_options(CLI::App* sub, MineArgs& m, bool connected) {
    sub->add_option("file", m.file, "temporal edge-list file")->required();
    if (connected) {
        sub->add_option("--kind", m.kind, "connectivity kind")
            ->check(CLI::IsMember({"weak", "strong", "2edge", "2vertex"}));
        sub->add_flag("--include-singletons", m.include_singletons, "emit single vertices too");
    } else {
        sub->add_option("--memory", m.memory, "search state policy")->check(CLI::IsMember({"stack", "restart"}));
    }
    sub->add_option("--min-duration", m.min_duration, "minimum duration sigma in time stamps")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--min-size", m.min_size, "minimum number of vertices")->check(CLI::NonNegativeNumber);
    sub->add_flag("--stats", m.stats, "append a stats line");
    sub->add_option("--output", m.output, "write records here instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chronomine: closed connected subsets and closed active cliques of temporal graphs"};
    app.name("chronomine");
    app.require_subcommand(1);

    MineArgs mine_args;
    auto* mine = app.add_subcommand("mine", "enumerate closed structures");
    mine->require_subcommand(1);
    auto* mine_conn = mine->add_subcommand("connected", "closed connected vertex subsets");
    auto* mine_cliq = mine->add_subcommand("cliques", "closed active cliques");
    add_mine_options(mine_conn, mine_args, true);
    add_mine_options(mine_cliq, mine_args, false);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "compare miners against the brute-force oracles");
    check->add_option("file", check_args.file, "temporal edge-list file");
    check->add_flag("--random", check_args.random, "check generated instances instead of a file");
    check->add_option("--seed", check_args.seed, "first seed");
    check->add_option("--count", check_args.count, "number of seeds");
    check->add_option("--max-n", check_args.max_n, "largest vertex count")->check(CLI::Range(2, 14));
    check->add_option("--max-pairs", check_args.max_pairs, "largest number of vertex pairs")
        ->check(CLI::PositiveNumber);
    check->add_option("--max-tmax", check_args.max_tmax, "largest t_max")->check(CLI::PositiveNumber);
    check->add_option("--multi-interval", check_args.multi_interval, "two-interval probability")
        ->check(CLI::Range(0.0, 1.0));
    check->add_option("--min-duration", check_args.min_duration, "sigma")->check(CLI::NonNegativeNumber);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write a random temporal edge list");
    gen->add_option("--vertices", gen_args.params.vertices)->required()->check(CLI::PositiveNumber);
    gen->add_option("--edges", gen_args.params.pairs, "distinct vertex pairs")->required();
    gen->add_option("--tmax", gen_args.params.t_max)->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_args.params.seed)->required();
    gen->add_option("--multi-interval", gen_args.params.multi_interval)->check(CLI::Range(0.0, 1.0));
    gen->add_flag("--directed", gen_args.params.directed);
    gen->add_option("--output", gen_args.output);

    OracleArgs oracle_args;
    auto* orc = app.add_subcommand("oracle", "run a brute-force baseline");
    orc->require_subcommand(1);
    auto* orc_conn = orc->add_subcommand("connected", "window-by-window subset exhaustion");
    orc_conn->add_option("file", oracle_args.file)->required();
    orc_conn->add_option("--kind", oracle_args.kind)->check(CLI::IsMember({"weak", "strong", "2edge", "2vertex"}));
    orc_conn->add_option("--output", oracle_args.output);
    auto* orc_cliq = orc->add_subcommand("cliques", "vertex-subset exhaustion or per-window maximal cliques");
    orc_cliq->add_option("file", oracle_args.file)->required();
    orc_cliq->add_option("--method", oracle_args.method)->check(CLI::IsMember({"brute", "simple"}));
    orc_cliq->add_option("--output", oracle_args.output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mine_conn->parsed()) return mine_connected(mine_args, out);
        if (mine_cliq->parsed()) return mine_cliques(mine_args, out);
        if (check->parsed()) return run_check(check_args, out);
        if (gen->parsed()) return run_gen(gen_args, out);
        if (orc_conn->parsed()) return oracle_connected(oracle_args, out);
        if (orc_cliq->parsed()) return oracle_cliques(oracle_args, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace chronomine::cli
