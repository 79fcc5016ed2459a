#include "chronomine/generator.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "chronomine/errors.hpp"

namespace chronomine {

std::int64_t PortableRng::uniform(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<std::int64_t>(x % range);
}

double PortableRng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

Interval draw_interval(PortableRng& rng, TimeStamp lo, TimeStamp hi) {
    auto a = static_cast<TimeStamp>(rng.uniform(lo, hi));
    auto b = static_cast<TimeStamp>(rng.uniform(lo, hi));
    if (a > b) std::swap(a, b);
    return {a, b};
}

}  // namespace

std::string generate_edge_list(const GenParams& p) {
    if (p.vertices < 1) throw UsageError("--vertices must be positive");
    if (p.t_max < 1) throw UsageError("--tmax must be positive");
    if (p.multi_interval < 0.0 || p.multi_interval > 1.0) throw UsageError("--multi-interval must be in [0, 1]");
    const auto n = static_cast<std::size_t>(p.vertices);
    const std::size_t available = p.directed ? n * (n - 1) : n * (n - 1) / 2;
    if (p.pairs > available) {
        throw UsageError("cannot place " + std::to_string(p.pairs) + " distinct pairs on " + std::to_string(n) +
                         " vertices (max " + std::to_string(available) + ")");
    }

    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex u = 1; u <= p.vertices; ++u) {
        for (Vertex v = p.directed ? 1 : u + 1; v <= p.vertices; ++v) {
            if (u != v) all.emplace_back(u, v);
        }
    }
    PortableRng rng(p.seed);
    for (std::size_t i = 0; i < p.pairs; ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i),
                                                            static_cast<std::int64_t>(all.size() - 1)));
        std::swap(all[i], all[j]);
    }
    all.resize(p.pairs);
    std::sort(all.begin(), all.end());

    std::ostringstream os;
    if (p.directed) os << "# directed\n";
    os << "# vertices " << p.vertices << "\n# tmax " << p.t_max << "\n";
    for (auto [u, v] : all) {
        if (p.t_max >= 3 && rng.unit() < p.multi_interval) {
            const auto cut = static_cast<TimeStamp>(rng.uniform(2, p.t_max - 1));
            const Interval a = draw_interval(rng, 1, cut - 1);
            const Interval b = draw_interval(rng, cut + 1, p.t_max);
            os << u << ' ' << v << ' ' << a.start << ' ' << a.end << '\n';
            os << u << ' ' << v << ' ' << b.start << ' ' << b.end << '\n';
        } else {
            const Interval a = draw_interval(rng, 1, p.t_max);
            os << u << ' ' << v << ' ' << a.start << ' ' << a.end << '\n';
        }
    }
    return os.str();
}

TemporalGraph generate_graph(const GenParams& params) { return TemporalGraph::parse(generate_edge_list(params)); }

GenParams random_family_params(std::uint64_t seed, Vertex max_n, std::size_t max_pairs, TimeStamp max_tmax,
                               double multi_interval, bool directed) {
    PortableRng rng(seed ^ 0xC0FFEE1234ULL);
    GenParams p;
    p.seed = seed;
    p.directed = directed;
    p.multi_interval = multi_interval;
    p.vertices = static_cast<Vertex>(rng.uniform(2, max_n));
    const auto n = static_cast<std::size_t>(p.vertices);
    const std::size_t cap = std::min(max_pairs, directed ? n * (n - 1) : n * (n - 1) / 2);
    p.pairs = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(cap)));
    p.t_max = static_cast<TimeStamp>(rng.uniform(1, max_tmax));
    return p;
}

}  // namespace chronomine
