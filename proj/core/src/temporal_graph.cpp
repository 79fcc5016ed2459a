#include "chronomine/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "chronomine/errors.hpp"

namespace chronomine {

bool lex_less(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) noexcept {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    if (i == a.size() && i == b.size()) return false;
    if (i == a.size()) return false;  // b has the extra (smallest differing) element
    if (i == b.size()) return true;
    return a[i] < b[i];
}

TemporalGraph TemporalGraph::build(Vertex n, std::span<const EdgeSpec> edges, std::optional<TimeStamp> t_max,
                                   bool directed, std::vector<Vertex> labels) {
    if (n < 0) throw UsageError("negative vertex count");
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) {
        throw UsageError("label table size does not match vertex count");
    }

    TimeStamp observed_end = 1;
    for (const EdgeSpec& e : edges) {
        if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) throw UsageError("edge endpoint outside 1..n");
        if (e.u == e.v) throw UsageError("self-loop on vertex " + std::to_string(e.u));
        if (e.interval.start < 1 || e.interval.end < e.interval.start) throw UsageError("invalid edge interval");
        observed_end = std::max(observed_end, e.interval.end);
    }

    TemporalGraph g;
    g.n_ = n;
    g.directed_ = directed;
    g.ground_ = GroundTimeSet{t_max.value_or(observed_end)};
    if (g.ground_.t_max < 1) throw UsageError("t_max must be positive");
    if (g.ground_.t_max < observed_end) {
        throw ParseError(0, "edge interval ends at " + std::to_string(observed_end) + " beyond tmax " +
                                std::to_string(g.ground_.t_max));
    }

    // identity labels are stored as an empty table
    bool identity = true;
    for (std::size_t i = 0; i < labels.size(); ++i) identity = identity && labels[i] == static_cast<Vertex>(i + 1);
    if (!identity) g.labels_ = std::move(labels);

    std::map<std::pair<Vertex, Vertex>, std::vector<Interval>> by_pair;
    for (const EdgeSpec& e : edges) {
        Vertex u = e.u, v = e.v;
        if (!directed && u > v) std::swap(u, v);
        by_pair[{u, v}].push_back(e.interval);
    }

    for (auto& [pair, intervals] : by_pair) {
        for (const auto& [ends, interval] :
             normalize_multi_interval({pair.first, pair.second}, std::move(intervals), g.ground_)) {
            g.edges_.push_back(EdgeRecord{0, ends.u, ends.v, interval});
        }
    }
    // std::map iteration already yields (u, v) order and merged intervals are sorted
    for (std::size_t i = 0; i < g.edges_.size(); ++i) g.edges_[i].id = static_cast<EdgeId>(i);

    g.adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const EdgeRecord& e : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.id});
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.id});
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end(), [&g](const Incidence& a, const Incidence& b) {
            if (a.neighbor != b.neighbor) return a.neighbor < b.neighbor;
            const auto& ia = g.edges_[static_cast<std::size_t>(a.edge)].interval;
            const auto& ib = g.edges_[static_cast<std::size_t>(b.edge)].interval;
            if (ia.start != ib.start) return ia.start < ib.start;
            return a.edge < b.edge;
        });
        g.max_degree_ = std::max(g.max_degree_, list.size());
    }

    for (const EdgeRecord& e : g.edges_) {
        g.event_times_.push_back(e.interval.start);
        g.event_times_.push_back(e.interval.end);
    }
    std::sort(g.event_times_.begin(), g.event_times_.end());
    g.event_times_.erase(std::unique(g.event_times_.begin(), g.event_times_.end()), g.event_times_.end());

    // G_t can only change where some edge starts, or just after one ends
    std::vector<TimeStamp> boundaries{1};
    for (const EdgeRecord& e : g.edges_) {
        boundaries.push_back(e.interval.start);
        if (e.interval.end < g.ground_.t_max) boundaries.push_back(e.interval.end + 1);
    }
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
    for (std::size_t i = 0; i < boundaries.size(); ++i) {
        const TimeStamp end = i + 1 < boundaries.size() ? boundaries[i + 1] - 1 : g.ground_.t_max;
        g.segments_.push_back({boundaries[i], end});
    }
    return g;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "expected integer, got '" + std::string(token) + "'");
    }
    if (value > std::numeric_limits<std::int32_t>::max() || value < std::numeric_limits<std::int32_t>::min()) {
        throw ParseError(line_no, "integer out of range: " + std::string(token));
    }
    return value;
}

}  // namespace

TemporalGraph TemporalGraph::parse(std::string_view text) {
    struct RawLine {
        std::size_t line_no;
        Vertex u, v;
        Interval interval;
    };
    std::vector<RawLine> raw;
    std::optional<TimeStamp> t_max;
    std::optional<Vertex> declared_n;
    bool directed = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.front().front() == '#') {
            // "#tmax 5" and "# tmax 5" are both accepted
            if (tokens.front().size() > 1) {
                tokens.front().remove_prefix(1);
            } else {
                tokens.erase(tokens.begin());
            }
            if (tokens.empty()) continue;
            if (tokens[0] == "tmax") {
                if (tokens.size() != 2) throw ParseError(line_no, "expected '# tmax T'");
                const auto value = parse_int(tokens[1], line_no);
                if (value < 1) throw ParseError(line_no, "tmax must be >= 1");
                t_max = static_cast<TimeStamp>(value);
            } else if (tokens[0] == "vertices") {
                if (tokens.size() != 2) throw ParseError(line_no, "expected '# vertices N'");
                const auto value = parse_int(tokens[1], line_no);
                if (value < 0) throw ParseError(line_no, "vertex count must be >= 0");
                declared_n = static_cast<Vertex>(value);
            } else if (tokens[0] == "directed") {
                if (tokens.size() != 1) throw ParseError(line_no, "expected '# directed'");
                directed = true;
            }
            continue;
        }
        if (tokens.size() != 4) throw ParseError(line_no, "expected 'u v s e'");
        const auto u = parse_int(tokens[0], line_no);
        const auto v = parse_int(tokens[1], line_no);
        const auto s = parse_int(tokens[2], line_no);
        const auto e = parse_int(tokens[3], line_no);
        if (u < 1 || v < 1) throw ParseError(line_no, "vertices must be positive integers");
        if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
        if (s < 1) throw ParseError(line_no, "time stamps start at 1");
        if (s > e) throw ParseError(line_no, "interval start " + std::to_string(s) + " exceeds end " + std::to_string(e));
        raw.push_back({line_no, static_cast<Vertex>(u), static_cast<Vertex>(v),
                       Interval{static_cast<TimeStamp>(s), static_cast<TimeStamp>(e)}});
    }

    for (const RawLine& r : raw) {
        if (t_max && r.interval.end > *t_max) {
            throw ParseError(r.line_no, "interval ends after tmax " + std::to_string(*t_max));
        }
        if (declared_n && (r.u > *declared_n || r.v > *declared_n)) {
            throw ParseError(r.line_no, "vertex exceeds declared count " + std::to_string(*declared_n));
        }
    }

    std::vector<EdgeSpec> specs;
    specs.reserve(raw.size());
    if (declared_n) {
        for (const RawLine& r : raw) specs.push_back({r.u, r.v, r.interval});
        return build(*declared_n, specs, t_max, directed);
    }

    std::unordered_map<Vertex, Vertex> index;
    std::vector<Vertex> labels;
    auto compact = [&](Vertex label) {
        auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(labels.size() + 1));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    for (const RawLine& r : raw) {
        const Vertex u = compact(r.u);
        const Vertex v = compact(r.v);
        specs.push_back({u, v, r.interval});
    }
    const auto n = static_cast<Vertex>(labels.size());
    return build(n, specs, t_max, directed, std::move(labels));
}

TemporalGraph TemporalGraph::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void TemporalGraph::write_edge_list(std::ostream& os) const {
    if (labels_.empty()) os << "# vertices " << n_ << '\n';
    os << "# tmax " << ground_.t_max << '\n';
    if (directed_) os << "# directed\n";
    for (const EdgeRecord& e : edges_) {
        os << label(e.u) << ' ' << label(e.v) << ' ' << e.interval.start << ' ' << e.interval.end << '\n';
    }
}

bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    if (a.n_ != b.n_ || a.directed_ != b.directed_ || a.ground_ != b.ground_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.interval != y.interval) return false;
    }
    for (Vertex v = 1; v <= a.n_; ++v) {
        if (a.label(v) != b.label(v)) return false;
    }
    return true;
}

std::vector<EdgeId> closure_edges(const TemporalGraph& g, const TimeWindow& w) {
    std::vector<EdgeId> out;
    for (const EdgeRecord& e : g.edges()) {
        if (w.covered_by(e.interval)) out.push_back(e.id);
    }
    return out;
}

std::vector<Vertex> neighbors_at(const TemporalGraph& g, Vertex v, const TimeWindow& w) {
    std::vector<Vertex> out;
    for (const Incidence& inc : g.adjacency(v)) {
        if (!w.covered_by(g.edge(inc.edge).interval)) continue;
        if (out.empty() || out.back() != inc.neighbor) out.push_back(inc.neighbor);
    }
    return out;
}

CliqueState make_clique(const TemporalGraph& g, std::vector<EdgeId> edges) {
    CliqueState k;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    k.tau = g.ground().full();
    for (EdgeId id : edges) {
        const EdgeRecord& e = g.edge(id);
        k.vertices.push_back(e.u);
        k.vertices.push_back(e.v);
        k.tau = intersect(k.tau, e.interval);
    }
    std::sort(k.vertices.begin(), k.vertices.end());
    k.vertices.erase(std::unique(k.vertices.begin(), k.vertices.end()), k.vertices.end());
    k.edges = std::move(edges);
    return k;
}

bool is_clique(const TemporalGraph& g, const CliqueState& k) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (EdgeId id : k.edges) {
        const EdgeRecord& e = g.edge(id);
        pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    const std::size_t m = k.vertices.size();
    return pairs.size() == m * (m - 1) / 2;
}

CliqueState restrict_to_prefix(const TemporalGraph& g, const CliqueState& k, Vertex i) {
    std::vector<EdgeId> kept;
    for (EdgeId id : k.edges) {
        const EdgeRecord& e = g.edge(id);
        if (e.u <= i && e.v <= i) kept.push_back(id);
    }
    return make_clique(g, std::move(kept));
}

std::vector<Vertex> common_neighbors(const TemporalGraph& g, const CliqueState& k) {
    if (k.empty()) throw UsageError("common_neighbors requires a nonempty clique");
    if (!k.active()) throw UsageError("common_neighbors requires an active clique");
    const TimeWindow window(*k.tau);
    // x is never its own neighbor, so the intersection excludes V(K)
    std::vector<Vertex> acc = neighbors_at(g, k.vertices.front(), window);
    std::vector<Vertex> next;
    for (std::size_t i = 1; i < k.vertices.size() && !acc.empty(); ++i) {
        const auto nbrs = neighbors_at(g, k.vertices[i], window);
        next.clear();
        std::set_intersection(acc.begin(), acc.end(), nbrs.begin(), nbrs.end(), std::back_inserter(next));
        acc.swap(next);
    }
    return acc;
}

std::vector<EdgeId> incident_bundle(const TemporalGraph& g, const CliqueState& k, Vertex v) {
    if (std::binary_search(k.vertices.begin(), k.vertices.end(), v)) {
        throw UsageError("incident_bundle requires v outside V(K)");
    }
    std::vector<EdgeId> out;
    for (const Incidence& inc : g.adjacency(v)) {
        if (std::binary_search(k.vertices.begin(), k.vertices.end(), inc.neighbor)) out.push_back(inc.edge);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace chronomine
