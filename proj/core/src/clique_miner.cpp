#include "chronomine/clique_miner.hpp"

#include <algorithm>
#include <map>

#include "chronomine/errors.hpp"

namespace chronomine {

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

void intersect_into(std::vector<Vertex>& acc, const std::vector<Vertex>& other) {
    std::vector<Vertex> out;
    out.reserve(std::min(acc.size(), other.size()));
    std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(out));
    acc.swap(out);
}

}  // namespace

CliqueEnumerator::CliqueEnumerator(const TemporalGraph& g) : g_(&g) {
    if (g.directed()) throw UsageError("clique mining requires an undirected graph");
    const Interval full = g.ground().full();
    root_.tau = full;
    for (const EdgeRecord& e : g.edges()) {
        // ids follow (u, v, start), so the first spanning edge is the smallest
        if (e.interval.contains(full)) {
            root_ = closure_unchecked({e.id}, {e.u, e.v}, full);
            break;
        }
    }
}

CliqueState CliqueEnumerator::closure_unchecked(std::vector<EdgeId> edges, std::vector<Vertex> vertices,
                                                Interval tau) const {
    const TemporalGraph& g = *g_;
    const TimeWindow window(tau);
    std::vector<Vertex> candidates = neighbors_at(g, vertices.front(), window);
    for (std::size_t i = 1; i < vertices.size() && !candidates.empty(); ++i) {
        intersect_into(candidates, neighbors_at(g, vertices[i], window));
    }
    while (!candidates.empty()) {
        const Vertex w = candidates.front();
        for (const Incidence& inc : g.adjacency(w)) {
            if (contains(vertices, inc.neighbor) && g.edge(inc.edge).interval.contains(tau)) {
                edges.push_back(inc.edge);
            }
        }
        vertices.insert(std::upper_bound(vertices.begin(), vertices.end(), w), w);
        intersect_into(candidates, neighbors_at(g, w, window));
    }
    std::sort(edges.begin(), edges.end());
    return CliqueState{std::move(edges), tau, std::move(vertices)};
}

CliqueState CliqueEnumerator::closure(const CliqueState& k) const {
    if (k.empty()) return root_;
    if (!k.active()) throw UsageError("closure of an inactive edge set");
    if (!is_clique(*g_, k)) throw UsageError("closure of an edge set that is not a clique");
    return closure_unchecked(k.edges, k.vertices, *k.tau);
}

Vertex CliqueEnumerator::index_unchecked(const CliqueState& k) const {
    const TemporalGraph& g = *g_;
    const Interval tau = *k.tau;
    const auto& vs = k.vertices;
    const std::size_t m = vs.size();

    // tau of K restricted to the first s+1 vertices
    std::vector<std::optional<Interval>> prefix_tau(m, g.ground().full());
    for (EdgeId id : k.edges) {
        const EdgeRecord& e = g.edge(id);
        const auto pos = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin());
        prefix_tau[pos] = intersect(prefix_tau[pos], e.interval);
    }
    Vertex lowest_full_tau = vs.back();
    std::optional<Interval> running = g.ground().full();
    for (std::size_t s = 1; s < m; ++s) {
        if (prefix_tau[s]) running = intersect(running, *prefix_tau[s]);
        if (running && *running == tau) {
            lowest_full_tau = vs[s];
            break;
        }
    }

    // the greedy closure from K_{<=j} must add exactly the remaining vertices
    const TimeWindow window(tau);
    std::vector<Vertex> common = neighbors_at(g, vs[0], window);
    std::size_t last_bad = 1;
    for (std::size_t r = 1; r < m; ++r) {
        if (r >= 2 && common.front() != vs[r]) last_bad = r;
        intersect_into(common, neighbors_at(g, vs[r], window));
    }
    return std::max(lowest_full_tau, vs[last_bad]);
}

Vertex CliqueEnumerator::index_of(const CliqueState& k) const {
    if (is_root(k)) throw UsageError("the root clique has no index or parent");
    if (k.empty() || !k.active() || !is_clique(*g_, k)) throw UsageError("index requires an active clique");
    if (!common_neighbors(*g_, k).empty()) throw UsageError("index requires a closed clique");
    return index_unchecked(k);
}

CliqueState CliqueEnumerator::parent_unchecked(const CliqueState& k, Vertex index) const {
    const CliqueState prefix = restrict_to_prefix(*g_, k, index - 1);
    if (prefix.empty()) return root_;
    return closure_unchecked(prefix.edges, prefix.vertices, *prefix.tau);
}

CliqueState CliqueEnumerator::parent(const CliqueState& k) const {
    return parent_unchecked(k, index_of(k));
}

std::vector<TimeMaximalSubset> CliqueEnumerator::maximal_subsets(Vertex v, const std::vector<EdgeId>& bundle,
                                                                 Interval tau) const {
    const TemporalGraph& g = *g_;
    // under the interval assumption every window is fixed by at most two edges
    std::map<Interval, std::vector<EdgeId>> by_window;
    for (std::size_t a = 0; a < bundle.size(); ++a) {
        for (std::size_t b = a; b < bundle.size(); ++b) {
            const auto w = intersect(intersect(tau, g.edge(bundle[a]).interval), g.edge(bundle[b]).interval);
            if (!w) continue;
            std::vector<EdgeId> f;
            std::optional<Interval> exact = tau;
            for (EdgeId e : bundle) {
                if (g.edge(e).interval.contains(*w)) {
                    f.push_back(e);
                    exact = intersect(exact, g.edge(e).interval);
                }
            }
            by_window.try_emplace(*exact, std::move(f));
        }
    }
    std::vector<TimeMaximalSubset> out;
    out.reserve(by_window.size());
    for (auto& [window, edges] : by_window) out.push_back({v, std::move(edges), window});
    return out;
}

std::vector<TimeMaximalSubset> CliqueEnumerator::time_maximal_subsets(const CliqueState& k, Vertex v) const {
    if (!k.active()) throw UsageError("time_maximal_subsets requires an active clique");
    return maximal_subsets(v, incident_bundle(*g_, k, v), *k.tau);
}

std::vector<EdgeId> CliqueEnumerator::lower_bundle(const CliqueState& k, Vertex v) const {
    std::vector<EdgeId> out;
    for (const Incidence& inc : g_->adjacency(v)) {
        if (inc.neighbor >= v) break;
        if (contains(k.vertices, inc.neighbor)) out.push_back(inc.edge);
    }
    return out;
}

CliqueState CliqueEnumerator::child_candidate(const CliqueState& k, const TimeMaximalSubset& f) const {
    const TemporalGraph& g = *g_;
    std::vector<Vertex> span{f.v};
    for (EdgeId id : f.edges) {
        const EdgeRecord& e = g.edge(id);
        span.push_back(e.u == f.v ? e.v : e.u);
    }
    std::sort(span.begin(), span.end());
    std::vector<EdgeId> seed = f.edges;
    for (EdgeId id : k.edges) {
        const EdgeRecord& e = g.edge(id);
        if (e.u <= f.v && e.v <= f.v && contains(span, e.u) && contains(span, e.v)) seed.push_back(id);
    }
    CliqueState s = make_clique(g, std::move(seed));
    if (!s.active() || !is_clique(g, s)) {
        s.tau.reset();
        return s;
    }
    return closure_unchecked(s.edges, s.vertices, *s.tau);
}

std::optional<CliqueState> CliqueEnumerator::sweep_child(EdgeId e, TimeStamp sigma) const {
    const EdgeRecord& rec = g_->edge(e);
    if (rec.interval.length() < sigma) return std::nullopt;
    CliqueState c = closure_unchecked({e}, {rec.u, rec.v}, rec.interval);
    if (c.edges.front() != e || is_root(c)) return std::nullopt;
    return c;
}

std::optional<CliqueState> CliqueEnumerator::next_child(const CliqueState& k, Vertex index, bool at_root,
                                                        TimeStamp sigma, Cursor& cursor) const {
    const TemporalGraph& g = *g_;
    if (!cursor.sweeping) {
        for (Vertex v = std::max(cursor.v, static_cast<Vertex>(index + 1)); v <= g.vertex_count(); ++v) {
            if (contains(k.vertices, v)) continue;
            const std::vector<EdgeId> bundle = lower_bundle(k, v);
            // one lower neighbor means the child's prefix is a single edge: a sweep child
            if (bundle.size() < 2) continue;
            for (const TimeMaximalSubset& f : maximal_subsets(v, bundle, *k.tau)) {
                if (v == cursor.v && f.window <= cursor.window) continue;
                if (f.edges.size() < 2) continue;
                // a real child has tau equal to this window
                if (f.window.length() < sigma) continue;
                CliqueState c = child_candidate(k, f);
                if (!c.active()) continue;
                std::vector<EdgeId> to_lower;
                for (EdgeId id : c.edges) {
                    if (g.edge(id).v == v) to_lower.push_back(id);
                }
                if (to_lower != f.edges) continue;
                if (index_unchecked(c) != v) continue;
                if (parent_unchecked(c, v) != k) continue;
                cursor.v = v;
                cursor.window = f.window;
                return c;
            }
        }
        if (!at_root) return std::nullopt;
        cursor.sweeping = true;
        cursor.edge = -1;
    }
    for (EdgeId e = cursor.edge + 1; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        if (auto c = sweep_child(e, sigma)) {
            cursor.edge = e;
            return c;
        }
    }
    cursor.edge = static_cast<EdgeId>(g.edge_count());
    return std::nullopt;
}

std::vector<CliqueState> CliqueEnumerator::children(const CliqueState& k, TimeStamp sigma) const {
    if (!k.active()) throw UsageError("children requires an active clique");
    const Vertex index = is_root(k) ? 0 : index_of(k);
    std::vector<CliqueState> out;
    Cursor cursor;
    while (auto c = next_child(k, index, false, sigma, cursor)) out.push_back(std::move(*c));
    return out;
}

RunStats CliqueEnumerator::enumerate(const MinerConfig& config, const CliqueSink& sink) const {
    if (config.sigma < 0) throw UsageError("sigma must be non-negative");
    return config.memory == MemoryMode::stack ? enumerate_stack(config, sink) : enumerate_restart(config, sink);
}

RunStats CliqueEnumerator::enumerate_stack(const MinerConfig& config, const CliqueSink& sink) const {
    RunStats stats;
    DelayClock clock(stats, config.record_delays);
    auto emit = [&](const CliqueState& c) {
        sink(c);
        clock.tick();
    };
    if (!root_.empty() && root_.duration() >= config.sigma) emit(root_);

    // one retained clique, its index and a resume cursor per level
    struct Frame {
        CliqueState k;
        Vertex index = 0;
        Cursor cursor;
    };
    std::vector<Frame> path;
    path.push_back(Frame{root_, 0, {}});
    stats.peak_tracked_state = 1;
    while (!path.empty()) {
        Frame& top = path.back();
        auto c = next_child(top.k, top.index, path.size() == 1, config.sigma, top.cursor);
        if (!c) {
            path.pop_back();
            continue;
        }
        emit(*c);
        const Vertex index = index_unchecked(*c);
        path.push_back(Frame{std::move(*c), index, {}});
        stats.max_depth = std::max(stats.max_depth, path.size() - 1);
        stats.peak_tracked_state = std::max(stats.peak_tracked_state, path.size());
    }
    clock.finish();
    return stats;
}

RunStats CliqueEnumerator::enumerate_restart(const MinerConfig& config, const CliqueSink& sink) const {
    RunStats stats;
    DelayClock clock(stats, config.record_delays);
    if (!root_.empty() && root_.duration() >= config.sigma) {
        sink(root_);
        clock.tick();
    }

    // retained state: the current clique, its index and one cursor per level
    std::vector<Cursor> cursors(1);
    CliqueState current = root_;
    Vertex index = 0;
    stats.peak_tracked_state = cursors.size() + 1;
    while (!cursors.empty()) {
        const bool at_root = cursors.size() == 1;
        if (auto c = next_child(current, index, at_root, config.sigma, cursors.back())) {
            current = std::move(*c);
            sink(current);
            clock.tick();
            index = index_unchecked(current);
            cursors.emplace_back();
            stats.max_depth = std::max(stats.max_depth, cursors.size() - 1);
            stats.peak_tracked_state = std::max(stats.peak_tracked_state, cursors.size() + 1);
            continue;
        }
        cursors.pop_back();
        if (cursors.empty()) break;
        if (cursors.size() == 1) {
            current = root_;
            index = 0;
        } else {
            current = parent_unchecked(current, index);
            index = index_unchecked(current);
        }
    }
    clock.finish();
    return stats;
}

CliqueState closure_X(const TemporalGraph& g, const CliqueState& k) { return CliqueEnumerator(g).closure(k); }

Vertex index_i(const TemporalGraph& g, const CliqueState& k) { return CliqueEnumerator(g).index_of(k); }

CliqueState parent_P(const TemporalGraph& g, const CliqueState& k) { return CliqueEnumerator(g).parent(k); }

std::vector<TimeMaximalSubset> time_maximal_subsets(const TemporalGraph& g, const CliqueState& k, Vertex v) {
    return CliqueEnumerator(g).time_maximal_subsets(k, v);
}

CliqueState child_candidate(const TemporalGraph& g, const CliqueState& k, const TimeMaximalSubset& f) {
    return CliqueEnumerator(g).child_candidate(k, f);
}

std::vector<CliqueState> enum_children(const TemporalGraph& g, const CliqueState& k, const MinerConfig& config) {
    return CliqueEnumerator(g).children(k, config.sigma);
}

RunStats enumerate_closed_active_cliques(const TemporalGraph& g, const MinerConfig& config, const CliqueSink& sink) {
    return CliqueEnumerator(g).enumerate(config, sink);
}

std::vector<CliqueState> enumerate_closed_active_cliques(const TemporalGraph& g, const MinerConfig& config) {
    std::vector<CliqueState> out;
    enumerate_closed_active_cliques(g, config, [&](const CliqueState& c) { out.push_back(c); });
    return out;
}

}  // namespace chronomine
