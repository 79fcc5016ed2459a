#include "chronomine/connected_miner.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "chronomine/errors.hpp"
#include "hashing.hpp"
#include "snapshot.hpp"

namespace chronomine {

std::string_view to_string(ConnectivityKind kind) noexcept {
    switch (kind) {
        case ConnectivityKind::weak: return "weak";
        case ConnectivityKind::strong: return "strong";
        case ConnectivityKind::two_edge: return "2edge";
        case ConnectivityKind::two_vertex: return "2vertex";
    }
    return "?";
}

std::optional<ConnectivityKind> parse_connectivity_kind(std::string_view name) noexcept {
    if (name == "weak") return ConnectivityKind::weak;
    if (name == "strong") return ConnectivityKind::strong;
    if (name == "2edge" || name == "two_edge") return ConnectivityKind::two_edge;
    if (name == "2vertex" || name == "two_vertex") return ConnectivityKind::two_vertex;
    return std::nullopt;
}

ComponentPartition meet(const ComponentPartition& a, const ComponentPartition& b) {
    ComponentPartition out;
    for (const auto& x : a.members) {
        for (const auto& y : b.members) {
            VertexSet common;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
            if (!common.empty()) out.members.push_back(std::move(common));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

bool accepts(const ConnectedOptions& options, const ConnectedRecord& record) {
    const std::size_t size = record.vertices.size();
    const bool size_ok = size == 1 ? options.include_singletons : size >= options.min_size;
    if (!size_ok) return false;
    TimeStamp longest = 0;
    for (const Interval& i : record.gamma) longest = std::max(longest, i.length());
    return longest >= options.min_duration;
}

namespace {

VertexSet sorted_unique(std::span<const Vertex> w) {
    VertexSet out(w.begin(), w.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet all_vertices(const TemporalGraph& g) {
    VertexSet out(static_cast<std::size_t>(g.vertex_count()));
    std::iota(out.begin(), out.end(), 1);
    return out;
}

// One stamp per snapshot class met by [window.start, window.end].
std::vector<TimeStamp> snapshot_times(const TemporalGraph& g, Interval window) {
    const auto segs = g.segments();
    auto it = std::lower_bound(segs.begin(), segs.end(), window.start,
                               [](const Interval& s, TimeStamp t) { return s.end < t; });
    std::vector<TimeStamp> out;
    for (; it != segs.end() && it->start <= window.end; ++it) out.push_back(std::max(it->start, window.start));
    return out;
}

std::vector<VertexSet> initial_members(const TemporalGraph& g, const VertexSet& universe, TimeStamp t,
                                       ConnectivityKind kind) {
    return detail::groups_at(g, universe, t, kind);
}

// Members for `window` from members valid on [window.start, window.end - 1]
// (or any coarser family): every block is re-checked on the whole window.
std::vector<VertexSet> refine_members(const TemporalGraph& g, const std::vector<VertexSet>& prev, Interval window,
                                      ConnectivityKind kind) {
    const TimeStamp fresh = window.end;
    std::vector<TimeStamp> checks;  // lazily computed
    std::vector<VertexSet> out;
    std::vector<VertexSet> worklist;
    for (const VertexSet& u : prev) {
        if (u.size() == 1 || detail::connected_at(g, u, fresh, kind)) {
            out.push_back(u);
            continue;
        }
        if (checks.empty()) checks = snapshot_times(g, window);
        worklist = detail::groups_at(g, u, fresh, kind);
        while (!worklist.empty()) {
            VertexSet block = std::move(worklist.back());
            worklist.pop_back();
            if (block.size() == 1) {
                out.push_back(std::move(block));
                continue;
            }
            auto broken = std::find_if(checks.begin(), checks.end(),
                                       [&](TimeStamp t) { return !detail::connected_at(g, block, t, kind); });
            if (broken == checks.end()) {
                out.push_back(std::move(block));
            } else {
                auto parts = detail::groups_at(g, block, *broken, kind);
                for (auto& p : parts) worklist.push_back(std::move(p));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool settled(const std::vector<VertexSet>& members) {
    return std::all_of(members.begin(), members.end(), [](const VertexSet& u) { return u.size() <= 1; });
}

// Candidate emissions for one starting segment, in (length, vertex set) order.
struct Candidate {
    Interval window;
    VertexSet vertices;
};

bool wanted_size(const ConnectedOptions& options, std::size_t size) {
    return size == 1 ? options.include_singletons : size >= options.min_size;
}

std::vector<Candidate> candidates_from(const TemporalGraph& g, const VertexSet& universe, std::size_t segment,
                                       ConnectivityKind kind, const ConnectedOptions& options) {
    const auto segs = g.segments();
    const TimeStamp start = segs[segment].start;
    std::vector<Candidate> out;
    std::unordered_set<VertexSet, detail::VectorHash> local_seen;

    auto collect = [&](const std::vector<VertexSet>& members, Interval window) {
        std::vector<VertexSet> listed;
        for (const VertexSet& u : members) {
            if (wanted_size(options, u.size())) listed.push_back(u);
        }
        if (kind == ConnectivityKind::two_vertex && options.include_singletons) {
            // vertices outside every block form singleton members
            std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
            for (const VertexSet& u : members) {
                for (Vertex x : u) covered[static_cast<std::size_t>(x)] = 1;
            }
            for (Vertex x : universe) {
                if (!covered[static_cast<std::size_t>(x)]) listed.push_back({x});
            }
            std::sort(listed.begin(), listed.end());
        }
        for (VertexSet& u : listed) {
            if (local_seen.insert(u).second) out.push_back({window, std::move(u)});
        }
    };

    std::vector<VertexSet> members = initial_members(g, universe, start, kind);
    collect(members, {start, start});
    for (std::size_t k = segment + 1; k < segs.size(); ++k) {
        // refinement cannot change an all-singleton partition or an empty block family
        if (kind == ConnectivityKind::two_vertex ? members.empty() : settled(members)) break;
        const Interval window{start, segs[k].start};
        members = refine_members(g, members, window, kind);
        collect(members, window);
    }
    return out;
}

}  // namespace

ComponentPartition components_at(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t,
                                 ConnectivityKind kind) {
    detail::require_kind_matches(g, kind);
    if (kind == ConnectivityKind::two_vertex) {
        throw UsageError("two-vertex blocks overlap; use pairset_components");
    }
    return ComponentPartition{detail::groups_at(g, sorted_unique(w), t, kind)};
}

std::vector<PairBlock> pairset_components(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t) {
    detail::require_kind_matches(g, ConnectivityKind::two_vertex);
    std::vector<PairBlock> out;
    for (auto& block : detail::groups_at(g, sorted_unique(w), t, ConnectivityKind::two_vertex)) {
        PairBlock b;
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) b.pairs.emplace_back(block[i], block[j]);
        }
        b.vertices = std::move(block);
        out.push_back(std::move(b));
    }
    return out;
}

ComponentPartition refine_window(const TemporalGraph& g, const ComponentPartition& prev, TimeStamp t,
                                 TimeStamp offset, ConnectivityKind kind) {
    detail::require_kind_matches(g, kind);
    if (offset < 1 || t < 1 || t + offset > g.ground().t_max) throw UsageError("refine_window: window outside ground set");
    return ComponentPartition{refine_members(g, prev.members, {t, t + offset}, kind)};
}

ComponentPartition window_members(const TemporalGraph& g, TimeStamp t, TimeStamp offset, ConnectivityKind kind) {
    detail::require_kind_matches(g, kind);
    if (offset < 0 || t < 1 || t + offset > g.ground().t_max) throw UsageError("window_members: window outside ground set");
    std::vector<VertexSet> members = initial_members(g, all_vertices(g), t, kind);
    for (TimeStamp next : snapshot_times(g, {t, t + offset})) {
        if (next == t) continue;
        members = refine_members(g, members, {t, next}, kind);
    }
    return ComponentPartition{std::move(members)};
}

std::vector<Interval> gamma_of(const TemporalGraph& g, std::span<const Vertex> u, ConnectivityKind kind) {
    if (u.empty()) throw UsageError("gamma_of requires a nonempty vertex set");
    detail::require_kind_matches(g, kind);
    const VertexSet set = sorted_unique(u);
    if (set.size() == 1) return {g.ground().full()};
    std::vector<Interval> out;
    for (const Interval& seg : g.segments()) {
        if (!detail::connected_at(g, set, seg.start, kind)) continue;
        if (!out.empty() && out.back().end + 1 == seg.start) {
            out.back().end = seg.end;
        } else {
            out.push_back(seg);
        }
    }
    return out;
}

RunStats enumerate_closed_connected(const TemporalGraph& g, ConnectivityKind kind, const ConnectedOptions& options,
                                    const ConnectedSink& sink) {
    detail::require_kind_matches(g, kind);
    RunStats stats;
    DelayClock clock(stats, false);
    const VertexSet universe = all_vertices(g);
    const std::size_t segment_count = g.segments().size();

    std::unordered_set<VertexSet, detail::VectorHash> seen;
    auto emit_batch = [&](std::vector<Candidate>& batch) {
        for (Candidate& c : batch) {
            if (!seen.insert(c.vertices).second) continue;
            ConnectedRecord record;
            record.gamma = gamma_of(g, c.vertices, kind);
            record.vertices = std::move(c.vertices);
            record.witness_window = c.window;
            if (!accepts(options, record)) continue;
            sink(record);
            clock.tick();
        }
        stats.peak_tracked_state = std::max(stats.peak_tracked_state, seen.size());
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || segment_count < 2) {
        for (std::size_t s = 0; s < segment_count; ++s) {
            auto batch = candidates_from(g, universe, s, kind, options);
            emit_batch(batch);
        }
    } else {
        // workers fill per-start slots; emission stays in start order
        std::vector<std::vector<Candidate>> slots(segment_count);
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(threads, segment_count); ++i) {
            pool.emplace_back([&] {
                for (std::size_t s = next++; s < segment_count; s = next++) {
                    slots[s] = candidates_from(g, universe, s, kind, options);
                }
            });
        }
        pool.clear();
        for (auto& batch : slots) emit_batch(batch);
    }
    clock.finish();
    return stats;
}

std::vector<ConnectedRecord> enumerate_closed_connected(const TemporalGraph& g, ConnectivityKind kind,
                                                        const ConnectedOptions& options) {
    std::vector<ConnectedRecord> out;
    enumerate_closed_connected(g, kind, options, [&](const ConnectedRecord& r) { out.push_back(r); });
    return out;
}

}  // namespace chronomine
