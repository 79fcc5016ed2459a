#include "json_output.hpp"

#include <algorithm>
#include <array>

namespace chronomine::cli {

namespace {

Json labelled(const TemporalGraph& g, const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Json to_json(const TemporalGraph& g, const ConnectedRecord& r) {
    Json gamma = Json::array();
    for (const Interval& i : r.gamma) gamma.push_back({i.start, i.end});
    return Json{{"type", "connected"}, {"vertices", labelled(g, r.vertices)}, {"gamma", std::move(gamma)}};
}

Json to_json(const TemporalGraph& g, const CliqueState& k) {
    std::vector<std::array<std::int64_t, 4>> edges;
    for (EdgeId id : k.edges) {
        const EdgeRecord& e = g.edge(id);
        Vertex a = g.label(e.u), b = g.label(e.v);
        if (a > b) std::swap(a, b);
        edges.push_back({a, b, e.interval.start, e.interval.end});
    }
    std::sort(edges.begin(), edges.end());
    Json tau = Json::array();
    if (k.tau) tau = {k.tau->start, k.tau->end};
    return Json{{"type", "clique"}, {"vertices", labelled(g, k.vertices)}, {"edges", edges}, {"tau", std::move(tau)}};
}

Json to_json(const RunStats& stats) {
    return Json{{"type", "stats"},
                {"outputs", stats.outputs},
                {"wall_time_ns", stats.wall_time.count()},
                {"max_delay_ns", stats.max_delay.count()},
                {"peak_tracked_state", stats.peak_tracked_state},
                {"max_depth", stats.max_depth}};
}

}  // namespace chronomine::cli
