#include "snapshot.hpp"

#include <algorithm>

#include "chronomine/errors.hpp"

namespace chronomine::detail {

namespace {

// Scratch map from global vertex id to local index; entries are reset after use.
std::vector<int>& local_index_scratch(std::size_t n) {
    thread_local std::vector<int> scratch;
    if (scratch.size() < n) scratch.resize(n, -1);
    return scratch;
}

}  // namespace

LocalGraph induced_snapshot(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t) {
    LocalGraph lg;
    lg.directed = g.directed();
    lg.vertices.assign(w.begin(), w.end());
    lg.adj.resize(lg.vertices.size());

    auto& index = local_index_scratch(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (std::size_t i = 0; i < lg.vertices.size(); ++i) index[static_cast<std::size_t>(lg.vertices[i])] = static_cast<int>(i);

    for (std::size_t i = 0; i < lg.vertices.size(); ++i) {
        const Vertex x = lg.vertices[i];
        for (const Incidence& inc : g.adjacency(x)) {
            const int j = index[static_cast<std::size_t>(inc.neighbor)];
            if (j < 0) continue;
            const EdgeRecord& e = g.edge(inc.edge);
            if (!e.interval.contains(t)) continue;
            if (lg.directed) {
                if (e.u == x) lg.adj[i].push_back({j, lg.edge_count++});
            } else if (x < inc.neighbor) {
                // each undirected edge is added once, from its smaller endpoint
                lg.adj[i].push_back({j, lg.edge_count});
                lg.adj[static_cast<std::size_t>(j)].push_back({static_cast<int>(i), lg.edge_count});
                ++lg.edge_count;
            }
        }
    }
    for (Vertex x : lg.vertices) index[static_cast<std::size_t>(x)] = -1;
    return lg;
}

LocalGroups weak_components(const LocalGraph& lg) {
    const int k = static_cast<int>(lg.vertices.size());
    std::vector<int> comp(static_cast<std::size_t>(k), -1);
    LocalGroups groups;
    std::vector<int> queue;
    // directed inputs are treated as their underlying undirected graph here
    std::vector<std::vector<int>> undirected;
    if (lg.directed) {
        undirected.resize(static_cast<std::size_t>(k));
        for (int x = 0; x < k; ++x) {
            for (auto [y, e] : lg.adj[static_cast<std::size_t>(x)]) {
                undirected[static_cast<std::size_t>(x)].push_back(y);
                undirected[static_cast<std::size_t>(y)].push_back(x);
            }
        }
    }
    for (int s = 0; s < k; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(groups.size());
        groups.emplace_back();
        queue.assign(1, s);
        comp[static_cast<std::size_t>(s)] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            groups.back().push_back(x);
            auto visit = [&](int y) {
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = id;
                    queue.push_back(y);
                }
            };
            if (lg.directed) {
                for (int y : undirected[static_cast<std::size_t>(x)]) visit(y);
            } else {
                for (auto [y, e] : lg.adj[static_cast<std::size_t>(x)]) visit(y);
            }
        }
    }
    return groups;
}

LocalGroups strong_components(const LocalGraph& lg) {
    // iterative Tarjan
    const int k = static_cast<int>(lg.vertices.size());
    std::vector<int> index(static_cast<std::size_t>(k), -1), low(static_cast<std::size_t>(k), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(k), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;  // (vertex, next arc position)
    LocalGroups groups;
    int counter = 0;

    for (int s = 0; s < k; ++s) {
        if (index[static_cast<std::size_t>(s)] >= 0) continue;
        call.push_back({s, 0});
        index[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = counter++;
        stack.push_back(s);
        on_stack[static_cast<std::size_t>(s)] = 1;
        while (!call.empty()) {
            auto& [x, pos] = call.back();
            const auto& arcs = lg.adj[static_cast<std::size_t>(x)];
            if (pos < arcs.size()) {
                const int y = arcs[pos++].first;
                if (index[static_cast<std::size_t>(y)] < 0) {
                    index[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = counter++;
                    stack.push_back(y);
                    on_stack[static_cast<std::size_t>(y)] = 1;
                    call.push_back({y, 0});
                } else if (on_stack[static_cast<std::size_t>(y)]) {
                    low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], index[static_cast<std::size_t>(y)]);
                }
                continue;
            }
            const int done = x;
            call.pop_back();
            if (!call.empty()) {
                const int parent = call.back().first;
                low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done)]);
            }
            if (low[static_cast<std::size_t>(done)] == index[static_cast<std::size_t>(done)]) {
                groups.emplace_back();
                int y;
                do {
                    y = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(y)] = 0;
                    groups.back().push_back(y);
                } while (y != done);
            }
        }
    }
    return groups;
}

namespace {

// Undirected lowpoint DFS shared by the bridge and block decompositions.
// Calls on_tree_edge_done(parent, child, child_edge) after a child's subtree
// finishes and on_edge(x, y, e) for every edge the first time it is traversed.
struct LowpointDfs {
    const LocalGraph& lg;
    std::vector<int> disc, low;

    explicit LowpointDfs(const LocalGraph& g)
        : lg(g), disc(g.vertices.size(), -1), low(g.vertices.size(), 0) {}

    template <class OnEdge, class OnFinish>
    void run(int root, int& counter, OnEdge&& on_edge, OnFinish&& on_finish) {
        struct Frame {
            int vertex;
            int parent_edge;
            std::size_t pos;
        };
        std::vector<Frame> call{{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& arcs = lg.adj[static_cast<std::size_t>(f.vertex)];
            if (f.pos < arcs.size()) {
                const auto [y, e] = arcs[f.pos++];
                if (e == f.parent_edge) continue;
                const auto x = static_cast<std::size_t>(f.vertex);
                if (disc[static_cast<std::size_t>(y)] < 0) {
                    on_edge(f.vertex, y, e);
                    disc[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = counter++;
                    call.push_back({y, e, 0});
                } else if (disc[static_cast<std::size_t>(y)] < disc[x]) {
                    // back edge to an ancestor, seen from the descendant side only
                    on_edge(f.vertex, y, e);
                    low[x] = std::min(low[x], disc[static_cast<std::size_t>(y)]);
                }
                continue;
            }
            const Frame done = f;
            call.pop_back();
            if (!call.empty()) {
                const int parent = call.back().vertex;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.vertex)]);
                on_finish(parent, done.vertex, done.parent_edge);
            }
        }
    }
};

}  // namespace

LocalGroups two_edge_components(const LocalGraph& lg) {
    const int k = static_cast<int>(lg.vertices.size());
    std::vector<char> bridge(static_cast<std::size_t>(lg.edge_count), 0);
    LowpointDfs dfs(lg);
    int counter = 0;
    for (int s = 0; s < k; ++s) {
        if (dfs.disc[static_cast<std::size_t>(s)] >= 0) continue;
        dfs.run(
            s, counter, [](int, int, int) {},
            [&](int parent, int child, int edge) {
                if (dfs.low[static_cast<std::size_t>(child)] > dfs.disc[static_cast<std::size_t>(parent)]) {
                    bridge[static_cast<std::size_t>(edge)] = 1;
                }
            });
    }
    std::vector<int> comp(static_cast<std::size_t>(k), -1);
    LocalGroups groups;
    std::vector<int> queue;
    for (int s = 0; s < k; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(groups.size());
        groups.emplace_back();
        queue.assign(1, s);
        comp[static_cast<std::size_t>(s)] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            groups.back().push_back(x);
            for (auto [y, e] : lg.adj[static_cast<std::size_t>(x)]) {
                if (bridge[static_cast<std::size_t>(e)] || comp[static_cast<std::size_t>(y)] >= 0) continue;
                comp[static_cast<std::size_t>(y)] = id;
                queue.push_back(y);
            }
        }
    }
    return groups;
}

LocalGroups biconnected_blocks(const LocalGraph& lg) {
    const int k = static_cast<int>(lg.vertices.size());
    LowpointDfs dfs(lg);
    std::vector<std::pair<int, int>> edge_stack;
    LocalGroups groups;
    std::vector<int> seen(static_cast<std::size_t>(k), -1);
    int counter = 0;
    for (int s = 0; s < k; ++s) {
        if (dfs.disc[static_cast<std::size_t>(s)] >= 0) continue;
        dfs.run(
            s, counter, [&](int x, int y, int) { edge_stack.push_back({x, y}); },
            [&](int parent, int child, int) {
                if (dfs.low[static_cast<std::size_t>(child)] < dfs.disc[static_cast<std::size_t>(parent)]) return;
                // parent separates the subtree of child: pop one block
                const int id = static_cast<int>(groups.size());
                groups.emplace_back();
                auto add = [&](int x) {
                    if (seen[static_cast<std::size_t>(x)] != id) {
                        seen[static_cast<std::size_t>(x)] = id;
                        groups.back().push_back(x);
                    }
                };
                while (!edge_stack.empty()) {
                    const auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    add(a);
                    add(b);
                    if (a == parent && b == child) break;
                }
            });
    }
    return groups;
}

void require_kind_matches(const TemporalGraph& g, ConnectivityKind kind) {
    if (kind == ConnectivityKind::strong && !g.directed()) {
        throw UsageError("strong connectivity requires a directed graph (add '# directed')");
    }
    if (kind != ConnectivityKind::strong && g.directed()) {
        throw UsageError(std::string(to_string(kind)) + " connectivity requires an undirected graph");
    }
}

std::vector<std::vector<Vertex>> groups_at(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t,
                                           ConnectivityKind kind) {
    const LocalGraph lg = induced_snapshot(g, w, t);
    LocalGroups local;
    switch (kind) {
        case ConnectivityKind::weak: local = weak_components(lg); break;
        case ConnectivityKind::strong: local = strong_components(lg); break;
        case ConnectivityKind::two_edge: local = two_edge_components(lg); break;
        case ConnectivityKind::two_vertex: local = biconnected_blocks(lg); break;
    }
    std::vector<std::vector<Vertex>> out;
    out.reserve(local.size());
    for (const auto& group : local) {
        std::vector<Vertex> members;
        members.reserve(group.size());
        for (int x : group) members.push_back(lg.vertices[static_cast<std::size_t>(x)]);
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool connected_at(const TemporalGraph& g, std::span<const Vertex> u, TimeStamp t, ConnectivityKind kind) {
    if (u.size() <= 1) return true;
    const LocalGraph lg = induced_snapshot(g, u, t);
    if (lg.edge_count == 0) return false;
    switch (kind) {
        case ConnectivityKind::weak: return weak_components(lg).size() == 1;
        case ConnectivityKind::strong: return strong_components(lg).size() == 1;
        case ConnectivityKind::two_edge: return two_edge_components(lg).size() == 1;
        case ConnectivityKind::two_vertex: {
            const auto blocks = biconnected_blocks(lg);
            return blocks.size() == 1 && blocks.front().size() == u.size();
        }
    }
    return false;
}

}  // namespace chronomine::detail
