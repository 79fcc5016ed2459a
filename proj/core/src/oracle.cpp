#include "chronomine/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chronomine/errors.hpp"

namespace chronomine::oracle {

std::string OracleReport::first_mismatch() const {
    if (!missing.empty()) return "missing: " + missing.front();
    if (!unexpected.empty()) return "unexpected: " + unexpected.front();
    return {};
}

OracleReport compare(std::vector<std::string> expected, std::vector<std::string> actual) {
    OracleReport r;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(r.missing));
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                        std::back_inserter(r.unexpected));
    r.expected = std::move(expected);
    r.actual = std::move(actual);
    return r;
}

namespace {

template <class T>
void write_list(std::ostringstream& os, const std::vector<T>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
}

}  // namespace

std::string canonical_key(const ConnectedRecord& r) {
    std::ostringstream os;
    os << "V=";
    write_list(os, r.vertices);
    os << " gamma=";
    write_list(os, r.gamma);
    return os.str();
}

std::string canonical_key(const CliqueState& k) {
    std::ostringstream os;
    os << "V=";
    write_list(os, k.vertices);
    os << " E=";
    write_list(os, k.edges);
    os << " tau=";
    if (k.tau) {
        os << *k.tau;
    } else {
        os << "none";
    }
    return os.str();
}

std::vector<std::string> keys(const std::vector<ConnectedRecord>& records) {
    std::vector<std::string> out;
    for (const auto& r : records) out.push_back(canonical_key(r));
    return out;
}

std::vector<std::string> keys(const std::vector<CliqueState>& cliques) {
    std::vector<std::string> out;
    for (const auto& k : cliques) out.push_back(canonical_key(k));
    return out;
}

namespace {

using Mask = std::uint32_t;

// Snapshot adjacency as bitmasks over 0-based vertex positions.
struct MaskSnapshot {
    std::vector<Mask> out;  // out-neighbors (all neighbors when undirected)
    std::vector<Mask> in;
    std::vector<std::pair<int, int>> edges;
};

MaskSnapshot mask_snapshot(const TemporalGraph& g, TimeStamp t) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    MaskSnapshot s{std::vector<Mask>(n, 0), std::vector<Mask>(n, 0), {}};
    for (const EdgeRecord& e : g.edges()) {
        if (!e.interval.contains(t)) continue;
        const int a = e.u - 1, b = e.v - 1;
        s.out[static_cast<std::size_t>(a)] |= Mask{1} << b;
        s.in[static_cast<std::size_t>(b)] |= Mask{1} << a;
        if (!g.directed()) {
            s.out[static_cast<std::size_t>(b)] |= Mask{1} << a;
            s.in[static_cast<std::size_t>(a)] |= Mask{1} << b;
        }
        s.edges.emplace_back(a, b);
    }
    return s;
}

Mask reach(const std::vector<Mask>& adj, Mask within, int from, int skip_a = -1, int skip_b = -1) {
    Mask seen = Mask{1} << from;
    Mask frontier = seen;
    while (frontier) {
        const int x = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask nbrs = adj[static_cast<std::size_t>(x)] & within & ~seen;
        if (x == skip_a && skip_b >= 0) nbrs &= ~(Mask{1} << skip_b);
        if (x == skip_b && skip_a >= 0) nbrs &= ~(Mask{1} << skip_a);
        seen |= nbrs;
        frontier |= nbrs;
    }
    return seen;
}

bool mask_connected(const MaskSnapshot& s, Mask u, ConnectivityKind kind) {
    const int count = std::popcount(u);
    if (count <= 1) return true;
    const int first = std::countr_zero(u);
    switch (kind) {
        case ConnectivityKind::weak: {
            // underlying undirected reachability
            std::vector<Mask> both(s.out.size());
            for (std::size_t i = 0; i < both.size(); ++i) both[i] = s.out[i] | s.in[i];
            return reach(both, u, first) == u;
        }
        case ConnectivityKind::strong:
            return reach(s.out, u, first) == u && reach(s.in, u, first) == u;
        case ConnectivityKind::two_edge: {
            if (reach(s.out, u, first) != u) return false;
            // connected after deleting any single edge inside U
            for (auto [a, b] : s.edges) {
                if (!((u >> a) & 1u) || !((u >> b) & 1u)) continue;
                if (reach(s.out, u, first, a, b) != u) return false;
            }
            return true;
        }
        case ConnectivityKind::two_vertex: {
            if (count == 2) {
                const int second = std::countr_zero(u & (u - 1));
                return (s.out[static_cast<std::size_t>(first)] >> second) & 1u;
            }
            if (reach(s.out, u, first) != u) return false;
            // connected after deleting any single vertex of U
            for (Mask rest = u; rest; rest &= rest - 1) {
                const int x = std::countr_zero(rest);
                const Mask smaller = u & ~(Mask{1} << x);
                if (reach(s.out, smaller, std::countr_zero(smaller)) != smaller) return false;
            }
            return true;
        }
    }
    return false;
}

void require_cap(const TemporalGraph& g, Vertex cap) {
    if (g.vertex_count() > cap || g.vertex_count() > 30) {
        throw UsageError("oracle vertex cap exceeded: n=" + std::to_string(g.vertex_count()) + " > " +
                         std::to_string(std::min<Vertex>(cap, 30)));
    }
}

void require_kind(const TemporalGraph& g, ConnectivityKind kind) {
    if ((kind == ConnectivityKind::strong) != g.directed()) {
        throw UsageError("connectivity kind does not match graph directedness");
    }
}

VertexSet to_set(Mask m) {
    VertexSet out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

Mask to_mask(const VertexSet& u) {
    Mask m = 0;
    for (Vertex v : u) m |= Mask{1} << (v - 1);
    return m;
}

// connected[t-1][U] for every time stamp and vertex subset
std::vector<std::vector<char>> connectivity_table(const TemporalGraph& g, ConnectivityKind kind) {
    const Mask subsets = Mask{1} << g.vertex_count();
    std::vector<std::vector<char>> table;
    for (TimeStamp t = 1; t <= g.ground().t_max; ++t) {
        const MaskSnapshot s = mask_snapshot(g, t);
        std::vector<char> row(subsets, 0);
        for (Mask u = 1; u < subsets; ++u) row[u] = mask_connected(s, u, kind);
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<Interval> runs_of(const std::vector<std::vector<char>>& table, Mask u) {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!table[i][u]) continue;
        const auto t = static_cast<TimeStamp>(i + 1);
        if (!out.empty() && out.back().end + 1 == t) {
            out.back().end = t;
        } else {
            out.push_back({t, t});
        }
    }
    return out;
}

}  // namespace

bool connected_by_definition(const TemporalGraph& g, const VertexSet& u, TimeStamp t, ConnectivityKind kind) {
    require_cap(g, 30);
    return mask_connected(mask_snapshot(g, t), to_mask(u), kind);
}

std::vector<ConnectedRecord> brute_closed_connected(const TemporalGraph& g, ConnectivityKind kind,
                                                    const ConnectedOptions& options, Vertex max_vertices) {
    require_cap(g, max_vertices);
    require_kind(g, kind);
    const Mask subsets = Mask{1} << g.vertex_count();
    const auto table = connectivity_table(g, kind);
    const TimeStamp t_max = g.ground().t_max;

    std::vector<std::vector<Interval>> gamma(subsets);
    for (Mask u = 1; u < subsets; ++u) gamma[u] = runs_of(table, u);

    std::vector<Mask> by_size;
    for (Mask u = 1; u < subsets; ++u) by_size.push_back(u);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });

    std::set<Mask> members;
    for (TimeStamp a = 1; a <= t_max; ++a) {
        for (TimeStamp b = a; b <= t_max; ++b) {
            std::vector<Mask> maximal;
            for (Mask u : by_size) {
                bool on_window = true;
                for (TimeStamp t = a; t <= b && on_window; ++t) on_window = table[static_cast<std::size_t>(t - 1)][u];
                if (!on_window) continue;
                bool covered = false;
                for (Mask m : maximal) covered = covered || (u & m) == u;
                if (!covered) maximal.push_back(u);
            }
            members.insert(maximal.begin(), maximal.end());
        }
    }

    std::vector<ConnectedRecord> out;
    for (Mask u : members) {
        for (Mask sup = u; sup < subsets; sup = (sup + 1) | u) {
            if (sup != u && gamma[sup] == gamma[u]) {
                throw std::logic_error("window member " + canonical_key(ConnectedRecord{to_set(u), gamma[u], {}}) +
                                       " is not closed");
            }
        }
        ConnectedRecord r{to_set(u), gamma[u], gamma[u].empty() ? g.ground().full() : gamma[u].front()};
        if (accepts(options, r)) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const ConnectedRecord& x, const ConnectedRecord& y) { return x.vertices < y.vertices; });
    return out;
}

std::vector<VertexSet> brute_closed_by_definition(const TemporalGraph& g, ConnectivityKind kind, Vertex max_vertices) {
    require_cap(g, max_vertices);
    require_kind(g, kind);
    const Mask subsets = Mask{1} << g.vertex_count();
    const auto table = connectivity_table(g, kind);
    std::vector<std::vector<Interval>> gamma(subsets);
    for (Mask u = 1; u < subsets; ++u) gamma[u] = runs_of(table, u);

    std::vector<VertexSet> out;
    for (Mask u = 1; u < subsets; ++u) {
        if (std::popcount(u) < 2 || gamma[u].empty()) continue;
        bool closed = true;
        for (Mask sup = (u + 1) | u; sup < subsets && closed; sup = (sup + 1) | u) closed = gamma[sup] != gamma[u];
        if (closed) out.push_back(to_set(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CliqueState> brute_active_cliques(const TemporalGraph& g, Vertex max_vertices) {
    require_cap(g, max_vertices);
    if (g.directed()) throw UsageError("clique oracle requires an undirected graph");
    const Vertex n = g.vertex_count();

    // parallel edges per vertex pair
    std::vector<std::vector<std::vector<EdgeId>>> between(static_cast<std::size_t>(n) + 1,
                                                          std::vector<std::vector<EdgeId>>(static_cast<std::size_t>(n) + 1));
    for (const EdgeRecord& e : g.edges()) between[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)].push_back(e.id);

    std::vector<CliqueState> out;
    const Mask subsets = Mask{1} << n;
    for (Mask m = 1; m < subsets; ++m) {
        if (std::popcount(m) < 2) continue;
        const VertexSet vs = to_set(m);
        std::vector<const std::vector<EdgeId>*> pairs;
        bool complete = true;
        for (std::size_t i = 0; i < vs.size() && complete; ++i) {
            for (std::size_t j = i + 1; j < vs.size() && complete; ++j) {
                const auto& options = between[static_cast<std::size_t>(vs[i])][static_cast<std::size_t>(vs[j])];
                complete = !options.empty();
                pairs.push_back(&options);
            }
        }
        if (!complete) continue;

        std::vector<EdgeId> chosen;
        std::function<void(std::size_t, Interval)> choose = [&](std::size_t p, Interval tau) {
            if (p == pairs.size()) {
                std::vector<EdgeId> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                out.push_back(CliqueState{std::move(sorted), tau, vs});
                return;
            }
            for (EdgeId e : *pairs[p]) {
                const auto next = intersect(tau, g.edge(e).interval);
                if (!next) continue;
                chosen.push_back(e);
                choose(p + 1, *next);
                chosen.pop_back();
            }
        };
        choose(0, g.ground().full());
    }
    std::sort(out.begin(), out.end(), [](const CliqueState& a, const CliqueState& b) { return a.edges < b.edges; });
    return out;
}

std::vector<CliqueState> brute_closed_cliques(const TemporalGraph& g, Vertex max_vertices) {
    const auto active = brute_active_cliques(g, max_vertices);
    std::vector<Mask> masks;
    for (const auto& k : active) masks.push_back(to_mask(k.vertices));

    std::vector<CliqueState> out;
    for (std::size_t i = 0; i < active.size(); ++i) {
        bool closed = true;
        for (std::size_t j = 0; j < active.size() && closed; ++j) {
            if (i == j || (masks[i] & masks[j]) != masks[i] || masks[i] == masks[j]) continue;
            if (active[j].tau != active[i].tau) continue;
            closed = !std::includes(active[j].edges.begin(), active[j].edges.end(), active[i].edges.begin(),
                                    active[i].edges.end());
        }
        if (closed) out.push_back(active[i]);
    }
    return out;
}

CliqueState brute_lex_min_closure(const TemporalGraph& g, const CliqueState& k, Vertex max_vertices) {
    if (!k.tau) throw UsageError("closure of an inactive edge set");
    const auto closed = brute_closed_cliques(g, max_vertices);
    const CliqueState* best = nullptr;
    // F precedes F' iff the smallest element of the symmetric difference is in F
    auto precedes = [](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
        std::vector<EdgeId> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        return !diff.empty() && std::binary_search(a.begin(), a.end(), diff.front());
    };
    for (const auto& c : closed) {
        if (c.tau != k.tau) continue;
        if (!std::includes(c.edges.begin(), c.edges.end(), k.edges.begin(), k.edges.end())) continue;
        if (!best || precedes(c.edges, best->edges)) best = &c;
    }
    if (!best) throw UsageError("edge set is not an active clique");
    return *best;
}

namespace {

// Bron–Kerbosch with pivoting over sorted vertex vectors.
void bron_kerbosch(const std::vector<std::vector<Vertex>>& adj, std::vector<Vertex>& r, std::vector<Vertex> p,
                   std::vector<Vertex> x, std::vector<std::vector<Vertex>>& out) {
    if (p.empty()) {
        if (x.empty() && r.size() >= 2) {
            auto clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
        }
        return;
    }
    Vertex pivot = p.front();
    std::size_t best = 0;
    for (const auto* side : {&p, &x}) {
        for (Vertex u : *side) {
            const auto& nu = adj[static_cast<std::size_t>(u)];
            std::size_t hits = 0;
            for (Vertex w : p) hits += std::binary_search(nu.begin(), nu.end(), w);
            if (hits >= best) {
                best = hits;
                pivot = u;
            }
        }
    }
    const auto& np = adj[static_cast<std::size_t>(pivot)];
    std::vector<Vertex> branch;
    for (Vertex v : p) {
        if (!std::binary_search(np.begin(), np.end(), v)) branch.push_back(v);
    }
    for (Vertex v : branch) {
        const auto& nv = adj[static_cast<std::size_t>(v)];
        std::vector<Vertex> p2, x2;
        std::set_intersection(p.begin(), p.end(), nv.begin(), nv.end(), std::back_inserter(p2));
        std::set_intersection(x.begin(), x.end(), nv.begin(), nv.end(), std::back_inserter(x2));
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::vector<CliqueState> simple_clique_enum(const TemporalGraph& g) {
    if (g.directed()) throw UsageError("clique oracle requires an undirected graph");
    const Vertex n = g.vertex_count();
    std::set<TimeStamp> starts, ends;
    for (const EdgeRecord& e : g.edges()) {
        starts.insert(e.interval.start);
        ends.insert(e.interval.end);
    }

    std::set<std::vector<EdgeId>> seen;
    std::vector<CliqueState> out;
    for (TimeStamp s : starts) {
        for (TimeStamp e : ends) {
            if (s > e) continue;
            const Interval window{s, e};
            std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
            for (const EdgeRecord& rec : g.edges()) {
                if (!rec.interval.contains(window)) continue;
                adj[static_cast<std::size_t>(rec.u)].push_back(rec.v);
                adj[static_cast<std::size_t>(rec.v)].push_back(rec.u);
            }
            for (auto& list : adj) std::sort(list.begin(), list.end());

            std::vector<Vertex> all(static_cast<std::size_t>(n));
            for (Vertex v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
            std::vector<Vertex> r;
            std::vector<std::vector<Vertex>> maximal;
            bron_kerbosch(adj, r, all, {}, maximal);

            for (const auto& vs : maximal) {
                std::vector<EdgeId> edges;
                Interval tau = g.ground().full();
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    for (std::size_t j = i + 1; j < vs.size(); ++j) {
                        for (const Incidence& inc : g.adjacency(vs[i])) {
                            if (inc.neighbor == vs[j] && g.edge(inc.edge).interval.contains(window)) {
                                edges.push_back(inc.edge);
                                tau = *intersect(tau, g.edge(inc.edge).interval);
                            }
                        }
                    }
                }
                std::sort(edges.begin(), edges.end());
                // closed: no outside vertex adjacent to all of V(K) throughout tau(K)
                bool closed = true;
                for (Vertex w = 1; w <= n && closed; ++w) {
                    if (std::binary_search(vs.begin(), vs.end(), w)) continue;
                    std::size_t hits = 0;
                    for (Vertex x : vs) {
                        for (const Incidence& inc : g.adjacency(w)) {
                            if (inc.neighbor == x && g.edge(inc.edge).interval.contains(tau)) {
                                ++hits;
                                break;
                            }
                        }
                    }
                    closed = hits < vs.size();
                }
                if (closed && seen.insert(edges).second) out.push_back(CliqueState{edges, tau, vs});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CliqueState& a, const CliqueState& b) { return a.edges < b.edges; });
    return out;
}

}  // namespace chronomine::oracle
