#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chronomine/clique_state.hpp"
#include "chronomine/interval.hpp"

namespace chronomine {

struct EdgeRecord {
    EdgeId id = 0;
    Vertex u = 0;  // tail for directed graphs; u < v otherwise
    Vertex v = 0;
    Interval interval;
};

struct Incidence {
    Vertex neighbor = 0;
    EdgeId edge = 0;
};

/// Raw input edge before normalization; duplicate (u, v) entries are
/// merged into parallel edges.
struct EdgeSpec {
    Vertex u = 0;
    Vertex v = 0;
    Interval interval;
};

/// Immutable interval-annotated graph on vertices 1..n.
///
/// Edge ids are dense and assigned in (u, v, interval.start) order, so
/// the id order is the global edge order used by the clique miner.
/// Adjacency lists are sorted by (neighbor, interval.start, edge id).
class TemporalGraph {
public:
    TemporalGraph() = default;

    /// Normalizes multi-interval pairs and builds the adjacency index.
    /// `t_max` defaults to the largest interval end (1 for no edges).
    /// `labels[i - 1]` is the external name of vertex i; identity if empty.
    static TemporalGraph build(Vertex n, std::span<const EdgeSpec> edges, std::optional<TimeStamp> t_max = {},
                               bool directed = false, std::vector<Vertex> labels = {});

    /// Parses the temporal edge-list format: "u v s e" lines plus the
    /// headers "# tmax T", "# directed" and "# vertices N". Without the
    /// vertices header, vertices are renumbered 1..n by first appearance.
    static TemporalGraph parse(std::string_view text);
    static TemporalGraph load(const std::filesystem::path& path);

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return directed_; }
    const GroundTimeSet& ground() const noexcept { return ground_; }

    const EdgeRecord& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
    std::span<const EdgeRecord> edges() const noexcept { return edges_; }
    std::span<const Incidence> adjacency(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency(v).size(); }
    std::size_t max_degree() const noexcept { return max_degree_; }

    /// Sorted distinct interval starts and ends.
    std::span<const TimeStamp> event_times() const noexcept { return event_times_; }

    /// Maximal intervals on which the snapshot G_t does not change; they
    /// partition [1, t_max].
    std::span<const Interval> segments() const noexcept { return segments_; }

    Vertex label(Vertex v) const { return labels_.empty() ? v : labels_[static_cast<std::size_t>(v - 1)]; }
    bool has_identity_labels() const noexcept { return labels_.empty(); }

    /// Serializes back into the edge-list format (with explicit headers).
    void write_edge_list(std::ostream& os) const;

    friend bool operator==(const TemporalGraph& a, const TemporalGraph& b);

private:
    Vertex n_ = 0;
    bool directed_ = false;
    GroundTimeSet ground_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<Incidence>> adjacency_;  // index 0 unused
    std::vector<TimeStamp> event_times_;
    std::vector<Interval> segments_;
    std::vector<Vertex> labels_;
    std::size_t max_degree_ = 0;
};

/// Edges visible in the closure graph G_w. An empty window yields all edges.
std::vector<EdgeId> closure_edges(const TemporalGraph& g, const TimeWindow& w);

/// N_w(v): neighbors joined to v by some edge whose interval covers w.
std::vector<Vertex> neighbors_at(const TemporalGraph& g, Vertex v, const TimeWindow& w);

/// Read-only view of G_w.
class ClosureView {
public:
    ClosureView(const TemporalGraph& g, TimeWindow w) : g_(&g), window_(w) {}

    const TemporalGraph& base() const noexcept { return *g_; }
    const TimeWindow& window() const noexcept { return window_; }
    bool visible(EdgeId e) const { return window_.covered_by(g_->edge(e).interval); }
    std::vector<EdgeId> edges() const { return closure_edges(*g_, window_); }
    std::vector<Vertex> neighbors(Vertex v) const { return neighbors_at(*g_, v, window_); }

private:
    const TemporalGraph* g_;
    TimeWindow window_;
};

/// Builds a CliqueState from an edge set: sorts ids, collects V(K) and
/// tau(K). Does not check completeness.
CliqueState make_clique(const TemporalGraph& g, std::vector<EdgeId> edges);

/// True iff every vertex pair of V(K) is joined by an edge of K.
bool is_clique(const TemporalGraph& g, const CliqueState& k);

/// K_{<=i}: edges of K whose endpoints are both <= i.
CliqueState restrict_to_prefix(const TemporalGraph& g, const CliqueState& k, Vertex i);

/// N_{tau(K)}(K): vertices outside V(K) adjacent to every vertex of V(K)
/// throughout tau(K). Requires K nonempty and active.
std::vector<Vertex> common_neighbors(const TemporalGraph& g, const CliqueState& k);

/// M(K, v): every edge joining v to a vertex of V(K), regardless of time.
std::vector<EdgeId> incident_bundle(const TemporalGraph& g, const CliqueState& k, Vertex v);

}  // namespace chronomine
