#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chronomine/interval.hpp"
#include "chronomine/run_stats.hpp"
#include "chronomine/temporal_graph.hpp"

namespace chronomine {

enum class ConnectivityKind { weak, strong, two_edge, two_vertex };

std::string_view to_string(ConnectivityKind kind) noexcept;
/// Accepts "weak", "strong", "2edge"/"two_edge", "2vertex"/"two_vertex".
std::optional<ConnectivityKind> parse_connectivity_kind(std::string_view name) noexcept;

using VertexSet = std::vector<Vertex>;

/// Disjoint sorted vertex sets covering a universe; members sorted.
struct ComponentPartition {
    std::vector<VertexSet> members;

    friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

/// Meet of two partitions of the same universe: all nonempty pairwise intersections.
ComponentPartition meet(const ComponentPartition& a, const ComponentPartition& b);

struct ConnectedRecord {
    VertexSet vertices;
    std::vector<Interval> gamma;  // maximal intervals where the set is connected
    Interval witness_window;      // first window whose partition contained it

    friend bool operator==(const ConnectedRecord& a, const ConnectedRecord& b) {
        return a.vertices == b.vertices && a.gamma == b.gamma;
    }
};

struct ConnectedOptions {
    std::size_t min_size = 2;
    bool include_singletons = false;
    /// Lower bound on the longest gamma interval.
    TimeStamp min_duration = 1;
    /// Worker threads over starting stamps; output is identical for any value.
    unsigned threads = 1;
};

/// Passes the size/singleton/duration filters.
bool accepts(const ConnectedOptions& options, const ConnectedRecord& record);

/// Maximal kind-connected subsets of the snapshot G_t[W]. Throws
/// UsageError for two_vertex (see pairset_components) and when the kind
/// does not match the graph's directedness.
ComponentPartition components_at(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t,
                                 ConnectivityKind kind);

/// One maximal biconnected block of a snapshot, as the vertex pairs it spans.
struct PairBlock {
    VertexSet vertices;
    std::vector<std::pair<Vertex, Vertex>> pairs;

    friend bool operator==(const PairBlock&, const PairBlock&) = default;
};

/// Two-vertex-connected blocks of G_t[W]; a bridge is its own block.
/// Blocks share at most one vertex, so their pair sets are disjoint.
std::vector<PairBlock> pairset_components(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t);

/// Given the members for the window [t, t + offset - 1], returns the
/// members for [t, t + offset]. Blocks that break at the new stamp are
/// split and re-split until each is connected throughout the window.
/// For two_vertex the members are blocks (they may share one vertex)
/// and isolated leftovers are dropped.
ComponentPartition refine_window(const TemporalGraph& g, const ComponentPartition& prev, TimeStamp t,
                                 TimeStamp offset, ConnectivityKind kind);

/// The window partition for [t, t + offset] computed by refinement from G_t.
ComponentPartition window_members(const TemporalGraph& g, TimeStamp t, TimeStamp offset, ConnectivityKind kind);

/// Exact maximal intervals of {t | U is kind-connected in G_t}.
std::vector<Interval> gamma_of(const TemporalGraph& g, std::span<const Vertex> u, ConnectivityKind kind);

using ConnectedSink = std::function<void(const ConnectedRecord&)>;

/// Streams every member of every window partition, deduplicated by
/// vertex set, in (witness start, witness length, vertex set) order.
RunStats enumerate_closed_connected(const TemporalGraph& g, ConnectivityKind kind, const ConnectedOptions& options,
                                    const ConnectedSink& sink);

std::vector<ConnectedRecord> enumerate_closed_connected(const TemporalGraph& g, ConnectivityKind kind,
                                                        const ConnectedOptions& options = {});

}  // namespace chronomine
