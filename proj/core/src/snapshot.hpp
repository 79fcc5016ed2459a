#pragma once

// Decompositions of a single snapshot G_t[W]. Internal to the core library.

#include <span>
#include <vector>

#include "chronomine/connected_miner.hpp"
#include "chronomine/temporal_graph.hpp"

namespace chronomine::detail {

/// Induced snapshot with local vertex ids 0..k-1 (positions in `vertices`).
struct LocalGraph {
    std::vector<Vertex> vertices;
    // undirected: both directions; directed: out-arcs only
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, local edge id)
    int edge_count = 0;
    bool directed = false;
};

LocalGraph induced_snapshot(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t);

using LocalGroups = std::vector<std::vector<int>>;

LocalGroups weak_components(const LocalGraph& lg);
LocalGroups strong_components(const LocalGraph& lg);
LocalGroups two_edge_components(const LocalGraph& lg);
/// Biconnected blocks (bridges included as two-vertex blocks); isolated
/// vertices belong to no block.
LocalGroups biconnected_blocks(const LocalGraph& lg);

/// Kind-specific maximal groups of G_t[W] in global ids, each sorted,
/// groups sorted. A partition of W except for two_vertex, where only
/// blocks of size >= 2 are returned.
std::vector<std::vector<Vertex>> groups_at(const TemporalGraph& g, std::span<const Vertex> w, TimeStamp t,
                                           ConnectivityKind kind);

/// G_t[U] is kind-connected; a single vertex always is.
bool connected_at(const TemporalGraph& g, std::span<const Vertex> u, TimeStamp t, ConnectivityKind kind);

void require_kind_matches(const TemporalGraph& g, ConnectivityKind kind);

}  // namespace chronomine::detail
