#pragma once

#include <string>
#include <vector>

#include "chronomine/clique_state.hpp"
#include "chronomine/connected_miner.hpp"
#include "chronomine/temporal_graph.hpp"

// Exhaustive baselines written from the definitions alone. They share
// only the interval algebra and the graph model with the miners.

namespace chronomine::oracle {

struct OracleReport {
    std::vector<std::string> expected;  // canonical keys, sorted
    std::vector<std::string> actual;
    std::vector<std::string> missing;     // expected but not produced
    std::vector<std::string> unexpected;  // produced but not expected

    bool ok() const noexcept { return missing.empty() && unexpected.empty(); }
    /// Human-readable first difference; empty when ok().
    std::string first_mismatch() const;
};

/// Set comparison of canonical keys; duplicates in `actual` count as unexpected.
OracleReport compare(std::vector<std::string> expected, std::vector<std::string> actual);

std::string canonical_key(const ConnectedRecord& r);
std::string canonical_key(const CliqueState& k);

std::vector<std::string> keys(const std::vector<ConnectedRecord>& records);
std::vector<std::string> keys(const std::vector<CliqueState>& cliques);

/// Union over all windows [a, b] of the maximal kind-connected subsets,
/// each window evaluated from scratch by subset exhaustion. Every member
/// is also checked to be closed (std::logic_error otherwise). The same
/// size/duration filters as the miner are applied. Throws UsageError
/// above `max_vertices`.
std::vector<ConnectedRecord> brute_closed_connected(const TemporalGraph& g, ConnectivityKind kind,
                                                    const ConnectedOptions& options = {}, Vertex max_vertices = 14);

/// Every U (|U| >= 2) with nonempty gamma and no strict superset of equal
/// gamma. Contains the window family; may be strictly larger when some
/// gamma is not an interval.
std::vector<VertexSet> brute_closed_by_definition(const TemporalGraph& g, ConnectivityKind kind,
                                                  Vertex max_vertices = 14);

/// Per time stamp, by definition: 1 if G_t[U] is kind-connected.
bool connected_by_definition(const TemporalGraph& g, const VertexSet& u, TimeStamp t, ConnectivityKind kind);

/// All active cliques (one edge per vertex pair, nonempty tau), sorted by edges.
std::vector<CliqueState> brute_active_cliques(const TemporalGraph& g, Vertex max_vertices = 10);

/// Active cliques with no strict edge superset clique of equal tau.
std::vector<CliqueState> brute_closed_cliques(const TemporalGraph& g, Vertex max_vertices = 10);

/// Lexicographically smallest closed clique containing `k` with the same
/// tau, found by scanning brute_closed_cliques. Throws UsageError when `k`
/// is not an active clique.
CliqueState brute_lex_min_closure(const TemporalGraph& g, const CliqueState& k, Vertex max_vertices = 10);

/// Maximal cliques of every closure graph G_[s,e] with s an edge start and
/// e an edge end, kept when closed, deduplicated.
std::vector<CliqueState> simple_clique_enum(const TemporalGraph& g);

}  // namespace chronomine::oracle
