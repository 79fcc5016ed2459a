#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chronomine/clique_state.hpp"
#include "chronomine/run_stats.hpp"
#include "chronomine/temporal_graph.hpp"

namespace chronomine {

enum class MemoryMode {
    /// Keeps each level's clique next to its resume cursor.
    stack,
    /// Keeps one resume cursor per level; parents are recomputed on the way up.
    restart,
};

struct MinerConfig {
    /// Minimum |tau(K)| in time stamps; 0 and 1 both mean "everything".
    TimeStamp sigma = 0;
    MemoryMode memory = MemoryMode::stack;
    bool record_delays = false;
};

/// A time-maximal F ⊆ M(K, v): no strict superset inside M(K, v) has
/// the same tau(F) ∩ tau(K), which is `window`.
struct TimeMaximalSubset {
    Vertex v = 0;
    std::vector<EdgeId> edges;
    Interval window;

    friend bool operator==(const TimeMaximalSubset&, const TimeMaximalSubset&) = default;
};

using CliqueSink = std::function<void(const CliqueState&)>;

/// Reverse search over closed active cliques of one undirected graph.
///
/// The family tree is rooted at X(∅); when no edge spans the whole
/// ground set the root is the empty clique and is never emitted.
class CliqueEnumerator {
public:
    /// Throws UsageError for directed graphs.
    explicit CliqueEnumerator(const TemporalGraph& g);

    const TemporalGraph& graph() const noexcept { return *g_; }
    const CliqueState& root() const noexcept { return root_; }
    bool is_root(const CliqueState& k) const noexcept { return k.edges == root_.edges; }

    /// X(K): grows K by the smallest common neighbor over tau(K) until
    /// none is left. Throws UsageError if K is not an active clique.
    CliqueState closure(const CliqueState& k) const;

    /// i(K). Throws UsageError for the root or a non-closed K.
    Vertex index_of(const CliqueState& k) const;

    /// P(K) = X(K_{<=i(K)-1}). Same preconditions as index_of.
    CliqueState parent(const CliqueState& k) const;

    /// I(K, v) over the full bundle M(K, v), ordered by window.
    std::vector<TimeMaximalSubset> time_maximal_subsets(const CliqueState& k, Vertex v) const;

    /// C(K, F) = X(K_{<=v} ∩ V(F) ∪ F). Returns a state with tau == nullopt
    /// when the seed is not an active clique.
    CliqueState child_candidate(const CliqueState& k, const TimeMaximalSubset& f) const;

    /// Children of K in the family tree with |tau| >= sigma, in generation
    /// order. For the root this covers only children that share an edge
    /// with it; enumerate() adds the single-edge seeds.
    std::vector<CliqueState> children(const CliqueState& k, TimeStamp sigma = 0) const;

    /// Every closed active clique with |tau| >= sigma, each exactly once,
    /// in depth-first preorder. Both memory modes produce the same sequence.
    RunStats enumerate(const MinerConfig& config, const CliqueSink& sink) const;

private:
    struct Cursor {
        bool sweeping = false;  // root level only: past the shared-edge children
        Vertex v = 0;           // 0 = before the first vertex
        Interval window{0, 0};
        EdgeId edge = -1;
    };

    std::optional<CliqueState> next_child(const CliqueState& k, Vertex index, bool at_root, TimeStamp sigma,
                                          Cursor& cursor) const;
    std::optional<CliqueState> sweep_child(EdgeId e, TimeStamp sigma) const;

    CliqueState closure_unchecked(std::vector<EdgeId> edges, std::vector<Vertex> vertices, Interval tau) const;
    Vertex index_unchecked(const CliqueState& k) const;
    CliqueState parent_unchecked(const CliqueState& k, Vertex index) const;
    std::vector<TimeMaximalSubset> maximal_subsets(Vertex v, const std::vector<EdgeId>& bundle, Interval tau) const;
    std::vector<EdgeId> lower_bundle(const CliqueState& k, Vertex v) const;

    RunStats enumerate_stack(const MinerConfig& config, const CliqueSink& sink) const;
    RunStats enumerate_restart(const MinerConfig& config, const CliqueSink& sink) const;

    const TemporalGraph* g_;
    CliqueState root_;
};

CliqueState closure_X(const TemporalGraph& g, const CliqueState& k);
Vertex index_i(const TemporalGraph& g, const CliqueState& k);
CliqueState parent_P(const TemporalGraph& g, const CliqueState& k);
std::vector<TimeMaximalSubset> time_maximal_subsets(const TemporalGraph& g, const CliqueState& k, Vertex v);
CliqueState child_candidate(const TemporalGraph& g, const CliqueState& k, const TimeMaximalSubset& f);
std::vector<CliqueState> enum_children(const TemporalGraph& g, const CliqueState& k, const MinerConfig& config = {});

RunStats enumerate_closed_active_cliques(const TemporalGraph& g, const MinerConfig& config, const CliqueSink& sink);
std::vector<CliqueState> enumerate_closed_active_cliques(const TemporalGraph& g, const MinerConfig& config = {});

}  // namespace chronomine
