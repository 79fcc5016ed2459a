#pragma once

#include <optional>
#include <vector>

#include "chronomine/interval.hpp"

namespace chronomine {

/// An edge set K with cached tau(K) and sorted V(K). Edge ids are kept
/// sorted; since ids follow the global (u, v, start) order, comparing
/// edge-id vectors is comparing edge sets in that order.
///
/// tau is nullopt for an inactive edge set. The empty set (the silent
/// root) carries the full ground interval.
struct CliqueState {
    std::vector<EdgeId> edges;
    std::optional<Interval> tau;
    std::vector<Vertex> vertices;

    bool empty() const noexcept { return edges.empty(); }
    bool active() const noexcept { return tau.has_value(); }
    TimeStamp duration() const noexcept { return tau ? tau->length() : 0; }

    friend bool operator==(const CliqueState& a, const CliqueState& b) { return a.edges == b.edges; }
};

/// Set order where F < F' iff the smallest element of the symmetric
/// difference belongs to F. Differs from std::lexicographical_compare
/// on prefixes: a strict superset precedes its subset.
bool lex_less(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) noexcept;

}  // namespace chronomine
