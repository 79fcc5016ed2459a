#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace chronomine {

using TimeStamp = std::int32_t;
using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Closed integer interval [start, end] of time stamps. Never empty: an
/// empty intersection is reported as std::nullopt, not as start > end.
struct Interval {
    TimeStamp start = 1;
    TimeStamp end = 1;

    constexpr TimeStamp length() const noexcept { return end - start + 1; }
    constexpr bool contains(TimeStamp t) const noexcept { return start <= t && t <= end; }
    constexpr bool contains(const Interval& other) const noexcept {
        return start <= other.start && other.end <= end;
    }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

/// Checked constructor; throws UsageError unless 1 <= start <= end.
Interval make_interval(TimeStamp start, TimeStamp end);

/// The ground set {1, ..., t_max}.
struct GroundTimeSet {
    TimeStamp t_max = 1;

    constexpr Interval full() const noexcept { return {1, t_max}; }
    constexpr bool contains(const Interval& i) const noexcept { return i.start >= 1 && i.end <= t_max; }

    friend constexpr bool operator==(const GroundTimeSet&, const GroundTimeSet&) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b) noexcept;
std::optional<Interval> intersect(const std::optional<Interval>& a, const Interval& b) noexcept;

/// Fold of intersect; the empty fold is the whole ground set.
std::optional<Interval> intersect_all(std::span<const Interval> intervals, const GroundTimeSet& ground) noexcept;

/// Sorts and merges overlapping or adjacent intervals into maximal,
/// pairwise disjoint intervals separated by at least one missing stamp.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals);

struct EdgeEndpoints {
    Vertex u = 0;
    Vertex v = 0;
    friend constexpr bool operator==(const EdgeEndpoints&, const EdgeEndpoints&) = default;
};

/// Splits a multi-interval edge into one parallel edge per maximal merged
/// interval. Throws ParseError if an interval leaves the ground set.
std::vector<std::pair<EdgeEndpoints, Interval>> normalize_multi_interval(EdgeEndpoints endpoints,
                                                                          std::vector<Interval> intervals,
                                                                          const GroundTimeSet& ground);

/// A time stamp set used as a closure window. The default-constructed
/// window is the empty set, which every edge covers.
class TimeWindow {
public:
    TimeWindow() = default;
    explicit TimeWindow(Interval span) : span_(span) {}

    static TimeWindow at(TimeStamp t) { return TimeWindow(Interval{t, t}); }

    bool empty() const noexcept { return !span_.has_value(); }
    const std::optional<Interval>& span() const noexcept { return span_; }

    /// window ⊆ tau
    bool covered_by(const Interval& tau) const noexcept { return !span_ || tau.contains(*span_); }

private:
    std::optional<Interval> span_;
};

}  // namespace chronomine
