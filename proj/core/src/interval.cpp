#include "chronomine/interval.hpp"

#include <algorithm>
#include <string>

#include "chronomine/errors.hpp"

namespace chronomine {

std::ostream& operator<<(std::ostream& os, const Interval& i) {
    return os << '[' << i.start << ',' << i.end << ']';
}

Interval make_interval(TimeStamp start, TimeStamp end) {
    if (start < 1 || end < start) {
        throw UsageError("invalid interval [" + std::to_string(start) + "," + std::to_string(end) + "]");
    }
    return {start, end};
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) noexcept {
    const TimeStamp s = std::max(a.start, b.start);
    const TimeStamp e = std::min(a.end, b.end);
    if (s > e) return std::nullopt;
    return Interval{s, e};
}

std::optional<Interval> intersect(const std::optional<Interval>& a, const Interval& b) noexcept {
    if (!a) return std::nullopt;
    return intersect(*a, b);
}

std::optional<Interval> intersect_all(std::span<const Interval> intervals, const GroundTimeSet& ground) noexcept {
    std::optional<Interval> acc = ground.full();
    for (const Interval& i : intervals) {
        acc = intersect(acc, i);
        if (!acc) break;
    }
    return acc;
}

std::vector<Interval> merge_intervals(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end());
    std::vector<Interval> merged;
    for (const Interval& i : intervals) {
        // adjacent intervals ([1,3],[4,6]) describe one contiguous activity
        if (!merged.empty() && i.start <= merged.back().end + 1) {
            merged.back().end = std::max(merged.back().end, i.end);
        } else {
            merged.push_back(i);
        }
    }
    return merged;
}

std::vector<std::pair<EdgeEndpoints, Interval>> normalize_multi_interval(EdgeEndpoints endpoints,
                                                                          std::vector<Interval> intervals,
                                                                          const GroundTimeSet& ground) {
    for (const Interval& i : intervals) {
        if (i.end < i.start || !ground.contains(i)) {
            throw ParseError(0, "interval [" + std::to_string(i.start) + "," + std::to_string(i.end) +
                                    "] outside ground set [1," + std::to_string(ground.t_max) + "]");
        }
    }
    std::vector<std::pair<EdgeEndpoints, Interval>> out;
    for (const Interval& i : merge_intervals(std::move(intervals))) out.emplace_back(endpoints, i);
    return out;
}

}  // namespace chronomine
