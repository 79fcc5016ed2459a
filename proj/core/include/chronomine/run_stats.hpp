#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

namespace chronomine {

struct RunStats {
    std::size_t outputs = 0;
    std::chrono::nanoseconds wall_time{0};
    /// Longest gap between consecutive emissions (first gap measured from start).
    std::chrono::nanoseconds max_delay{0};
    /// Peak number of records the enumerator retained at once.
    std::size_t peak_tracked_state = 0;
    /// Deepest search-tree level reached (root = 0). Clique miner only.
    std::size_t max_depth = 0;
    /// Every inter-emission gap, filled only when requested.
    std::vector<std::chrono::nanoseconds> delays;
};

/// Records emission timestamps into a RunStats.
class DelayClock {
public:
    explicit DelayClock(RunStats& stats, bool keep_all)
        : stats_(stats), keep_all_(keep_all), start_(std::chrono::steady_clock::now()), last_(start_) {}

    void tick() {
        const auto now = std::chrono::steady_clock::now();
        const auto gap = std::chrono::duration_cast<std::chrono::nanoseconds>(now - last_);
        if (gap > stats_.max_delay) stats_.max_delay = gap;
        if (keep_all_) stats_.delays.push_back(gap);
        last_ = now;
        ++stats_.outputs;
    }

    void finish() {
        stats_.wall_time =
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    RunStats& stats_;
    bool keep_all_;
    std::chrono::steady_clock::time_point start_;
    std::chrono::steady_clock::time_point last_;
};

}  // namespace chronomine
