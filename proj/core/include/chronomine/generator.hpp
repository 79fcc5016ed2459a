#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "chronomine/temporal_graph.hpp"

namespace chronomine {

struct GenParams {
    Vertex vertices = 5;
    std::size_t pairs = 6;  // distinct vertex pairs, before interval splitting
    TimeStamp t_max = 10;
    std::uint64_t seed = 1;
    double multi_interval = 0.0;  // chance that a pair gets two disjoint intervals
    bool directed = false;
};

/// Deterministic edge-list text with "# vertices" and "# tmax" headers.
/// Throws UsageError when `pairs` exceeds the number of vertex pairs.
std::string generate_edge_list(const GenParams& params);

TemporalGraph generate_graph(const GenParams& params);

/// Instance family used by the random checks: n in [2, max_n], pairs in
/// [1, min(max_pairs, n(n-1)/2)], t_max in [1, max_tmax], all drawn from `seed`.
GenParams random_family_params(std::uint64_t seed, Vertex max_n = 9, std::size_t max_pairs = 18,
                               TimeStamp max_tmax = 12, double multi_interval = 0.2, bool directed = false);

/// mt19937_64 with bounded draws done by hand, since the std
/// distributions differ between standard libraries.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Uniform double in [0, 1).
    double unit();

private:
    std::mt19937_64 engine_;
};

}  // namespace chronomine
