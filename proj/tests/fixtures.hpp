#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "chronomine/temporal_graph.hpp"

namespace fixtures {

inline std::filesystem::path dir() { return CHRONOMINE_FIXTURE_DIR; }
inline std::filesystem::path golden_dir() { return CHRONOMINE_GOLDEN_DIR; }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline chronomine::TemporalGraph graph_a() { return chronomine::TemporalGraph::parse("1 2 1 2\n2 3 2 3\n"); }
inline chronomine::TemporalGraph triangle() { return chronomine::TemporalGraph::parse("1 2 1 6\n1 3 1 4\n2 3 1 4\n"); }

}  // namespace fixtures
