#pragma once

#include <string>

#include <json.hpp>

#include "chronomine/clique_state.hpp"
#include "chronomine/connected_miner.hpp"
#include "chronomine/run_stats.hpp"
#include "chronomine/temporal_graph.hpp"

namespace chronomine::cli {

using Json = nlohmann::ordered_json;

/// Vertex and edge arrays use the input labels and are sorted ascending.
Json to_json(const TemporalGraph& g, const ConnectedRecord& r);
Json to_json(const TemporalGraph& g, const CliqueState& k);
Json to_json(const RunStats& stats);

}  // namespace chronomine::cli
