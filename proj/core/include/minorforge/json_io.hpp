#pragma once

#include <json.hpp>

#include "minorforge/graph.hpp"

namespace minorforge {

using Json = nlohmann::ordered_json;

/// Canonical graph JSON: {"n": <int>, "edges": [[u,v],...]}, keys in this
/// order, each pair normalized to u <= v, edges sorted lexicographically.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json minor_model_to_json(const MinorModel& m);
MinorModel minor_model_from_json(const Json& j);

std::string dump_canonical(const Json& j);

}  // namespace minorforge
