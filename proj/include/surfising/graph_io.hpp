#pragma once

#include <string>

#include <json.hpp>

#include "surfising/embedded_graph.hpp"

namespace surfising {

/// Reads a drawing document:
///
///   { "genus": g,
///     "vertices": [{"id", "x", "y"}],
///     "edges": [{"id", "u", "v", "polyline": [[x,y],...], "crossings": [+-i,...],
///                "weight": name or number, "dual_length": number}],
///     "bipartition": {"white": [ids], "black": [ids]} }
///
/// Ids may be integers or strings. Every drawing invariant is validated; a
/// violation throws std::invalid_argument naming the offending item.
EmbeddedGraph load_embedded_graph(const nlohmann::json& doc, ValidationOptions opt = {});
EmbeddedGraph load_embedded_graph_file(const std::string& path, ValidationOptions opt = {});

nlohmann::json to_json(const EmbeddedGraph& g);

}  // namespace surfising
