#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "catpack/model.hpp"

namespace catpack {

using Json = nlohmann::ordered_json;

/// {"rows": [[...], ...]}; a bare array of rows is accepted on input.
Json matrix_to_json(const DegreeMatrix& m);
DegreeMatrix matrix_from_json(const Json& j);

/// {"n": int, "edges": [{"u": int, "v": int, "color": int}, ...]}, 0-based.
Json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const Json& j);

/// Whitespace-separated rows of integers, one matrix row per line.
DegreeMatrix matrix_from_text(const std::string& text);

/// Symmetric n x n table: 0 for no edge, c for an edge of color c.
ColoredGraph graph_from_adjacency_text(const std::string& text);
std::string adjacency_text(const ColoredGraph& g);

/// JSON when the first non-blank character is '{' or '[', text otherwise.
/// Throws FormatError on malformed input.
DegreeMatrix parse_matrix(const std::string& input);
ColoredGraph parse_graph(const std::string& input);

Json trace_to_json(const ConstructionTrace& t);

/// {"status": "exists"|"not_exists"|"unknown", ...}.
Json outcome_to_json(const RealizationOutcome& o, bool with_trace);

/// Graphviz text: nodes labelled 1..n, edges in (u, v) order, colored from
/// a fixed palette and labelled with their color index.
std::string to_dot(const ColoredGraph& g);

}  // namespace catpack
