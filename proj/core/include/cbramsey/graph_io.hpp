#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cbramsey/graph.hpp"

namespace cbramsey {

/// graph6 without the optional ">>graph6<<" header and without a newline.
std::string to_graph6(const Graph& g);
/// Accepts one graph6 line; surrounding whitespace is ignored.
/// Throws Error(ParseError) on malformed or truncated input.
Graph from_graph6(std::string_view text);

/// {"order": N, "edges": [[u, v], ...]} with u < v in lexicographic order.
nlohmann::ordered_json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Reads a graph file, choosing the format from content: a leading '{' with
/// a quoted key means JSON, anything else graph6. Throws Error(ParseError) or std::runtime_error
/// for unreadable files.
Graph read_graph_file(const std::string& path);

}  // namespace cbramsey
