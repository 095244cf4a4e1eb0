#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "widthlab/graph.hpp"

namespace widthlab {

using json = nlohmann::ordered_json;

/// "n m" header, then m lines "u v". Blank lines and lines starting with
/// '#' are skipped. Loops and duplicate edges are rejected with the line
/// number in the ParseError message.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// {"n": n, "edges": [[u, v], ...]}; optional "labels" array.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// Picks the format from the first non-blank character ('{' means JSON).
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

}  // namespace widthlab
