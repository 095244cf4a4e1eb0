#pragma once

#include "widthlab/coarse_maps.hpp"
#include "widthlab/decomposition.hpp"
#include "widthlab/graph_io.hpp"
#include "widthlab/layout.hpp"
#include "widthlab/wiring.hpp"

namespace widthlab {

/// Reads a whole file; ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);
json read_json_file(const std::string& path);

/// {"host": graph, "guest": graph, "bags": [[...], ...]}. The readers also
/// accept a command output that wraps the artifact under its own name.
json to_json(const GDecomposition& d);
GDecomposition decomposition_from_json(const json& j);

/// {"guest": graph, "host": graph, "vertex_map": [...], "walks": [[...], ...]}
json to_json(const CoarseWiring& w);
CoarseWiring wiring_from_json(const json& j);

/// {"kappa": k, "map": [...]}; graphs travel separately.
json map_to_json(const RegularMapCert& cert);
RegularMapCert map_from_json(const json& j, const Graph& source, const Graph& target);

/// Vertex sequence (vertex at position 1 first).
json to_json(const LinearOrdering& f);

/// Exact value as a decimal string plus the p-th root as a number.
json to_json(const LayoutValue& v);

}  // namespace widthlab
