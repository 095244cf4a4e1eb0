#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/layout.hpp"
#include "widthlab/separation.hpp"

namespace widthlab {

/// Bags X_g indexed by host vertices g, each a sorted set of guest vertices.
struct GDecomposition {
  Graph host;
  Graph guest;
  std::vector<VertexSet> bags;
};

/// Empty when d is a valid host-decomposition of its guest. Each entry names
/// the violated condition (cover / edge cover / connectivity) and the
/// offending vertex or edge. Throws ParameterError for malformed indices.
std::vector<std::string> validate(const GDecomposition& d);

/// Host vertices whose bag contains guest vertex x.
VertexSet support(const GDecomposition& d, Vertex x);

/// Sum of |X_g|^p, or the max bag size for p = inf. Throws on invalid d.
LayoutValue width(const GDecomposition& d, PNorm p);
int max_bag(const GDecomposition& d);

/// One bag (at host vertex 0) holding every guest vertex.
GDecomposition trivial_decomposition(const Graph& guest, const Graph& host);

/// Depth-first preorder (smallest neighbour first, roots by id).
std::vector<Vertex> dfs_preorder(const Graph& g);

/// Decomposition over the m x m grid (m = max(n, 1)) with L-shaped supports;
/// grid vertex (a, b), 1-based, has id (a-1)m + (b-1) and row/column a refers
/// to x_a = enumeration[a-1]. With the default depth-first enumeration every
/// bag has at most Delta + max(Delta, 1) vertices; an arbitrary enumeration
/// only guarantees 2 Delta + 2.
GDecomposition grid_decomposition(const Graph& guest,
                                  std::optional<std::vector<Vertex>> enumeration = std::nullopt);

/// Moves d onto a subdivision of its host: original host vertices keep their
/// bags, interior vertices of a subdivided edge g0g1 get X_g0 ∩ X_g1.
GDecomposition subdivision_transfer(const GDecomposition& d, const Subdivision& sub);

/// Tree decomposition from an elimination order: bag of v is v plus its
/// later neighbours in the filled graph, joined to the earliest later one.
/// Nested neighbouring bags are contracted.
GDecomposition decomposition_from_elimination(const EliminationCertificate& cert,
                                              const Graph& guest);

/// Path decomposition from a linear ordering: bag i is the boundary of the
/// first i-1 vertices plus the i-th. Max bag = vertex separation + 1.
GDecomposition path_decomposition_from_ordering(const Graph& guest, const LinearOrdering& f);

inline constexpr int kWidthSearchLimit = 6;

struct WidthSearchResult {
  /// nullopt: no decomposition satisfies the slim constraint.
  std::optional<LayoutValue> value;
  std::optional<GDecomposition> decomposition;
  std::uint64_t nodes_explored = 0;
};

/// Exact minimum over all host-decompositions (guest and host <= 6 vertices),
/// optionally restricted to bags of size <= slim.
WidthSearchResult min_width_search(const Graph& guest, const Graph& host, PNorm p,
                                   std::optional<int> slim = std::nullopt);

}  // namespace widthlab
