#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthlab/decomposition.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

/// Vertex map guest -> host plus one host walk per guest edge (guest.edges()
/// order), each running from the image of the smaller end to the larger.
struct CoarseWiring {
  Graph guest;
  Graph host;
  std::vector<Vertex> vertex_map;
  std::vector<Walk> walks;
};

/// Empty when the wiring is structurally valid (sizes, endpoints, continuity).
/// Throws ParameterError for out-of-range vertex ids.
std::vector<std::string> validate(const CoarseWiring& w);

struct WiringLoad {
  int fiber_max = 0;
  /// max over host vertices of the number of walks visiting it (once per walk)
  int walk_max = 0;
  /// max over host edges of the number of walks traversing it (reported only)
  int edge_max = 0;
  /// vertices in the image: vertex images together with every walk vertex
  int volume = 0;
};

/// Throws ParameterError on a structurally invalid wiring.
WiringLoad load(const CoarseWiring& w);

/// True when max(fiber_max, walk_max) <= k.
bool is_coarse_wiring(const CoarseWiring& w, int k);

/// X_g = {x : g in fbar(x)}, fbar(x) = f(x) plus the walks of the edges at x.
GDecomposition decomposition_from_wiring(const CoarseWiring& w);

/// f(x) = smallest host vertex of the support G_x; the walk of xy runs inside
/// G_x to the smallest common z, then inside G_y (shortest paths).
CoarseWiring wiring_from_decomposition(const GDecomposition& d);

/// Uniformly random vertex map with lexicographic geodesics as walks.
/// Throws ParameterError unless the host is connected and nonempty.
CoarseWiring random_wiring(const Graph& guest, const Graph& host, Rng& rng);

inline constexpr int kWiringLimit = 6;

struct WiringSearchResult {
  /// nullopt: no coarse k-wiring exists
  std::optional<int> volume;
  std::optional<CoarseWiring> wiring;
  std::uint64_t nodes_explored = 0;
};

/// Exact minimal volume of a coarse k-wiring (guest and host <= 6 vertices).
/// Walks are restricted to simple paths, which loses nothing: shortcutting
/// a walk never raises a load or the volume.
WiringSearchResult min_volume_wiring(const Graph& guest, const Graph& host, int k);

/// Minimal k admitting a coarse k-wiring; nullopt when none exists (empty
/// host, nonempty guest).
std::optional<int> para(const Graph& guest, const Graph& host);

}  // namespace widthlab
