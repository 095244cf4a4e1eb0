#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/decomposition.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/layout.hpp"

namespace widthlab {

/// A map source -> target claimed to be kappa-regular.
struct RegularMapCert {
  Graph source;
  Graph target;
  std::vector<Vertex> map;
  int kappa = 1;
};

/// Empty iff the map is total, edge-wise kappa-Lipschitz and every fibre has
/// at most kappa points.
std::vector<std::string> verify_regular(const RegularMapCert& cert);

/// Restriction to the induced subgraph of the source on `vertices`; the new
/// source records original ids in its labels. Still kappa-regular.
RegularMapCert restrict_map(const RegularMapCert& cert, std::span<const Vertex> vertices);

/// Random kappa-regular map built greedily in BFS order of the source;
/// nullopt if every attempt gets stuck.
std::optional<RegularMapCert> random_regular_map(const Graph& source, const Graph& target,
                                                 int kappa, Rng& rng, int attempts = 50);

/// Lexicographically least shortest path from a to b (by vertex sequence).
/// Throws ParameterError if b is unreachable.
std::vector<Vertex> lex_geodesic(const Graph& g, Vertex a, Vertex b);

/// The comparison graph of the whole source under cert: image vertices plus
/// the chosen geodesic between the images of every source edge.
struct ComparisonGraph {
  Graph graph;                    ///< local ids; labels hold target ids
  std::vector<Vertex> target_of;  ///< local -> target
  std::vector<Vertex> local_of;   ///< target -> local, or -1
  std::vector<Vertex> image;      ///< source vertex -> local id of its image
  /// per source edge (source.edges() order): the geodesic, local ids, from
  /// the image of the smaller-id end
  std::vector<std::vector<Vertex>> walks;
  /// per local vertex: number of walks through it
  std::vector<int> walk_load;
  /// per local edge: number of walks using it
  std::vector<int> edge_load;
};

ComparisonGraph comparison_graph(const RegularMapCert& cert);

/// Instance-level checks of the size and load bounds.
struct ComparisonReport {
  int guest_vertices = 0, guest_edges = 0, vertices = 0;
  bool lower_size_ok = false;   ///< n <= kappa |V|
  bool middle_size_ok = false;  ///< |V| <= n + (kappa-1) m
  bool upper_size_ok = false;   ///< 2|V| <= (2 + (kappa-1) Delta) n
  int max_walk_load = 0;
  BigInt load_bound;            ///< kappa Delta (1 + Delta_Y)^kappa
  bool load_ok = false;
};

ComparisonReport check_comparison(const RegularMapCert& cert, const ComparisonGraph& cg);

/// f sorted by (g(phi(v)), v): f(v) <= f(v') implies g(phi v) <= g(phi v').
LinearOrdering pullback_ordering(const LinearOrdering& g_order, const RegularMapCert& cert,
                                 const ComparisonGraph& cg);

struct PullbackReport {
  /// Guest edges with |f(v)-f(v')| > kappa^2 (the bandwidth claim's scope).
  int long_edges = 0;
  /// Long edges for which no comparison-graph edge ww' with
  /// d(phi v, w) <= kappa has |f(v)-f(v')| <= kappa^2 |g(w)-g(w')|.
  int bandwidth_claim_failures = 0;
  /// Long edges where the weaker bound kappa^2 |g(w)-g(w')| >= l + 1 - kappa fails.
  int corrected_claim_failures = 0;
  /// max over comparison edges of the number of guest walks through it.
  int collision_constant = 0;
  /// positions k with f_k > C g_{a_k} + kappa Delta_X
  int cutwidth_claim_failures = 0;
  int positions = 0;
};

PullbackReport check_pullback(const RegularMapCert& cert, const ComparisonGraph& cg,
                              const LinearOrdering& g_order, const LinearOrdering& f);

/// Pulls a decomposition of the comparison graph back to the source:
/// X_g = {x : X'_g meets phibar(x)} with phibar(x) = phi(x) plus the chosen
/// geodesics of the edges at x.
GDecomposition pullback_decomposition(const GDecomposition& d_prime, const RegularMapCert& cert,
                                      const ComparisonGraph& cg);

struct InflationReport {
  /// max over comparison vertices y of |{x : y in phibar(x)}|
  int measured = 0;
  BigInt bound_power_of_sum;  ///< kappa (1 + Delta_X)^(2 kappa)
  BigInt bound_sum_of_power;  ///< kappa (1 + Delta_X^(2 kappa))
  /// bags with |X_g| > measured |X'_g| (must be 0)
  int measured_failures = 0;
  int power_of_sum_failures = 0;
  int sum_of_power_failures = 0;
};

InflationReport check_inflation(const GDecomposition& pulled, const GDecomposition& d_prime,
                                const RegularMapCert& cert, const ComparisonGraph& cg);

/// Moves a decomposition over G to G' along a regular map G -> G': the
/// support of x becomes the comparison graph of its old support.
struct HostTransfer {
  GDecomposition decomposition;
  /// max(contributors of any g', preimages of any g under the argmax choice)
  int overlap_constant = 0;
};

HostTransfer host_transfer_decomposition(const GDecomposition& d, const RegularMapCert& host_map);

}  // namespace widthlab
