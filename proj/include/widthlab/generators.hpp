#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

/// Deterministic random source used for every seeded construction.
///
/// The engine is std::mt19937_64 seeded with splitmix64(seed). Range
/// reduction is done here by rejection sampling rather than through the
/// <random> distributions, whose algorithms are implementation-defined.
/// split(i) derives an independent stream from (seed, i) so that corpus
/// item i never depends on how many draws item i-1 consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }
  Rng split(std::uint64_t stream) const;

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

enum class Family {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  binary_tree,
  tree_ball,
  grid_box,
  hypercube,
  dl_ball,
  random_bounded_degree,
};

std::string to_string(Family f);
/// Accepts the canonical names above; throws ParameterError otherwise.
Family parse_family(const std::string& name);

/// Parameters per family:
///   path [n], cycle [n>=3], star [r>=1], complete [n],
///   complete_bipartite [a, b], binary_tree [depth],
///   tree_ball [degree>=2, radius], grid_box [dim, side_1..side_dim],
///   hypercube [dim], dl_ball [m>=2, n>=2, radius],
///   random_bounded_degree [n, max_degree, target_edges] (seed required).
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> parameters;
  std::optional<std::uint64_t> seed;
};

Graph generate(const FamilySpec& spec);

/// Vertex around which profile balls are taken (root or geometric centre).
Vertex family_basepoint(const FamilySpec& spec);

/// Induced ball of the given radius around family_basepoint; radius < 0
/// returns the whole generated graph. Labels of the result keep the
/// generator's labels.
Graph family_ball(const FamilySpec& spec, int radius);

/// Random graph on n vertices: each of the C(n,2) pairs kept independently
/// with probability num/den.
Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng& rng);

/// Random connected graph: random recursive tree under a random labeling,
/// plus up to extra_edges further random edges.
Graph random_connected_graph(int n, int extra_edges, Rng& rng);

}  // namespace widthlab
