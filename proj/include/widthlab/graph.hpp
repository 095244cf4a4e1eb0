#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace widthlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;
using VertexMask = std::uint64_t;

inline constexpr int kMaskCapacity = 64;
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Raised for malformed or out-of-range arguments.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact solver is asked to work beyond its size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text/JSON readers; carries the offending line when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; that order is the canonical "edge index" used by witnesses that
/// are keyed per edge (band vectors, wiring walks). Graphs with at most 64
/// vertices also carry one adjacency bit row per vertex.
class Graph {
 public:
  Graph() = default;

  /// Throws ParameterError on loops, duplicate edges or out-of-range ids.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  static Graph edgeless(int n) { return Graph(n, {}); }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_[v].data(), adjacency_[v].size()};
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Index of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  bool has_rows() const { return n_ <= kMaskCapacity; }
  /// Requires has_rows().
  VertexMask row(Vertex v) const { return rows_[v]; }
  VertexMask all_mask() const {
    return n_ == 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1);
  }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexMask> rows_;
  std::vector<std::string> labels_;
};

/// Nonempty vertex sequence; consecutive entries equal or adjacent.
struct Walk {
  std::vector<Vertex> vertices;
};

bool is_walk(const Graph& g, const Walk& w);

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
VertexSet mask_to_set(VertexMask mask);
VertexMask set_to_mask(std::span<const Vertex> s);

/// Throws ParameterError when g.n() > 64.
void require_rows(const Graph& g, const char* who);

/// Relabels s (in the given order after sorting) to 0..|s|-1. Labels record
/// the original ids.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Components ordered by their smallest member; members sorted.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// BFS distances from source; kInfiniteDistance where unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// nullopt means infinity (disconnected). Throws ParameterError when n = 0.
std::optional<int> intrinsic_diameter(const Graph& g);

int max_degree(const Graph& g);

/// Vertices within distance radius of center, sorted.
VertexSet ball(const Graph& g, Vertex center, int radius);

struct Subdivision {
  Graph graph;
  /// original vertex -> vertex of the subdivided graph (identity on 0..n-1).
  std::vector<Vertex> vertex_map;
  /// per original edge index: interior vertices ordered from the smaller
  /// endpoint towards the larger one.
  std::vector<std::vector<Vertex>> interiors;
};

/// per_edge[i] is the number of edges replacing edge i (1 = unchanged).
Subdivision subdivide(const Graph& g, std::span<const int> per_edge);

/// Disjoint union; vertices of b are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph with_edge(const Graph& g, Vertex u, Vertex v);

}  // namespace widthlab
