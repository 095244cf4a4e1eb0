#include "widthlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace widthlab {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n < 0) throw ParameterError("graph: negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw ParameterError("graph: label count does not match vertex count");
  }
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("graph: edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "} out of range");
    }
    if (u == v) throw ParameterError("graph: self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ParameterError("graph: duplicate edge {" + std::to_string(dup->first) +
                         "," + std::to_string(dup->second) + "}");
  }
  adjacency_.assign(n, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  if (n <= kMaskCapacity) {
    rows_.assign(n, 0);
    for (auto [u, v] : edges_) {
      rows_[u] |= bit(v);
      rows_[v] |= bit(u);
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (has_rows()) return (rows_[u] >> v) & 1U;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool is_walk(const Graph& g, const Walk& w) {
  if (w.vertices.empty()) return false;
  for (Vertex v : w.vertices) {
    if (v < 0 || v >= g.n()) return false;
  }
  for (std::size_t i = 1; i < w.vertices.size(); ++i) {
    Vertex a = w.vertices[i - 1];
    Vertex b = w.vertices[i];
    if (a != b && !g.adjacent(a, b)) return false;
  }
  return true;
}

VertexSet mask_to_set(VertexMask mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask set_to_mask(std::span<const Vertex> s) {
  VertexMask mask = 0;
  for (Vertex v : s) mask |= bit(v);
  return mask;
}

void require_rows(const Graph& g, const char* who) {
  if (!g.has_rows()) {
    throw CapacityError(std::string(who) + ": graph has more than 64 vertices");
  }
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("induced_subgraph: repeated vertex");
  }
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Vertex v = sorted[i];
    if (v < 0 || v >= g.n()) {
      throw ParameterError("induced_subgraph: vertex " + std::to_string(v) +
                           " out of range");
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (Vertex v : sorted) labels.push_back(std::to_string(v));
  return Graph(static_cast<int>(sorted.size()), std::move(edges), std::move(labels));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> seen(g.n(), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.n(), kInfiniteDistance);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> intrinsic_diameter(const Graph& g) {
  if (g.n() == 0) throw ParameterError("intrinsic_diameter: empty graph");
  int best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d == kInfiniteDistance) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexSet ball(const Graph& g, Vertex center, int radius) {
  if (center < 0 || center >= g.n()) throw ParameterError("ball: bad center");
  VertexSet out;
  auto dist = bfs_distances(g, center);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] <= radius) out.push_back(v);
  }
  return out;
}

Subdivision subdivide(const Graph& g, std::span<const int> per_edge) {
  if (static_cast<int>(per_edge.size()) != g.m()) {
    throw ParameterError("subdivide: need one entry per edge");
  }
  Subdivision out;
  int next = g.n();
  std::vector<Edge> edges;
  for (int i = 0; i < g.m(); ++i) {
    if (per_edge[i] < 1) throw ParameterError("subdivide: entries must be >= 1");
    auto [u, v] = g.edges()[i];
    std::vector<Vertex> interior;
    Vertex prev = u;
    for (int k = 1; k < per_edge[i]; ++k) {
      interior.push_back(next);
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
    out.interiors.push_back(std::move(interior));
  }
  out.graph = Graph(next, std::move(edges));
  out.vertex_map.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out.vertex_map[v] = v;
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), std::move(edges));
}

Graph with_edge(const Graph& g, Vertex u, Vertex v) {
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.n(), std::move(edges), g.labels());
}

}  // namespace widthlab
