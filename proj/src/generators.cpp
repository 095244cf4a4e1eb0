#include "widthlab/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

namespace widthlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("Rng::below: zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
}

namespace {

constexpr std::array<std::pair<Family, const char*>, 11> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::binary_tree, "binary_tree"},
    {Family::tree_ball, "tree_ball"},
    {Family::grid_box, "grid_box"},
    {Family::hypercube, "hypercube"},
    {Family::dl_ball, "dl_ball"},
    {Family::random_bounded_degree, "random_bounded_degree"},
}};

void expect_count(const FamilySpec& spec, std::size_t count) {
  if (spec.parameters.size() != count) {
    throw ParameterError(to_string(spec.family) + ": expected " +
                         std::to_string(count) + " parameter(s)");
  }
}

void expect_at_least(int value, int lo, const char* what) {
  if (value < lo) {
    throw ParameterError(std::string(what) + " must be >= " + std::to_string(lo));
  }
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph make_tree_ball(int degree, int radius) {
  std::vector<Edge> edges;
  std::vector<std::string> labels{""};
  std::vector<int> frontier{0};
  int next = 1;
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<int> grown;
    for (int v : frontier) {
      int children = v == 0 ? degree : degree - 1;
      for (int c = 0; c < children; ++c) {
        edges.emplace_back(v, next);
        labels.push_back(labels[v] + std::to_string(c));
        grown.push_back(next++);
      }
    }
    frontier = std::move(grown);
  }
  labels[0] = "root";
  return Graph(next, std::move(edges), std::move(labels));
}

std::vector<int> grid_sides(const FamilySpec& spec) {
  if (spec.parameters.empty()) throw ParameterError("grid_box: missing dimension");
  int dim = spec.parameters[0];
  expect_at_least(dim, 1, "grid_box dimension");
  if (static_cast<int>(spec.parameters.size()) != dim + 1) {
    throw ParameterError("grid_box: expected dimension followed by that many sides");
  }
  std::vector<int> sides(spec.parameters.begin() + 1, spec.parameters.end());
  for (int s : sides) expect_at_least(s, 1, "grid_box side");
  return sides;
}

Graph make_grid(const std::vector<int>& sides) {
  const int dim = static_cast<int>(sides.size());
  long long total = 1;
  for (int s : sides) {
    total *= s;
    if (total > 2'000'000) throw ParameterError("grid_box: too many vertices");
  }
  std::vector<int> stride(dim, 1);
  for (int i = dim - 2; i >= 0; --i) stride[i] = stride[i + 1] * sides[i + 1];
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::vector<int> coord(dim, 0);
  for (int id = 0; id < total; ++id) {
    std::string label = "(";
    for (int i = 0; i < dim; ++i) {
      coord[i] = (id / stride[i]) % sides[i];
      label += (i ? "," : "") + std::to_string(coord[i]);
      if (coord[i] + 1 < sides[i]) edges.emplace_back(id, id + stride[i]);
    }
    labels.push_back(label + ")");
  }
  return Graph(static_cast<int>(total), std::move(edges), std::move(labels));
}

// A vertex of a tree in which every vertex has one predecessor (height - 1)
// and a fixed number of successors (height + 1), written relative to a root:
// climb `up` predecessors, then descend through the child indices in `down`.
// The root is child 0 of its predecessor, so a word starting with 0 after a
// climb is folded back into a shorter climb.
struct HorocyclicPoint {
  int up = 0;
  std::vector<int> down;

  int height() const { return static_cast<int>(down.size()) - up; }

  void normalize() {
    std::size_t drop = 0;
    while (up > 0 && drop < down.size() && down[drop] == 0) {
      --up;
      ++drop;
    }
    down.erase(down.begin(), down.begin() + static_cast<long>(drop));
  }

  HorocyclicPoint successor(int child) const {
    HorocyclicPoint p = *this;
    p.down.push_back(child);
    p.normalize();
    return p;
  }

  HorocyclicPoint predecessor() const {
    HorocyclicPoint p = *this;
    if (p.down.empty()) {
      ++p.up;
    } else {
      p.down.pop_back();
    }
    return p;
  }

  std::string key() const {
    std::string s = std::to_string(up) + ":";
    for (int c : down) s += static_cast<char>('a' + c);
    return s;
  }

  bool operator<(const HorocyclicPoint& o) const {
    return std::tie(up, down) < std::tie(o.up, o.down);
  }
};

// Diestel-Leader graph DL(m, n): pairs (a, b) with height(a) + height(b) = 0,
// joined when a moves to a successor while b moves to its predecessor, or the
// reverse. Degree m + n everywhere. Returns the ball of the given radius
// around (root, root), vertices numbered in BFS order.
Graph make_dl_ball(int m, int n, int radius) {
  using Point = std::pair<HorocyclicPoint, HorocyclicPoint>;
  auto neighbors = [&](const Point& p) {
    std::vector<Point> out;
    HorocyclicPoint b_pred = p.second.predecessor();
    for (int c = 0; c < m; ++c) out.emplace_back(p.first.successor(c), b_pred);
    HorocyclicPoint a_pred = p.first.predecessor();
    for (int c = 0; c < n; ++c) out.emplace_back(a_pred, p.second.successor(c));
    return out;
  };
  std::map<Point, int> index;
  std::vector<Point> order;
  std::vector<int> depth;
  index.emplace(Point{}, 0);
  order.emplace_back();
  depth.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (depth[i] == radius) continue;
    for (auto& q : neighbors(order[i])) {
      if (index.count(q)) continue;
      index.emplace(q, static_cast<int>(order.size()));
      order.push_back(q);
      depth.push_back(depth[i] + 1);
    }
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order.size(); ++i) {
    labels.push_back("(" + order[i].first.key() + "|" + order[i].second.key() + ")");
    for (auto& q : neighbors(order[i])) {
      auto it = index.find(q);
      if (it != index.end() && static_cast<int>(i) < it->second) {
        edges.emplace_back(static_cast<int>(i), it->second);
      }
    }
  }
  return Graph(static_cast<int>(order.size()), std::move(edges), std::move(labels));
}

Graph make_random_bounded_degree(int n, int max_deg, int target, Rng& rng) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  rng.shuffle(pairs);
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    if (static_cast<int>(edges.size()) >= target) break;
    if (deg[u] < max_deg && deg[v] < max_deg) {
      ++deg[u];
      ++deg[v];
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::string to_string(Family f) {
  for (auto [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (auto [fam, n] : kFamilyNames) {
    if (name == n) return fam;
  }
  throw ParameterError("unknown graph family '" + name + "'");
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.parameters;
  switch (spec.family) {
    case Family::path:
      expect_count(spec, 1);
      expect_at_least(p[0], 1, "path length");
      return make_path(p[0]);
    case Family::cycle: {
      expect_count(spec, 1);
      expect_at_least(p[0], 3, "cycle length");
      std::vector<Edge> edges;
      for (int i = 0; i < p[0]; ++i) edges.emplace_back(i, (i + 1) % p[0]);
      return Graph(p[0], std::move(edges));
    }
    case Family::star: {
      expect_count(spec, 1);
      expect_at_least(p[0], 1, "star order");
      std::vector<Edge> edges;
      for (int i = 1; i < p[0]; ++i) edges.emplace_back(0, i);
      return Graph(p[0], std::move(edges));
    }
    case Family::complete: {
      expect_count(spec, 1);
      expect_at_least(p[0], 1, "complete graph order");
      std::vector<Edge> edges;
      for (int u = 0; u < p[0]; ++u) {
        for (int v = u + 1; v < p[0]; ++v) edges.emplace_back(u, v);
      }
      return Graph(p[0], std::move(edges));
    }
    case Family::complete_bipartite: {
      expect_count(spec, 2);
      expect_at_least(p[0], 1, "complete_bipartite side");
      expect_at_least(p[1], 1, "complete_bipartite side");
      std::vector<Edge> edges;
      for (int u = 0; u < p[0]; ++u) {
        for (int v = 0; v < p[1]; ++v) edges.emplace_back(u, p[0] + v);
      }
      return Graph(p[0] + p[1], std::move(edges));
    }
    case Family::binary_tree: {
      expect_count(spec, 1);
      expect_at_least(p[0], 0, "binary_tree depth");
      if (p[0] > 20) throw ParameterError("binary_tree depth must be <= 20");
      int n = (1 << (p[0] + 1)) - 1;
      std::vector<Edge> edges;
      for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
      return Graph(n, std::move(edges));
    }
    case Family::tree_ball:
      expect_count(spec, 2);
      expect_at_least(p[0], 2, "tree_ball degree");
      expect_at_least(p[1], 0, "tree_ball radius");
      return make_tree_ball(p[0], p[1]);
    case Family::grid_box:
      return make_grid(grid_sides(spec));
    case Family::hypercube: {
      expect_count(spec, 1);
      expect_at_least(p[0], 0, "hypercube dimension");
      if (p[0] > 20) throw ParameterError("hypercube dimension must be <= 20");
      int n = 1 << p[0];
      std::vector<Edge> edges;
      for (int v = 0; v < n; ++v) {
        for (int b = 0; b < p[0]; ++b) {
          if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
        }
      }
      return Graph(n, std::move(edges));
    }
    case Family::dl_ball:
      expect_count(spec, 3);
      expect_at_least(p[0], 2, "dl_ball m");
      expect_at_least(p[1], 2, "dl_ball n");
      expect_at_least(p[2], 0, "dl_ball radius");
      if (p[2] > 8) throw ParameterError("dl_ball radius must be <= 8");
      return make_dl_ball(p[0], p[1], p[2]);
    case Family::random_bounded_degree: {
      expect_count(spec, 3);
      if (!spec.seed) throw ParameterError("random_bounded_degree requires a seed");
      expect_at_least(p[0], 1, "random graph order");
      expect_at_least(p[1], 0, "random graph max degree");
      expect_at_least(p[2], 0, "random graph edge target");
      if (p[0] > 5000) throw ParameterError("random graph order must be <= 5000");
      Rng rng(*spec.seed);
      return make_random_bounded_degree(p[0], p[1], p[2], rng);
    }
  }
  throw ParameterError("unhandled family");
}

Vertex family_basepoint(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
      return spec.parameters.empty() ? 0 : (spec.parameters[0] - 1) / 2;
    case Family::grid_box: {
      auto sides = grid_sides(spec);
      int id = 0;
      for (int s : sides) id = id * s + (s - 1) / 2;
      return id;
    }
    default:
      return 0;
  }
}

Graph family_ball(const FamilySpec& spec, int radius) {
  Graph g = generate(spec);
  if (radius < 0 || g.n() == 0) return g;
  auto members = ball(g, family_basepoint(spec), radius);
  Graph sub = induced_subgraph(g, members);
  if (!g.has_labels()) return sub;
  std::vector<std::string> labels;
  for (Vertex v : members) labels.push_back(g.labels()[v]);
  return Graph(sub.n(), sub.edges(), std::move(labels));
}

Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, int extra_edges, Rng& rng) {
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    edges.emplace_back(label[parent], label[v]);
  }
  Graph tree(n, edges);
  int missing = n * (n - 1) / 2 - (n - 1);
  int want = std::min(extra_edges, missing);
  std::vector<Edge> candidates;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v)) candidates.emplace_back(u, v);
    }
  }
  rng.shuffle(candidates);
  for (int i = 0; i < want; ++i) edges.push_back(candidates[i]);
  return Graph(n, std::move(edges));
}

}  // namespace widthlab
