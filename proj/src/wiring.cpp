#include "widthlab/wiring.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "widthlab/coarse_maps.hpp"

namespace widthlab {

namespace {

std::string edge_name(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void require_valid(const CoarseWiring& w) {
  auto problems = validate(w);
  if (!problems.empty()) throw ParameterError("invalid wiring: " + problems.front());
}

// Shortest path from a to b using only vertices marked in `inside`.
std::vector<Vertex> path_within(const Graph& g, const std::vector<char>& inside, Vertex a, Vertex b) {
  std::vector<Vertex> parent(g.n(), -1);
  std::vector<Vertex> queue{a};
  parent[a] = a;
  for (std::size_t i = 0; i < queue.size() && parent[b] < 0; ++i) {
    for (Vertex w : g.neighbors(queue[i])) {
      if (inside[w] && parent[w] < 0) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  if (parent[b] < 0) throw ParameterError("support is not connected");
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::string> validate(const CoarseWiring& w) {
  std::vector<std::string> out;
  if (static_cast<int>(w.vertex_map.size()) != w.guest.n()) {
    out.push_back("vertex map: expected " + std::to_string(w.guest.n()) + " entries");
    return out;
  }
  if (static_cast<int>(w.walks.size()) != w.guest.m()) {
    out.push_back("walks: expected " + std::to_string(w.guest.m()) + " walks");
    return out;
  }
  for (Vertex g : w.vertex_map) {
    if (g < 0 || g >= w.host.n()) throw ParameterError("vertex map image out of range");
  }
  for (int e = 0; e < w.guest.m(); ++e) {
    const auto& vs = w.walks[e].vertices;
    const Edge edge = w.guest.edges()[e];
    for (Vertex g : vs) {
      if (g < 0 || g >= w.host.n()) throw ParameterError("walk vertex out of range");
    }
    if (vs.empty()) {
      out.push_back("walk: edge " + edge_name(edge) + " has an empty walk");
    } else if (vs.front() != w.vertex_map[edge.first] || vs.back() != w.vertex_map[edge.second]) {
      out.push_back("walk: edge " + edge_name(edge) + " does not join the images of its ends");
    } else if (!is_walk(w.host, w.walks[e])) {
      out.push_back("continuity: walk of edge " + edge_name(edge) + " jumps between non-adjacent vertices");
    }
  }
  return out;
}

WiringLoad load(const CoarseWiring& w) {
  require_valid(w);
  const int hn = w.host.n();
  std::vector<int> fibre(hn, 0), walks(hn, 0), edges(w.host.m(), 0);
  std::vector<char> used(hn, 0);
  for (Vertex g : w.vertex_map) {
    ++fibre[g];
    used[g] = 1;
  }
  for (const Walk& walk : w.walks) {
    std::vector<Vertex> vs = walk.vertices;
    for (Vertex g : vs) used[g] = 1;
    std::vector<int> hit_edges;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      if (vs[i] != vs[i - 1]) hit_edges.push_back(w.host.edge_index(vs[i - 1], vs[i]));
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (Vertex g : vs) ++walks[g];
    std::sort(hit_edges.begin(), hit_edges.end());
    hit_edges.erase(std::unique(hit_edges.begin(), hit_edges.end()), hit_edges.end());
    for (int e : hit_edges) ++edges[e];
  }
  WiringLoad r;
  for (Vertex g = 0; g < hn; ++g) {
    r.fiber_max = std::max(r.fiber_max, fibre[g]);
    r.walk_max = std::max(r.walk_max, walks[g]);
    r.volume += used[g];
  }
  for (int c : edges) r.edge_max = std::max(r.edge_max, c);
  return r;
}

bool is_coarse_wiring(const CoarseWiring& w, int k) {
  const auto l = load(w);
  return std::max(l.fiber_max, l.walk_max) <= k;
}

GDecomposition decomposition_from_wiring(const CoarseWiring& w) {
  require_valid(w);
  std::vector<std::vector<char>> in(w.host.n(), std::vector<char>(w.guest.n(), 0));
  for (Vertex x = 0; x < w.guest.n(); ++x) in[w.vertex_map[x]][x] = 1;
  for (int e = 0; e < w.guest.m(); ++e) {
    auto [x, y] = w.guest.edges()[e];
    for (Vertex g : w.walks[e].vertices) in[g][x] = in[g][y] = 1;
  }
  GDecomposition d{w.host, w.guest, std::vector<VertexSet>(w.host.n())};
  for (Vertex g = 0; g < w.host.n(); ++g) {
    for (Vertex x = 0; x < w.guest.n(); ++x) {
      if (in[g][x]) d.bags[g].push_back(x);
    }
  }
  return d;
}

CoarseWiring wiring_from_decomposition(const GDecomposition& d) {
  auto problems = validate(d);
  if (!problems.empty()) throw ParameterError("invalid decomposition: " + problems.front());
  const int hn = d.host.n();
  std::vector<std::vector<char>> inside(d.guest.n(), std::vector<char>(hn, 0));
  CoarseWiring w{d.guest, d.host, std::vector<Vertex>(d.guest.n(), -1), {}};
  for (Vertex g = 0; g < hn; ++g) {
    for (Vertex x : d.bags[g]) {
      inside[x][g] = 1;
      if (w.vertex_map[x] < 0) w.vertex_map[x] = g;
    }
  }
  for (auto [x, y] : d.guest.edges()) {
    Vertex z = 0;
    while (!(inside[x][z] && inside[y][z])) ++z;
    auto walk = path_within(d.host, inside[x], w.vertex_map[x], z);
    auto rest = path_within(d.host, inside[y], z, w.vertex_map[y]);
    walk.insert(walk.end(), rest.begin() + 1, rest.end());
    w.walks.push_back({std::move(walk)});
  }
  return w;
}

CoarseWiring random_wiring(const Graph& guest, const Graph& host, Rng& rng) {
  if (host.n() == 0 || !is_connected(host)) throw ParameterError("host must be connected and nonempty");
  CoarseWiring w{guest, host, std::vector<Vertex>(guest.n()), {}};
  for (Vertex& g : w.vertex_map) g = static_cast<Vertex>(rng.below(host.n()));
  for (auto [x, y] : guest.edges()) w.walks.push_back({lex_geodesic(host, w.vertex_map[x], w.vertex_map[y])});
  return w;
}

// ---------------------------------------------------------------- exact search

namespace {

// Simple paths a -> b for every ordered pair, shortest first, then lexicographic.
std::vector<std::vector<std::vector<std::vector<Vertex>>>> all_simple_paths(const Graph& h) {
  const int n = h.n();
  std::vector<std::vector<std::vector<std::vector<Vertex>>>> out(
      n, std::vector<std::vector<std::vector<Vertex>>>(n));
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  std::function<void(Vertex)> extend = [&](Vertex v) {
    path.push_back(v);
    on[v] = 1;
    out[path.front()][v].push_back(path);
    for (Vertex w : h.neighbors(v)) {
      if (!on[w]) extend(w);
    }
    on[v] = 0;
    path.pop_back();
  };
  for (Vertex a = 0; a < n; ++a) extend(a);
  for (auto& row : out) {
    for (auto& paths : row) {
      std::sort(paths.begin(), paths.end(), [](const auto& p, const auto& q) {
        return p.size() != q.size() ? p.size() < q.size() : p < q;
      });
    }
  }
  return out;
}

class VolumeSearch {
 public:
  VolumeSearch(const Graph& guest, const Graph& host, int k)
      : guest_(guest), host_(host), k_(k), paths_(all_simple_paths(host)),
        map_(guest.n(), -1), walks_(guest.m()), fibre_(host.n(), 0),
        load_(host.n(), 0), use_(host.n(), 0) {
    // guest vertices in BFS order; each edge is routed once both ends are placed
    std::vector<char> seen(guest.n(), 0);
    for (Vertex r = 0; r < guest.n(); ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      std::size_t head = order_.size();
      order_.push_back(r);
      for (; head < order_.size(); ++head) {
        for (Vertex w : guest.neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
  }

  WiringSearchResult run() {
    WiringSearchResult r;
    if (guest_.n() > 0 && host_.n() == 0) return r;
    incident_.assign(guest_.n(), 0);
    later_edges_.assign(guest_.n(), {});
    std::vector<int> rank(guest_.n());
    for (int i = 0; i < guest_.n(); ++i) rank[order_[i]] = i;
    for (int e = 0; e < guest_.m(); ++e) {
      auto [x, y] = guest_.edges()[e];
      incident_[x] |= bit(e);
      incident_[y] |= bit(e);
      later_edges_[rank[x] > rank[y] ? x : y].push_back(e);
    }
    lower_ = (guest_.n() + k_ - 1) / k_;
    best_ = host_.n() + 1;
    assign(0);
    r.nodes_explored = nodes_;
    if (best_wiring_) {
      r.volume = best_;
      r.wiring = std::move(best_wiring_);
    }
    return r;
  }

 private:
  bool done() const { return best_ <= lower_; }

  void assign(int i) {
    ++nodes_;
    if (i == guest_.n()) {
      best_ = volume_;
      best_wiring_ = CoarseWiring{guest_, host_, map_, {}};
      for (auto& w : walks_) best_wiring_->walks.push_back({w});
      return;
    }
    const Vertex x = order_[i];
    for (Vertex g = 0; g < host_.n() && !done(); ++g) {
      if (fibre_[g] == k_) continue;
      const std::uint64_t saved = load_[g];
      const std::uint64_t next = saved | incident_[x];
      if (std::popcount(next) > k_) continue;
      const int fresh = use_[g] == 0 ? 1 : 0;
      if (volume_ + fresh >= best_) continue;
      load_[g] = next;
      ++fibre_[g];
      ++use_[g];
      volume_ += fresh;
      map_[x] = g;
      route(i, x, 0);
      map_[x] = -1;
      volume_ -= fresh;
      --use_[g];
      --fibre_[g];
      load_[g] = saved;
    }
  }

  void route(int i, Vertex x, std::size_t j) {
    if (j == later_edges_[x].size()) {
      assign(i + 1);
      return;
    }
    const int e = later_edges_[x][j];
    auto [a, b] = guest_.edges()[e];
    for (const auto& path : paths_[map_[a]][map_[b]]) {
      if (done()) return;
      int fresh = 0;
      bool fits = true;
      for (Vertex g : path) {
        if (std::popcount(load_[g] | bit(e)) > k_) {
          fits = false;
          break;
        }
        fresh += use_[g] == 0 ? 1 : 0;
      }
      if (!fits || volume_ + fresh >= best_) continue;
      std::vector<std::uint64_t> saved;
      for (Vertex g : path) {
        saved.push_back(load_[g]);
        load_[g] |= bit(e);
        ++use_[g];
      }
      volume_ += fresh;
      walks_[e] = path;
      route(i, x, j + 1);
      volume_ -= fresh;
      for (std::size_t t = 0; t < path.size(); ++t) {
        load_[path[t]] = saved[t];
        --use_[path[t]];
      }
    }
  }

  const Graph& guest_;
  const Graph& host_;
  const int k_;
  std::vector<std::vector<std::vector<std::vector<Vertex>>>> paths_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> incident_;
  std::vector<std::vector<int>> later_edges_;
  std::vector<Vertex> map_;
  std::vector<std::vector<Vertex>> walks_;
  std::vector<int> fibre_;
  std::vector<std::uint64_t> load_;  // per host vertex: guest edges whose walk visits it
  std::vector<int> use_;
  int volume_ = 0;
  int lower_ = 0;
  int best_ = 0;
  std::optional<CoarseWiring> best_wiring_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

WiringSearchResult min_volume_wiring(const Graph& guest, const Graph& host, int k) {
  if (k < 1) throw ParameterError("k must be positive");
  if (guest.n() > kWiringLimit || host.n() > kWiringLimit) {
    throw CapacityError("min_volume_wiring handles at most " + std::to_string(kWiringLimit) +
                        " guest and host vertices");
  }
  return VolumeSearch(guest, host, k).run();
}

std::optional<int> para(const Graph& guest, const Graph& host) {
  if (guest.n() == 0) return 1;
  if (host.n() == 0) return std::nullopt;
  // all of the guest on one vertex is a max(n, m)-wiring
  int lo = 1, hi = std::max(guest.n(), guest.m());
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (min_volume_wiring(guest, host, mid).volume) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace widthlab
