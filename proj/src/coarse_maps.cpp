#include "widthlab/coarse_maps.hpp"

#include <algorithm>
#include <map>

namespace widthlab {

namespace {

// Vertices within distance r of c, with their distances (unsorted BFS order).
std::vector<std::pair<Vertex, int>> bounded_bfs(const Graph& g, Vertex c, int r) {
  std::vector<std::pair<Vertex, int>> out{{c, 0}};
  std::map<Vertex, int> dist{{c, 0}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto [v, d] = out[i];
    if (d == r) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist.emplace(w, d + 1).second) out.push_back({w, d + 1});
    }
  }
  return out;
}

int bounded_distance(const Graph& g, Vertex a, Vertex b, int r) {
  for (auto [v, d] : bounded_bfs(g, a, r)) {
    if (v == b) return d;
  }
  return kInfiniteDistance;
}

BigInt big_pow(long long base, unsigned e) { return boost::multiprecision::pow(BigInt(base), e); }

void check_map_shape(const RegularMapCert& cert) {
  if (cert.kappa < 1) throw ParameterError("kappa must be positive");
  if (static_cast<int>(cert.map.size()) != cert.source.n()) {
    throw ParameterError("map must assign every source vertex");
  }
  for (Vertex y : cert.map) {
    if (y < 0 || y >= cert.target.n()) throw ParameterError("map image out of range");
  }
}

void require_regular(const RegularMapCert& cert) {
  auto problems = verify_regular(cert);
  if (!problems.empty()) throw ParameterError("map is not regular: " + problems.front());
}

// Target geodesic for one unordered pair, oriented from a.
std::vector<Vertex> oriented_geodesic(const Graph& g, Vertex a, Vertex b) {
  if (a <= b) return lex_geodesic(g, a, b);
  auto path = lex_geodesic(g, b, a);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::string> verify_regular(const RegularMapCert& cert) {
  check_map_shape(cert);
  std::vector<std::string> out;
  std::vector<int> fibre(cert.target.n(), 0);
  for (Vertex y : cert.map) ++fibre[y];
  for (Vertex y = 0; y < cert.target.n(); ++y) {
    if (fibre[y] > cert.kappa) {
      out.push_back("fibre: target vertex " + std::to_string(y) + " has " +
                    std::to_string(fibre[y]) + " preimages");
    }
  }
  for (auto [u, v] : cert.source.edges()) {
    const int d = bounded_distance(cert.target, cert.map[u], cert.map[v], cert.kappa);
    if (d > cert.kappa) {
      out.push_back("lipschitz: source edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") maps to targets farther apart than kappa");
    }
  }
  return out;
}

RegularMapCert restrict_map(const RegularMapCert& cert, std::span<const Vertex> vertices) {
  check_map_shape(cert);
  Graph sub = induced_subgraph(cert.source, vertices);
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> map;
  for (Vertex v : sorted) map.push_back(cert.map[v]);
  return {std::move(sub), cert.target, std::move(map), cert.kappa};
}

std::optional<RegularMapCert> random_regular_map(const Graph& source, const Graph& target,
                                                 int kappa, Rng& rng, int attempts) {
  if (kappa < 1) throw ParameterError("kappa must be positive");
  if (target.n() == 0) return source.n() == 0 ? std::optional<RegularMapCert>(
                                                    RegularMapCert{source, target, {}, kappa})
                                              : std::nullopt;
  std::vector<Vertex> order;
  {
    std::vector<char> seen(source.n(), 0);
    for (Vertex r = 0; r < source.n(); ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      std::size_t head = order.size();
      order.push_back(r);
      for (; head < order.size(); ++head) {
        for (Vertex w : source.neighbors(order[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
        }
      }
    }
  }
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Vertex> map(source.n(), -1);
    std::vector<int> fibre(target.n(), 0);
    bool stuck = false;
    for (Vertex v : order) {
      std::vector<int> hits(target.n(), 0);
      int constraints = 0;
      for (Vertex u : source.neighbors(v)) {
        if (map[u] < 0) continue;
        ++constraints;
        for (auto [y, d] : bounded_bfs(target, map[u], kappa)) ++hits[y];
      }
      std::vector<Vertex> candidates;
      for (Vertex y = 0; y < target.n(); ++y) {
        if (hits[y] == constraints && fibre[y] < kappa) candidates.push_back(y);
      }
      if (candidates.empty()) {
        stuck = true;
        break;
      }
      const Vertex y = candidates[rng.below(candidates.size())];
      map[v] = y;
      ++fibre[y];
    }
    if (!stuck) return RegularMapCert{source, target, std::move(map), kappa};
  }
  return std::nullopt;
}

std::vector<Vertex> lex_geodesic(const Graph& g, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= g.n() || b >= g.n()) throw ParameterError("vertex out of range");
  const auto dist = bfs_distances(g, b);
  if (dist[a] == kInfiniteDistance) throw ParameterError("no path between the endpoints");
  std::vector<Vertex> path{a};
  while (path.back() != b) {
    for (Vertex w : g.neighbors(path.back())) {
      if (dist[w] == dist[path.back()] - 1) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

// ---------------------------------------------------------------- comparison graph

ComparisonGraph comparison_graph(const RegularMapCert& cert) {
  require_regular(cert);
  const Graph& x = cert.source;
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> cache;
  std::vector<std::vector<Vertex>> target_walks;
  for (auto [u, v] : x.edges()) {
    const Vertex a = cert.map[u];
    const Vertex b = cert.map[v];
    auto key = std::minmax(a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, lex_geodesic(cert.target, key.first, key.second)).first;
    auto path = it->second;
    if (a != key.first) std::reverse(path.begin(), path.end());
    target_walks.push_back(std::move(path));
  }
  std::vector<Vertex> verts(cert.map.begin(), cert.map.end());
  for (const auto& w : target_walks) verts.insert(verts.end(), w.begin(), w.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  ComparisonGraph cg;
  cg.target_of = verts;
  cg.local_of.assign(cert.target.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) cg.local_of[verts[i]] = static_cast<Vertex>(i);
  for (Vertex y : cert.map) cg.image.push_back(cg.local_of[y]);
  std::vector<Edge> edges;
  for (const auto& w : target_walks) {
    std::vector<Vertex> local;
    for (Vertex y : w) local.push_back(cg.local_of[y]);
    for (std::size_t i = 0; i + 1 < local.size(); ++i) {
      edges.push_back({std::min(local[i], local[i + 1]), std::max(local[i], local[i + 1])});
    }
    cg.walks.push_back(std::move(local));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> labels;
  for (Vertex y : verts) labels.push_back(std::to_string(y));
  cg.graph = Graph(static_cast<int>(verts.size()), edges, labels);

  cg.walk_load.assign(cg.graph.n(), 0);
  cg.edge_load.assign(cg.graph.m(), 0);
  for (const auto& w : cg.walks) {
    // geodesics never repeat a vertex or an edge
    for (Vertex y : w) ++cg.walk_load[y];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) ++cg.edge_load[cg.graph.edge_index(w[i], w[i + 1])];
  }
  return cg;
}

ComparisonReport check_comparison(const RegularMapCert& cert, const ComparisonGraph& cg) {
  ComparisonReport r;
  const int n = cert.source.n();
  const int m = cert.source.m();
  const int k = cert.kappa;
  const int delta = max_degree(cert.source);
  r.guest_vertices = n;
  r.guest_edges = m;
  r.vertices = cg.graph.n();
  r.lower_size_ok = n <= k * r.vertices;
  r.middle_size_ok = r.vertices <= n + (k - 1) * m;
  r.upper_size_ok = 2 * r.vertices <= (2 + (k - 1) * delta) * n;
  r.max_walk_load = cg.walk_load.empty() ? 0 : *std::max_element(cg.walk_load.begin(), cg.walk_load.end());
  r.load_bound = BigInt(k) * delta * big_pow(1 + max_degree(cert.target), k);
  r.load_ok = r.max_walk_load <= r.load_bound;
  return r;
}

// ---------------------------------------------------------------- orderings

LinearOrdering pullback_ordering(const LinearOrdering& g_order, const RegularMapCert& cert,
                                 const ComparisonGraph& cg) {
  if (g_order.size() != cg.graph.n()) throw ParameterError("ordering does not match the comparison graph");
  std::vector<Vertex> seq(cert.source.n());
  for (Vertex v = 0; v < cert.source.n(); ++v) seq[v] = v;
  std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
    const int ga = g_order.position(cg.image[a]);
    const int gb = g_order.position(cg.image[b]);
    return ga != gb ? ga < gb : a < b;
  });
  return LinearOrdering::from_sequence(seq);
}

PullbackReport check_pullback(const RegularMapCert& cert, const ComparisonGraph& cg,
                              const LinearOrdering& g_order, const LinearOrdering& f) {
  const Graph& x = cert.source;
  const int k = cert.kappa;
  const int k2 = k * k;
  PullbackReport r;
  r.collision_constant = cg.edge_load.empty() ? 0 : *std::max_element(cg.edge_load.begin(), cg.edge_load.end());

  // Comparison-graph vertices near each image, by local id.
  std::map<Vertex, std::vector<char>> near;
  auto near_of = [&](Vertex y) -> const std::vector<char>& {
    auto it = near.find(y);
    if (it != near.end()) return it->second;
    std::vector<char> mark(cg.graph.n(), 0);
    for (auto [t, d] : bounded_bfs(cert.target, y, k)) {
      if (cg.local_of[t] >= 0) mark[cg.local_of[t]] = 1;
    }
    return near.emplace(y, std::move(mark)).first->second;
  };
  for (auto [u, v] : x.edges()) {
    const int l = std::abs(f.position(u) - f.position(v));
    if (l <= k2) continue;
    ++r.long_edges;
    const Vertex first = f.position(u) < f.position(v) ? u : v;
    const auto& mark = near_of(cert.map[first]);
    int best_gap = 0;
    for (auto [w, w2] : cg.graph.edges()) {
      if (!mark[w] && !mark[w2]) continue;
      best_gap = std::max(best_gap, std::abs(g_order.position(w) - g_order.position(w2)));
    }
    if (l > k2 * best_gap) ++r.bandwidth_claim_failures;
    if (l + 1 - k > k2 * best_gap) ++r.corrected_claim_failures;
  }

  const int n = x.n();
  const int delta_x = max_degree(x);
  const auto g_cut = cut_vector(cg.graph, g_order);  // g_cut[l] = g_{l-1}
  const auto f_cut = cut_vector(x, f);
  const auto seq = f.sequence();
  for (int pos = 1; pos < n; ++pos) {
    // f_pos counts edges with f(v) <= pos < f(v'), i.e. f_cut[pos]
    const int fk = f_cut[pos];
    const int ak = g_order.position(cg.image[seq[pos - 1]]);
    const int gak = ak < cg.graph.n() ? g_cut[ak] : 0;
    ++r.positions;
    if (fk > r.collision_constant * gak + k * delta_x) ++r.cutwidth_claim_failures;
  }
  return r;
}

// ---------------------------------------------------------------- decompositions

namespace {

// For each comparison vertex y: the source vertices x with y in phibar(x).
std::vector<std::vector<Vertex>> phibar_owners(const RegularMapCert& cert, const ComparisonGraph& cg) {
  std::vector<std::vector<Vertex>> owners(cg.graph.n());
  for (Vertex x = 0; x < cert.source.n(); ++x) owners[cg.image[x]].push_back(x);
  for (std::size_t e = 0; e < cg.walks.size(); ++e) {
    auto [u, v] = cert.source.edges()[e];
    for (Vertex y : cg.walks[e]) {
      owners[y].push_back(u);
      owners[y].push_back(v);
    }
  }
  for (auto& o : owners) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }
  return owners;
}

}  // namespace

GDecomposition pullback_decomposition(const GDecomposition& d_prime, const RegularMapCert& cert,
                                      const ComparisonGraph& cg) {
  if (!(d_prime.guest == cg.graph)) throw ParameterError("decomposition is not of the comparison graph");
  auto problems = validate(d_prime);
  if (!problems.empty()) throw ParameterError("invalid decomposition: " + problems.front());
  const auto owners = phibar_owners(cert, cg);
  GDecomposition out{d_prime.host, cert.source, std::vector<VertexSet>(d_prime.host.n())};
  for (Vertex g = 0; g < d_prime.host.n(); ++g) {
    auto& bag = out.bags[g];
    for (Vertex y : d_prime.bags[g]) bag.insert(bag.end(), owners[y].begin(), owners[y].end());
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  return out;
}

InflationReport check_inflation(const GDecomposition& pulled, const GDecomposition& d_prime,
                                const RegularMapCert& cert, const ComparisonGraph& cg) {
  InflationReport r;
  for (const auto& o : phibar_owners(cert, cg)) r.measured = std::max(r.measured, static_cast<int>(o.size()));
  const int k = cert.kappa;
  const long long delta = max_degree(cert.source);
  r.bound_power_of_sum = BigInt(k) * big_pow(1 + delta, 2 * k);
  r.bound_sum_of_power = BigInt(k) * (1 + big_pow(delta, 2 * k));
  for (std::size_t g = 0; g < pulled.bags.size(); ++g) {
    const long long size = static_cast<long long>(pulled.bags[g].size());
    const long long base = static_cast<long long>(d_prime.bags[g].size());
    if (size > static_cast<long long>(r.measured) * base) ++r.measured_failures;
    if (BigInt(size) > r.bound_power_of_sum * base) ++r.power_of_sum_failures;
    if (BigInt(size) > r.bound_sum_of_power * base) ++r.sum_of_power_failures;
  }
  return r;
}

HostTransfer host_transfer_decomposition(const GDecomposition& d, const RegularMapCert& host_map) {
  if (!(host_map.source == d.host)) throw ParameterError("host map must start at the decomposition host");
  require_regular(host_map);
  auto problems = validate(d);
  if (!problems.empty()) throw ParameterError("invalid decomposition: " + problems.front());
  const Graph& g = d.host;
  const Graph& target = host_map.target;

  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> cache;
  auto geodesic = [&](Vertex a, Vertex b) -> const std::vector<Vertex>& {
    auto key = std::minmax(a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, oriented_geodesic(target, key.first, key.second)).first;
    return it->second;
  };

  HostTransfer out{{target, d.guest, std::vector<VertexSet>(target.n())}, 0};
  for (Vertex x = 0; x < d.guest.n(); ++x) {
    const VertexSet supp = support(d, x);
    std::vector<char> in_supp(g.n(), 0);
    for (Vertex h : supp) in_supp[h] = 1;
    std::vector<char> hit(target.n(), 0);
    for (Vertex h : supp) {
      hit[host_map.map[h]] = 1;
      for (Vertex h2 : g.neighbors(h)) {
        if (h2 > h && in_supp[h2]) {
          for (Vertex y : geodesic(host_map.map[h], host_map.map[h2])) hit[y] = 1;
        }
      }
    }
    for (Vertex y = 0; y < target.n(); ++y) {
      if (hit[y]) out.decomposition.bags[y].push_back(x);
    }
  }

  // Overlap constant: contributors per target vertex and preimages of the
  // largest-bag contributor choice.
  std::vector<std::vector<Vertex>> contributors(target.n());
  for (Vertex h = 0; h < g.n(); ++h) {
    std::vector<Vertex> reach{host_map.map[h]};
    for (Vertex h2 : g.neighbors(h)) {
      const auto& path = geodesic(host_map.map[h], host_map.map[h2]);
      reach.insert(reach.end(), path.begin(), path.end());
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    for (Vertex y : reach) contributors[y].push_back(h);
  }
  std::vector<int> chosen_count(g.n(), 0);
  int c = 0;
  for (Vertex y = 0; y < target.n(); ++y) {
    if (contributors[y].empty()) continue;
    c = std::max(c, static_cast<int>(contributors[y].size()));
    Vertex best = contributors[y].front();
    for (Vertex h : contributors[y]) {
      if (d.bags[h].size() > d.bags[best].size()) best = h;
    }
    ++chosen_count[best];
  }
  for (int cnt : chosen_count) c = std::max(c, cnt);
  out.overlap_constant = c;
  return out;
}

}  // namespace widthlab
