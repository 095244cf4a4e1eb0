#include "widthlab/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace widthlab {

namespace {

bool connected_within(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  std::vector<char> in(g.n(), 0), seen(g.n(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<Vertex> stack{s.front()};
  seen[s.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

std::string edge_name(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

std::vector<std::string> validate(const GDecomposition& d) {
  const int hn = d.host.n();
  const int gn = d.guest.n();
  if (static_cast<int>(d.bags.size()) != hn) {
    throw ParameterError("decomposition has " + std::to_string(d.bags.size()) +
                         " bags for a host with " + std::to_string(hn) + " vertices");
  }
  std::vector<std::vector<Vertex>> supports(gn);
  for (Vertex g = 0; g < hn; ++g) {
    const auto& bag = d.bags[g];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] < 0 || bag[i] >= gn) {
        throw ParameterError("bag " + std::to_string(g) + " holds out-of-range vertex " +
                             std::to_string(bag[i]));
      }
      if (i > 0 && bag[i] <= bag[i - 1]) {
        throw ParameterError("bag " + std::to_string(g) + " is not a sorted set");
      }
      supports[bag[i]].push_back(g);
    }
  }
  std::vector<std::string> out;
  for (Vertex x = 0; x < gn; ++x) {
    if (supports[x].empty()) out.push_back("cover: guest vertex " + std::to_string(x) + " is in no bag");
  }
  for (Edge e : d.guest.edges()) {
    const auto& a = supports[e.first];
    const auto& b = supports[e.second];
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) out.push_back("edge cover: guest edge " + edge_name(e) + " is in no bag");
  }
  for (Vertex x = 0; x < gn; ++x) {
    if (!connected_within(d.host, supports[x])) {
      out.push_back("connectivity: support of guest vertex " + std::to_string(x) +
                    " is disconnected in the host");
    }
  }
  return out;
}

VertexSet support(const GDecomposition& d, Vertex x) {
  VertexSet out;
  for (Vertex g = 0; g < static_cast<Vertex>(d.bags.size()); ++g) {
    if (std::binary_search(d.bags[g].begin(), d.bags[g].end(), x)) out.push_back(g);
  }
  return out;
}

LayoutValue width(const GDecomposition& d, PNorm p) {
  auto problems = validate(d);
  if (!problems.empty()) throw ParameterError("invalid decomposition: " + problems.front());
  std::vector<int> sizes;
  for (const auto& bag : d.bags) sizes.push_back(static_cast<int>(bag.size()));
  return LayoutValue::aggregate(p, sizes);
}

int max_bag(const GDecomposition& d) {
  std::size_t best = 0;
  for (const auto& bag : d.bags) best = std::max(best, bag.size());
  return static_cast<int>(best);
}

GDecomposition trivial_decomposition(const Graph& guest, const Graph& host) {
  if (host.n() == 0 && guest.n() > 0) throw ParameterError("empty host");
  GDecomposition d{host, guest, std::vector<VertexSet>(host.n())};
  if (host.n() > 0) {
    d.bags[0].resize(guest.n());
    std::iota(d.bags[0].begin(), d.bags[0].end(), 0);
  }
  return d;
}

// ---------------------------------------------------------------- grid

std::vector<Vertex> dfs_preorder(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<char> seen(g.n(), 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    order.push_back(root);
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto nb = g.neighbors(v);
      while (next < nb.size() && seen[nb[next]]) ++next;
      if (next == nb.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nb[next];
      seen[w] = 1;
      order.push_back(w);
      stack.push_back({w, 0});
    }
  }
  return order;
}

GDecomposition grid_decomposition(const Graph& guest,
                                  std::optional<std::vector<Vertex>> enumeration) {
  const int n = guest.n();
  const int m = std::max(n, 1);
  const std::vector<Vertex> x = enumeration ? *enumeration : dfs_preorder(guest);
  std::vector<int> index(n, -1);  // guest vertex -> 1-based k
  if (static_cast<int>(x.size()) != n) throw ParameterError("enumeration must list every vertex once");
  for (int k = 0; k < n; ++k) {
    if (x[k] < 0 || x[k] >= n || index[x[k]] >= 0) {
      throw ParameterError("enumeration must list every vertex once");
    }
    index[x[k]] = k + 1;
  }
  std::vector<Edge> grid_edges;
  auto id = [m](int a, int b) { return (a - 1) * m + (b - 1); };
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      if (b < m) grid_edges.push_back({id(a, b), id(a, b + 1)});
      if (a < m) grid_edges.push_back({id(a, b), id(a + 1, b)});
    }
  }
  std::vector<std::string> labels;
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) labels.push_back(std::to_string(a) + "," + std::to_string(b));
  }
  GDecomposition d{Graph(m * m, grid_edges, labels), guest, std::vector<VertexSet>(m * m)};
  // Support of x_k (1-based k): the diagonal cell plus, for each neighbour
  // x_l, the L-path (lo,lo) -> (lo,hi) -> (hi,hi) with lo = min, hi = max.
  std::vector<std::vector<char>> in(n, std::vector<char>(m * m, 0));
  for (int k = 1; k <= n; ++k) {
    in[k - 1][id(k, k)] = 1;
    for (Vertex w : guest.neighbors(x[k - 1])) {
      const int l = index[w];
      const int lo = std::min(k, l);
      const int hi = std::max(k, l);
      for (int b = lo; b <= hi; ++b) in[k - 1][id(lo, b)] = 1;
      for (int a = lo; a <= hi; ++a) in[k - 1][id(a, hi)] = 1;
    }
  }
  for (int cell = 0; cell < m * m; ++cell) {
    for (int k = 0; k < n; ++k) {
      if (in[k][cell]) d.bags[cell].push_back(x[k]);
    }
    std::sort(d.bags[cell].begin(), d.bags[cell].end());
  }
  return d;
}

// ---------------------------------------------------------------- subdivision

GDecomposition subdivision_transfer(const GDecomposition& d, const Subdivision& sub) {
  const Graph& host = d.host;
  if (static_cast<int>(sub.interiors.size()) != host.m() ||
      static_cast<int>(sub.vertex_map.size()) != host.n()) {
    throw ParameterError("subdivision does not match the decomposition host");
  }
  if (static_cast<int>(d.bags.size()) != host.n()) throw ParameterError("bag count mismatch");
  GDecomposition out{sub.graph, d.guest, std::vector<VertexSet>(sub.graph.n())};
  for (Vertex g = 0; g < host.n(); ++g) out.bags.at(sub.vertex_map[g]) = d.bags[g];
  for (int e = 0; e < host.m(); ++e) {
    auto [g0, g1] = host.edges()[e];
    VertexSet common;
    std::set_intersection(d.bags[g0].begin(), d.bags[g0].end(), d.bags[g1].begin(),
                          d.bags[g1].end(), std::back_inserter(common));
    for (Vertex interior : sub.interiors[e]) out.bags.at(interior) = common;
  }
  return out;
}

// ---------------------------------------------------------------- elimination

GDecomposition decomposition_from_elimination(const EliminationCertificate& cert,
                                              const Graph& guest) {
  const int n = guest.n();
  const LinearOrdering& order = cert.order;
  if (order.size() != n) throw ParameterError("elimination order size does not match guest");
  if (n == 0) return {Graph::edgeless(1), guest, {VertexSet{}}};

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : guest.edges()) adj[u][v] = adj[v][u] = 1;
  const auto sequence = order.sequence();
  std::vector<VertexSet> bag(n);
  std::vector<Vertex> parent(n, -1);
  for (Vertex v : sequence) {
    VertexSet later;
    for (Vertex w = 0; w < n; ++w) {
      if (adj[v][w] && order.position(w) > order.position(v)) later.push_back(w);
    }
    for (Vertex a : later) {
      for (Vertex b : later) {
        if (a != b) adj[a][b] = 1;
      }
    }
    bag[v] = later;
    bag[v].push_back(v);
    std::sort(bag[v].begin(), bag[v].end());
    for (Vertex w : later) {
      if (parent[v] < 0 || order.position(w) < order.position(parent[v])) parent[v] = w;
    }
  }
  std::size_t widest = 0;
  for (const auto& b : bag) widest = std::max(widest, b.size());
  if (static_cast<int>(widest) - 1 > cert.width) {
    throw ParameterError("elimination order exceeds its certified width");
  }
  // Forest roots are chained in elimination order to make one tree.
  Vertex previous_root = -1;
  for (Vertex v : sequence) {
    if (parent[v] >= 0) continue;
    if (previous_root >= 0) parent[previous_root] = v;
    previous_root = v;
  }

  // Contract tree edges whose bags are nested; the merged node keeps the
  // larger bag. Node identity = representative in elimination order.
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](Vertex v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (Vertex v : sequence) {
    if (parent[v] < 0) continue;
    Vertex a = find(v);
    Vertex b = find(parent[v]);
    const auto& x = bag[a];
    const auto& y = bag[b];
    if (std::includes(y.begin(), y.end(), x.begin(), x.end())) {
      rep[a] = b;
    } else if (std::includes(x.begin(), x.end(), y.begin(), y.end())) {
      rep[b] = a;
    }
  }
  std::vector<int> node(n, -1);
  std::vector<VertexSet> bags;
  for (Vertex v : sequence) {
    Vertex r = find(v);
    if (node[r] < 0) {
      node[r] = static_cast<int>(bags.size());
      bags.push_back(bag[r]);
    }
  }
  std::vector<Edge> tree_edges;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] < 0) continue;
    int a = node[find(v)];
    int b = node[find(parent[v])];
    if (a != b) tree_edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(tree_edges.begin(), tree_edges.end());
  tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()), tree_edges.end());
  const int nodes = static_cast<int>(bags.size());
  return {Graph(nodes, tree_edges), guest, bags};
}

GDecomposition path_decomposition_from_ordering(const Graph& guest, const LinearOrdering& f) {
  const int n = guest.n();
  if (f.size() != n) throw ParameterError("ordering size does not match guest");
  if (n == 0) return {Graph::edgeless(1), guest, {VertexSet{}}};
  std::vector<Edge> path_edges;
  for (int i = 0; i + 1 < n; ++i) path_edges.push_back({i, i + 1});
  GDecomposition d{Graph(n, path_edges), guest, std::vector<VertexSet>(n)};
  // last[x]: largest position of a neighbour of x (or of x itself).
  std::vector<int> last(n);
  for (Vertex x = 0; x < n; ++x) {
    last[x] = f.position(x);
    for (Vertex y : guest.neighbors(x)) last[x] = std::max(last[x], f.position(y));
  }
  for (Vertex x = 0; x < n; ++x) {
    // x sits in bags f(x) .. last[x]: it is the new vertex at f(x) and a
    // boundary vertex of every prefix f(x) .. last[x]-1.
    for (int i = f.position(x); i <= last[x]; ++i) d.bags[i - 1].push_back(x);
  }
  for (auto& bag : d.bags) std::sort(bag.begin(), bag.end());
  return d;
}

// ---------------------------------------------------------------- search

namespace {

template <class Value>
struct WidthSearch {
  const Graph& guest;
  const Graph& host;
  PNorm p;
  std::optional<int> slim;
  std::vector<VertexMask> candidates;  // connected host subsets
  std::vector<Value> power;            // power[s] = s^p
  std::vector<int> load;
  std::vector<VertexMask> chosen;
  Value best{};
  bool have_best = false;
  std::vector<VertexMask> best_choice;
  std::uint64_t nodes = 0;

  // cost: sum of power[load] (finite p) or the max load (p = inf).
  void search(int x, const Value& cost) {
    ++nodes;
    const int n = guest.n();
    if (x == n) {
      if (!have_best || cost < best) {
        best = cost;
        best_choice = chosen;
        have_best = true;
      }
      return;
    }
    // Every later vertex adds at least 1 to a finite-p cost.
    const Value later = p.is_infinite() ? Value(0) : static_cast<Value>(n - x - 1);
    for (VertexMask c : candidates) {
      bool ok = true;
      for (Vertex y : guest.neighbors(x)) {
        if (y < x && !(chosen[y] & c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Value next = cost;
      for (VertexMask it = c; it; it &= it - 1) {
        const int l = load[std::countr_zero(it)];
        if (slim && l + 1 > *slim) ok = false;
        if (p.is_infinite()) {
          next = std::max<Value>(next, static_cast<Value>(l + 1));
        } else {
          next += power[l + 1] - power[l];
        }
      }
      if (!ok || (have_best && !(next + later < best))) continue;
      for (VertexMask it = c; it; it &= it - 1) ++load[std::countr_zero(it)];
      chosen[x] = c;
      search(x + 1, next);
      for (VertexMask it = c; it; it &= it - 1) --load[std::countr_zero(it)];
    }
  }
};

bool mask_connected(const Graph& g, VertexMask s) {
  VertexMask comp = s & (~s + 1);
  VertexMask frontier = comp;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask it = frontier; it; it &= it - 1) next |= g.row(std::countr_zero(it));
    next &= s & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == s;
}

template <class Value>
WidthSearchResult run_width_search(const Graph& guest, const Graph& host, PNorm p,
                                   std::optional<int> slim) {
  WidthSearch<Value> s{guest, host, p, slim, {}, {}, std::vector<int>(host.n(), 0),
                       std::vector<VertexMask>(guest.n(), 0), Value{}, false, {}, 0};
  for (VertexMask m = 1; m <= host.all_mask(); ++m) {
    if (mask_connected(host, m)) s.candidates.push_back(m);
  }
  std::stable_sort(s.candidates.begin(), s.candidates.end(),
                   [](VertexMask a, VertexMask b) { return std::popcount(a) < std::popcount(b); });
  for (int l = 0; l <= guest.n(); ++l) {
    Value v = 1;
    if (!p.is_infinite()) {
      for (unsigned i = 0; i < p.p(); ++i) v *= static_cast<Value>(l);
    }
    s.power.push_back(v);
  }
  s.search(0, Value(0));
  WidthSearchResult out;
  out.nodes_explored = s.nodes;
  if (!s.have_best) return out;
  out.value = LayoutValue(p, BigInt(s.best));
  GDecomposition d{host, guest, std::vector<VertexSet>(host.n())};
  for (Vertex x = 0; x < guest.n(); ++x) {
    for (VertexMask it = s.best_choice[x]; it; it &= it - 1) {
      d.bags[std::countr_zero(it)].push_back(x);
    }
  }
  out.decomposition = std::move(d);
  return out;
}

}  // namespace

WidthSearchResult min_width_search(const Graph& guest, const Graph& host, PNorm p,
                                   std::optional<int> slim) {
  if (guest.n() > kWidthSearchLimit || host.n() > kWidthSearchLimit) {
    throw CapacityError("min_width_search: guest and host must have at most " +
                        std::to_string(kWidthSearchLimit) + " vertices");
  }
  if (slim && *slim < 1) throw ParameterError("slim bound must be positive");
  if (guest.n() > 0 && host.n() == 0) return {};
  // 6 * 6^p fits in 64 bits for p <= 22.
  if (p.is_infinite() || p.p() <= 22) return run_width_search<std::uint64_t>(guest, host, p, slim);
  return run_width_search<BigInt>(guest, host, p, slim);
}

}  // namespace widthlab
