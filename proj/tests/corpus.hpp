// Shared graph corpora and oracles for the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab::testing {

/// Every labelled graph on n vertices (2^(n choose 2) of them).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<Graph> out;
  for (std::uint32_t m = 0; m < (1U << pairs.size()); ++m) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1) es.push_back(pairs[k]);
    out.emplace_back(n, es);
  }
  return out;
}

/// Smallest edge bitmask over all relabellings (n <= 7).
inline std::uint32_t canonical_code(const Graph& g) {
  const int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0U;
  do {
    std::uint32_t code = 0;
    for (auto [u, v] : g.edges()) {
      int a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
      code |= 1U << (b * (b - 1) / 2 + a);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class on n vertices.
inline std::vector<Graph> graph_classes(int n, bool connected_only = false) {
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (connected_only && !is_connected(g)) continue;
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

/// Minimal wiring volume by increasing host subsets U: is there a coarse
/// k-wiring with every image and walk vertex inside U? -1 if never.
inline int wiring_volume_oracle(const Graph& guest, const Graph& host, int k) {
  const int gn = guest.n(), hn = host.n();
  if (gn == 0) return 0;
  for (int size = 1; size <= hn; ++size) {
    for (std::uint32_t u = 0; u < (1U << hn); ++u) {
      if (std::popcount(u) != size) continue;
      // simple paths inside U between every pair
      std::vector<std::vector<std::vector<std::vector<Vertex>>>> paths(
          hn, std::vector<std::vector<std::vector<Vertex>>>(hn));
      std::vector<Vertex> cur;
      std::function<void(Vertex)> grow = [&](Vertex v) {
        cur.push_back(v);
        paths[cur.front()][v].push_back(cur);
        for (Vertex w : host.neighbors(v))
          if ((u >> w & 1) && std::find(cur.begin(), cur.end(), w) == cur.end()) grow(w);
        cur.pop_back();
      };
      for (Vertex a = 0; a < hn; ++a)
        if (u >> a & 1) grow(a);

      std::vector<Vertex> map(gn, -1);
      std::vector<int> fibre(hn, 0);
      std::vector<std::vector<Vertex>> chosen(guest.m());
      std::function<bool(int)> route = [&](int e) -> bool {
        if (e == guest.m()) return true;
        auto [x, y] = guest.edges()[e];
        for (const auto& p : paths[map[x]][map[y]]) {
          chosen[e] = p;
          bool ok = true;
          for (Vertex g = 0; g < hn && ok; ++g) {
            int walks = 0;
            for (int f = 0; f <= e; ++f)
              walks += std::find(chosen[f].begin(), chosen[f].end(), g) != chosen[f].end();
            ok = walks <= k;
          }
          if (ok && route(e + 1)) return true;
        }
        chosen[e].clear();
        return false;
      };
      std::function<bool(int)> place = [&](int x) -> bool {
        if (x == gn) return route(0);
        for (Vertex g = 0; g < hn; ++g) {
          if (!(u >> g & 1) || fibre[g] == k) continue;
          map[x] = g;
          ++fibre[g];
          bool found = place(x + 1);
          --fibre[g];
          if (found) return true;
        }
        return false;
      };
      if (place(0)) return size;
    }
  }
  return -1;
}

}  // namespace widthlab::testing
