#include "widthlab/separation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>

namespace widthlab {

namespace {

// Next subset with the same popcount (Gosper's hack).
VertexMask next_same_size(VertexMask x) {
  const VertexMask c = x & (~x + 1);
  const VertexMask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls fn(mask) for every k-subset of n bits in increasing numeric order;
// stops early when fn returns true.
template <class Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k == 0) return fn(VertexMask{0});
  const VertexMask limit = VertexMask{1} << n;
  for (VertexMask s = (VertexMask{1} << k) - 1; s < limit; s = next_same_size(s)) {
    if (fn(s)) return true;
  }
  return false;
}

// Components of g restricted to `allowed`, ordered by smallest member.
std::vector<VertexMask> component_masks(const Graph& g, VertexMask allowed) {
  std::vector<VertexMask> out;
  while (allowed) {
    VertexMask comp = allowed & (~allowed + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask it = frontier; it; it &= it - 1) next |= g.row(std::countr_zero(it));
      next &= allowed & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    allowed &= ~comp;
  }
  return out;
}

void require_size(const Graph& g, int limit, const char* who) {
  if (g.n() > limit) {
    throw CapacityError(std::string(who) + ": n = " + std::to_string(g.n()) +
                        " exceeds the exhaustive limit " + std::to_string(limit));
  }
}

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 15 ||
      !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParameterError("cannot parse rational '" + whole + "'");
  }
  return std::stoll(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    auto whole = dot == 0 ? 0 : parse_int(text.substr(0, dot), text);
    auto digits = parse_int(frac, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(whole * scale + digits, scale);
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int component_threshold(const Rational& eps, int n) {
  const Rational scaled = eps * Rational(n);
  return static_cast<int>(scaled.numerator() / scaled.denominator());
}

// ---------------------------------------------------------------- cutsize

CutsizeResult cutsize(const Graph& g, Rational eps) {
  if (eps <= Rational(0) || eps >= Rational(1)) {
    throw ParameterError("eps must lie strictly between 0 and 1");
  }
  require_size(g, kMaskCapacity - 1, "cutsize");
  const int n = g.n();
  const int threshold = component_threshold(eps, n);
  CutsizeResult result;
  result.certificate.epsilon = eps;
  std::uint64_t spent = 0;
  std::uint64_t level = 1;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    if (k > 0) level = level * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
    spent += level;
    if (spent > kCutsizeBudget && n > kCutsizeLimit) {
      throw CapacityError("cutsize: n = " + std::to_string(n) + " needs more than " +
                          std::to_string(kCutsizeBudget) + " candidate cutsets");
    }
    bool found = for_each_subset_of_size(n, k, [&](VertexMask s) {
      auto comps = component_masks(g, g.all_mask() & ~s);
      for (VertexMask c : comps) {
        if (std::popcount(c) > threshold) return false;
      }
      result.value = k;
      result.certificate.cutset = mask_to_set(s);
      for (VertexMask c : comps) result.certificate.component_sizes.push_back(std::popcount(c));
      return true;
    });
    if (found) return result;
  }
  return result;  // unreachable: S = V always qualifies
}

std::string check_cutset(const Graph& g, const CutsetCertificate& c) {
  std::vector<char> removed(g.n(), 0);
  for (Vertex v : c.cutset) {
    if (v < 0 || v >= g.n() || removed[v]) return "cutset has invalid or repeated vertices";
    removed[v] = 1;
  }
  VertexSet rest;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!removed[v]) rest.push_back(v);
  }
  const int threshold = component_threshold(c.epsilon, g.n());
  std::vector<int> sizes;
  for (const auto& comp : connected_components(induced_subgraph(g, rest))) {
    sizes.push_back(static_cast<int>(comp.size()));
    if (static_cast<int>(comp.size()) > threshold) {
      return "component of size " + std::to_string(comp.size()) + " exceeds " +
             std::to_string(threshold);
    }
  }
  if (sizes != c.component_sizes) return "recorded component sizes disagree";
  return {};
}

// ---------------------------------------------------------------- s(G)

SeparatorResult two_thirds_separator(const Graph& g) {
  require_size(g, kCutsizeLimit, "two_thirds_separator");
  const int n = g.n();
  const int cap = 2 * n / 3;
  SeparatorResult result;
  for (int k = 0; k <= n; ++k) {
    bool found = for_each_subset_of_size(n, k, [&](VertexMask s) {
      auto comps = component_masks(g, g.all_mask() & ~s);
      const int rest = n - k;
      const int lo = std::max(0, rest - cap);
      if (lo > cap) return false;
      // reach[i][x]: some subset of the first i components sums to x.
      const std::size_t m = comps.size();
      std::vector<std::vector<char>> reach(m + 1, std::vector<char>(rest + 1, 0));
      reach[0][0] = 1;
      for (std::size_t i = 0; i < m; ++i) {
        const int size = std::popcount(comps[i]);
        for (int x = 0; x <= rest; ++x) {
          if (!reach[i][x]) continue;
          reach[i + 1][x] = 1;
          if (x + size <= rest) reach[i + 1][x + size] = 1;
        }
      }
      int target = -1;
      for (int x = lo; x <= cap; ++x) {
        if (reach[m][x]) {
          target = x;
          break;
        }
      }
      if (target < 0) return false;
      VertexMask a = 0;
      for (std::size_t i = m; i-- > 0;) {
        if (reach[i][target]) continue;
        a |= comps[i];
        target -= std::popcount(comps[i]);
      }
      result.value = k;
      result.certificate.s = mask_to_set(s);
      result.certificate.a = mask_to_set(a);
      result.certificate.b = mask_to_set(g.all_mask() & ~s & ~a);
      return true;
    });
    if (found) return result;
  }
  return result;
}

std::string check_separator(const Graph& g, const SeparatorTriple& t) {
  const int n = g.n();
  std::vector<int> part(n, -1);
  int index = 0;
  for (const VertexSet* side : {&t.a, &t.b, &t.s}) {
    for (Vertex v : *side) {
      if (v < 0 || v >= n) return "vertex out of range";
      if (part[v] >= 0) return "sets are not disjoint";
      part[v] = index;
    }
    ++index;
  }
  if (std::count(part.begin(), part.end(), -1) != 0) return "sets do not cover V";
  const std::size_t cap = static_cast<std::size_t>(2 * n / 3);
  if (t.a.size() > cap || t.b.size() > cap) return "a side exceeds floor(2n/3)";
  for (auto [u, v] : g.edges()) {
    if (part[u] + part[v] == 1) return "edge between A and B";
  }
  return {};
}

// ---------------------------------------------------------------- Cheeger

CheegerResult cheeger(const Graph& g) {
  if (g.n() < 2) throw ParameterError("cheeger: need at least 2 vertices");
  require_size(g, kCheegerLimit, "cheeger");
  const int n = g.n();
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint32_t> neighborhood(states, 0);
  std::int64_t best_num = 0;
  std::int64_t best_den = 0;
  VertexMask best_set = 0;
  for (std::size_t s = 1; s < states; ++s) {
    const int low = std::countr_zero(s);
    neighborhood[s] = neighborhood[s & (s - 1)] | static_cast<std::uint32_t>(g.row(low));
    const int size = std::popcount(s);
    if (2 * size > n) continue;
    const int boundary = std::popcount(neighborhood[s] & ~static_cast<std::uint32_t>(s));
    if (best_den == 0 || boundary * best_den < best_num * size) {
      best_num = boundary;
      best_den = size;
      best_set = s;
    }
  }
  return {Rational(best_num, best_den), mask_to_set(best_set)};
}

// ---------------------------------------------------------------- treewidth

TreewidthResult treewidth(const Graph& g) {
  require_size(g, kTreewidthLimit, "treewidth");
  const int n = g.n();
  TreewidthResult result;
  if (n == 0) {
    result.certificate.order = LinearOrdering::identity(0);
    return result;
  }
  const std::size_t states = std::size_t{1} << n;
  // Q(S, v): vertices outside S + v reachable from v through S.
  auto q_size = [&](VertexMask s, Vertex v) {
    VertexMask reach = bit(v);
    VertexMask frontier = bit(v);
    VertexMask seen_outside = 0;
    while (frontier) {
      VertexMask nb = 0;
      for (VertexMask it = frontier; it; it &= it - 1) nb |= g.row(std::countr_zero(it));
      seen_outside |= nb & ~s;
      frontier = nb & s & ~reach;
      reach |= frontier;
    }
    return std::popcount(seen_outside & ~bit(v));
  };
  std::vector<std::int8_t> tw(states, 0);
  tw[0] = -1;
  for (std::size_t s = 1; s < states; ++s) {
    int best = std::numeric_limits<int>::max();
    for (VertexMask it = s; it; it &= it - 1) {
      const Vertex v = std::countr_zero(it);
      const VertexMask before = s & ~bit(v);
      best = std::min(best, std::max<int>(tw[before], q_size(before, v)));
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  // Walk back from V, peeling the smallest vertex that can be eliminated last.
  std::vector<Vertex> sequence(n);
  VertexMask s = g.all_mask();
  for (int pos = n - 1; pos >= 0; --pos) {
    for (VertexMask it = s; it; it &= it - 1) {
      const Vertex v = std::countr_zero(it);
      const VertexMask before = s & ~bit(v);
      if (std::max<int>(tw[before], q_size(before, v)) == tw[s]) {
        sequence[pos] = v;
        s = before;
        break;
      }
    }
  }
  result.value = tw[g.all_mask()];
  result.certificate.order = LinearOrdering::from_sequence(sequence);
  result.certificate.width = result.value;
  return result;
}

int elimination_width(const Graph& g, const LinearOrdering& order) {
  const int n = g.n();
  if (order.size() != n) throw ParameterError("ordering size does not match graph");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  int width = 0;
  for (Vertex v : order.sequence()) {
    std::vector<Vertex> later;
    for (Vertex w = 0; w < n; ++w) {
      if (adj[v][w] && order.position(w) > order.position(v)) later.push_back(w);
    }
    width = std::max(width, static_cast<int>(later.size()));
    for (Vertex a : later) {
      for (Vertex b : later) {
        if (a != b) adj[a][b] = 1;
      }
    }
  }
  return width;
}

// ---------------------------------------------------------------- pathwidth

PathwidthResult pathwidth(const Graph& g) {
  auto r = min_vertex_separation(g, PNorm::infinity());
  return {static_cast<int>(r.value.raw()), r.witness};
}

}  // namespace widthlab
