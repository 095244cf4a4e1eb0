#include "widthlab/layout.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace widthlab {

// ---------------------------------------------------------------- PNorm

PNorm PNorm::finite(unsigned p) {
  if (p == 0) throw ParameterError("p must be a positive integer or inf");
  return PNorm(p);
}

PNorm PNorm::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  if (text.empty() || text.size() > 6 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParameterError("p must be a positive integer or \"inf\", got '" + text + "'");
  }
  return finite(static_cast<unsigned>(std::stoul(text)));
}

std::string PNorm::to_string() const {
  return is_infinite() ? "inf" : std::to_string(p_);
}

// ---------------------------------------------------------------- LayoutValue

LayoutValue::LayoutValue(PNorm norm, BigInt raw) : norm_(norm), raw_(std::move(raw)) {
  if (raw_ < 0) throw ParameterError("layout values are nonnegative");
}

LayoutValue LayoutValue::aggregate(PNorm norm, std::span<const int> costs) {
  BigInt total = 0;
  for (int c : costs) {
    if (norm.is_infinite()) {
      if (c > total) total = c;
    } else {
      total += boost::multiprecision::pow(BigInt(c), norm.p());
    }
  }
  return LayoutValue(norm, std::move(total));
}

double LayoutValue::root() const {
  const auto value = raw_.convert_to<long double>();
  if (norm_.is_infinite()) return static_cast<double>(value);
  return static_cast<double>(std::pow(value, 1.0L / norm_.p()));
}

std::string LayoutValue::to_string() const { return raw_.str(); }

std::strong_ordering LayoutValue::operator<=>(const LayoutValue& other) const {
  if (!(norm_ == other.norm_)) {
    throw ParameterError("comparing layout values of different norms");
  }
  if (raw_ < other.raw_) return std::strong_ordering::less;
  if (raw_ > other.raw_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- LinearOrdering

LinearOrdering::LinearOrdering(std::vector<int> positions) : positions_(std::move(positions)) {
  const int n = size();
  std::vector<char> used(n + 1, 0);
  for (int p : positions_) {
    if (p < 1 || p > n || used[p]) {
      throw ParameterError("ordering is not a bijection onto 1..n");
    }
    used[p] = 1;
  }
}

LinearOrdering LinearOrdering::from_sequence(std::span<const Vertex> sequence) {
  const int n = static_cast<int>(sequence.size());
  std::vector<int> positions(n, 0);
  for (int i = 0; i < n; ++i) {
    Vertex v = sequence[i];
    if (v < 0 || v >= n || positions[v] != 0) {
      throw ParameterError("sequence is not a permutation of 0..n-1");
    }
    positions[v] = i + 1;
  }
  return LinearOrdering(std::move(positions));
}

LinearOrdering LinearOrdering::identity(int n) {
  std::vector<int> positions(n);
  std::iota(positions.begin(), positions.end(), 1);
  return LinearOrdering(std::move(positions));
}

std::vector<Vertex> LinearOrdering::sequence() const {
  std::vector<Vertex> seq(positions_.size());
  for (std::size_t v = 0; v < positions_.size(); ++v) {
    seq[positions_[v] - 1] = static_cast<Vertex>(v);
  }
  return seq;
}

std::string to_string(LayoutCost cost) {
  switch (cost) {
    case LayoutCost::cutwidth: return "cutwidth";
    case LayoutCost::bandwidth: return "bandwidth";
    case LayoutCost::vertex_separation: return "vertex_separation";
  }
  return "unknown";
}

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::subset_dp: return "subset_dp";
    case SolveMethod::branch_and_bound: return "branch_and_bound";
    case SolveMethod::brute_force: return "brute_force";
  }
  return "unknown";
}

// ---------------------------------------------------------------- evaluation

namespace {

void check_size(const Graph& g, const LinearOrdering& f) {
  if (f.size() != g.n()) throw ParameterError("ordering size does not match graph");
}

}  // namespace

std::vector<int> cut_vector(const Graph& g, const LinearOrdering& f) {
  check_size(g, f);
  // difference array over positions: edge (a < b) contributes to i in (a, b]
  std::vector<int> diff(g.n() + 2, 0);
  for (auto [u, v] : g.edges()) {
    int a = std::min(f.position(u), f.position(v));
    int b = std::max(f.position(u), f.position(v));
    diff[a + 1] += 1;
    diff[b + 1] -= 1;
  }
  std::vector<int> out(g.n());
  int running = 0;
  for (int i = 1; i <= g.n(); ++i) {
    running += diff[i];
    out[i - 1] = running;
  }
  return out;
}

std::vector<int> band_vector(const Graph& g, const LinearOrdering& f) {
  check_size(g, f);
  std::vector<int> out;
  out.reserve(g.m());
  for (auto [u, v] : g.edges()) out.push_back(std::abs(f.position(u) - f.position(v)));
  return out;
}

std::vector<int> vertex_separation_vector(const Graph& g, const LinearOrdering& f) {
  check_size(g, f);
  // x is counted for i in [f(x), last neighbour position)
  std::vector<int> diff(g.n() + 2, 0);
  for (Vertex x = 0; x < g.n(); ++x) {
    int last = 0;
    for (Vertex y : g.neighbors(x)) last = std::max(last, f.position(y));
    if (last > f.position(x)) {
      diff[f.position(x)] += 1;
      diff[last] -= 1;
    }
  }
  std::vector<int> out(g.n());
  int running = 0;
  for (int i = 1; i <= g.n(); ++i) {
    running += diff[i];
    out[i - 1] = running;
  }
  return out;
}

std::vector<int> cost_vector(const Graph& g, LayoutCost cost, const LinearOrdering& f) {
  switch (cost) {
    case LayoutCost::cutwidth: return cut_vector(g, f);
    case LayoutCost::bandwidth: return band_vector(g, f);
    case LayoutCost::vertex_separation: return vertex_separation_vector(g, f);
  }
  return {};
}

LayoutValue evaluate(const Graph& g, LayoutCost cost, PNorm p, const LinearOrdering& f) {
  auto costs = cost_vector(g, cost, f);
  return LayoutValue::aggregate(p, costs);
}

// ---------------------------------------------------------------- solvers

namespace {

// True when terms * max_cost^p stays below 2^63, so a uint64 accumulator
// cannot overflow.
bool fits_u64(std::uint64_t terms, int max_cost, PNorm p) {
  if (p.is_infinite()) return true;
  BigInt bound = boost::multiprecision::pow(BigInt(std::max(max_cost, 1)), p.p());
  bound *= std::max<std::uint64_t>(terms, 1);
  return bound < (BigInt(1) << 63);
}

template <class Value>
std::vector<Value> power_table(int max_cost, PNorm p) {
  std::vector<Value> table(max_cost + 1);
  for (int c = 0; c <= max_cost; ++c) {
    if (p.is_infinite()) {
      table[c] = static_cast<Value>(c);
    } else {
      Value v = 1;
      for (unsigned i = 0; i < p.p(); ++i) v *= static_cast<Value>(c);
      table[c] = v;
    }
  }
  return table;
}

template <class Value>
BigInt to_big(const Value& v) {
  return BigInt(v);
}

// Exact DP over prefix sets: val[S] = min_{v in S} val[S - v] (+) cost(S),
// where (+) is max for p = inf and "+ cost^p" otherwise. For cutwidth cost(S)
// is the number of edges leaving S, for vertex separation the number of
// vertices of S with a neighbour outside S.
template <class Value>
SolveResult prefix_dp(const Graph& g, LayoutCost cost, PNorm p) {
  const int n = g.n();
  const std::size_t states = std::size_t{1} << n;
  const VertexMask all = g.all_mask();
  const int max_cost = cost == LayoutCost::cutwidth ? g.m() : n;
  const auto pw = power_table<Value>(max_cost, p);

  std::vector<Value> best(states);
  std::vector<std::uint16_t> cut;
  if (cost == LayoutCost::cutwidth) cut.assign(states, 0);
  best[0] = Value(0);
  for (std::size_t s = 1; s < states; ++s) {
    const VertexMask set = s;
    const int low = std::countr_zero(set);
    const VertexMask rest = set & (set - 1);
    int c;
    if (cost == LayoutCost::cutwidth) {
      c = cut[rest] + g.degree(low) - 2 * std::popcount(g.row(low) & rest);
      cut[s] = static_cast<std::uint16_t>(c);
    } else {
      c = 0;
      const VertexMask outside = all & ~set;
      for (VertexMask it = set; it; it &= it - 1) {
        if (g.row(std::countr_zero(it)) & outside) ++c;
      }
    }
    const Value* m = nullptr;
    for (VertexMask it = set; it; it &= it - 1) {
      const Value& cand = best[set & ~bit(std::countr_zero(it))];
      if (!m || cand < *m) m = &cand;
    }
    if (p.is_infinite()) {
      best[s] = std::max(*m, pw[c]);
    } else {
      best[s] = *m + pw[c];
    }
  }

  std::vector<Vertex> sequence(n);
  VertexMask set = all;
  for (int position = n; position >= 1; --position) {
    Vertex arg = -1;
    for (VertexMask it = set; it; it &= it - 1) {
      Vertex v = std::countr_zero(it);
      if (arg < 0 || best[set & ~bit(v)] < best[set & ~bit(arg)]) arg = v;
    }
    sequence[position - 1] = arg;
    set &= ~bit(arg);
  }
  return SolveResult{LayoutValue(p, to_big(best[states - 1])),
                     LinearOrdering::from_sequence(sequence), SolveMethod::subset_dp,
                     static_cast<std::uint64_t>(states)};
}

SolveResult trivial_result(const Graph& g, PNorm p, SolveMethod method) {
  return SolveResult{LayoutValue(p, 0), LinearOrdering::identity(g.n()), method, 1};
}

SolveResult prefix_dp_dispatch(const Graph& g, LayoutCost cost, PNorm p) {
  const int n = g.n();
  if (n > kSubsetDpLimit) {
    throw CapacityError(to_string(cost) + ": subset DP supports n <= " +
                        std::to_string(kSubsetDpLimit) + ", got " + std::to_string(n));
  }
  if (n <= 1) return trivial_result(g, p, SolveMethod::subset_dp);
  if (p.is_infinite()) return prefix_dp<std::uint16_t>(g, cost, p);
  const int max_cost = cost == LayoutCost::cutwidth ? g.m() : n;
  if (fits_u64(static_cast<std::uint64_t>(n) + 1, max_cost, p)) {
    return prefix_dp<std::uint64_t>(g, cost, p);
  }
  if (n > 16) {
    throw CapacityError(to_string(cost) + ": p too large for exact DP at n > 16");
  }
  return prefix_dp<BigInt>(g, cost, p);
}

template <class Value>
struct BandwidthSearch {
  const Graph& g;
  PNorm p;
  std::vector<Value> pw;
  std::vector<int> pos;
  std::vector<Vertex> seq;
  std::vector<int> unplaced_neighbors;
  Value best;
  std::vector<Vertex> best_seq;
  std::uint64_t nodes = 0;

  Value combine(const Value& a, const Value& b) const {
    return p.is_infinite() ? std::max(a, b) : Value(a + b);
  }

  Value lower_bound(int placed, const Value& fixed) const {
    Value lb = fixed;
    for (int i = 0; i < placed; ++i) {
      Vertex u = seq[i];
      int r = unplaced_neighbors[u];
      if (r == 0) continue;
      if (p.is_infinite()) {
        lb = std::max(lb, static_cast<Value>(placed + r - pos[u]));
      } else {
        for (int j = 1; j <= r; ++j) lb += pw[placed + j - pos[u]];
      }
    }
    int loose = 0;
    for (auto [a, b] : g.edges()) {
      if (pos[a] == 0 && pos[b] == 0) ++loose;
    }
    if (loose > 0) {
      lb = p.is_infinite() ? std::max(lb, Value(1)) : Value(lb + Value(loose));
    }
    return lb;
  }

  void place(Vertex v, int position) {
    pos[v] = position;
    seq[position - 1] = v;
    for (Vertex w : g.neighbors(v)) --unplaced_neighbors[w];
  }

  void unplace(Vertex v) {
    pos[v] = 0;
    for (Vertex w : g.neighbors(v)) ++unplaced_neighbors[w];
  }

  void search(int placed, const Value& fixed) {
    const int n = g.n();
    if (placed == n) {
      if (fixed < best) {
        best = fixed;
        best_seq = seq;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (pos[v] != 0) continue;
      Value added = fixed;
      for (Vertex u : g.neighbors(v)) {
        if (pos[u] != 0) added = combine(added, pw[placed + 1 - pos[u]]);
      }
      ++nodes;
      place(v, placed + 1);
      if (lower_bound(placed + 1, added) < best) search(placed + 1, added);
      unplace(v);
    }
  }
};

// Best BFS (Cuthill-McKee style) ordering over all start vertices; seeds the
// branch-and-bound incumbent.
std::vector<Vertex> bfs_heuristic(const Graph& g, PNorm p) {
  std::vector<Vertex> best_seq;
  LayoutValue best_value(p, 0);
  for (Vertex start = 0; start < g.n(); ++start) {
    std::vector<Vertex> seq;
    std::vector<char> seen(g.n(), 0);
    for (Vertex k = -1; k < g.n(); ++k) {
      const Vertex root = k < 0 ? start : k;
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = seq.size();
      seq.push_back(root);
      for (; head < seq.size(); ++head) {
        for (Vertex w : g.neighbors(seq[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            seq.push_back(w);
          }
        }
      }
    }
    auto value = evaluate(g, LayoutCost::bandwidth, p, LinearOrdering::from_sequence(seq));
    if (best_seq.empty() || value < best_value) {
      best_value = value;
      best_seq = seq;
    }
  }
  return best_seq;
}

template <class Value>
SolveResult bandwidth_bnb(const Graph& g, PNorm p) {
  const int n = g.n();
  BandwidthSearch<Value> s{g, p, power_table<Value>(n, p), std::vector<int>(n, 0),
                           std::vector<Vertex>(n, 0), std::vector<int>(n, 0), Value(0), {}, 0};
  for (Vertex v = 0; v < n; ++v) s.unplaced_neighbors[v] = g.degree(v);
  s.best_seq = bfs_heuristic(g, p);
  {
    auto f = LinearOrdering::from_sequence(s.best_seq);
    Value v(0);
    for (int c : band_vector(g, f)) v = s.combine(v, s.pw[c]);
    s.best = v;
  }
  s.search(0, Value(0));
  return SolveResult{LayoutValue(p, to_big(s.best)), LinearOrdering::from_sequence(s.best_seq),
                     SolveMethod::branch_and_bound, s.nodes};
}

template <class Value>
SolveResult brute_force(const Graph& g, LayoutCost cost, PNorm p) {
  const int n = g.n();
  const int max_cost = cost == LayoutCost::cutwidth ? g.m() : n;
  const auto pw = power_table<Value>(max_cost, p);
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::vector<int> position(n);
  std::vector<int> diff(n + 2);
  std::vector<Vertex> best_seq = seq;
  Value best{};
  bool have = false;
  std::uint64_t nodes = 0;
  do {
    ++nodes;
    for (int i = 0; i < n; ++i) position[seq[i]] = i + 1;
    Value total(0);
    auto add = [&](int c) {
      if (p.is_infinite()) {
        total = std::max(total, pw[c]);
      } else {
        total += pw[c];
      }
    };
    if (cost == LayoutCost::bandwidth) {
      for (auto [u, v] : g.edges()) add(std::abs(position[u] - position[v]));
    } else {
      std::fill(diff.begin(), diff.end(), 0);
      if (cost == LayoutCost::cutwidth) {
        for (auto [u, v] : g.edges()) {
          int a = std::min(position[u], position[v]);
          int b = std::max(position[u], position[v]);
          ++diff[a + 1];
          --diff[b + 1];
        }
      } else {
        for (Vertex x = 0; x < n; ++x) {
          int last = 0;
          for (Vertex y : g.neighbors(x)) last = std::max(last, position[y]);
          if (last > position[x]) {
            ++diff[position[x]];
            --diff[last];
          }
        }
      }
      int running = 0;
      for (int i = 1; i <= n; ++i) {
        running += diff[i];
        add(running);
      }
    }
    if (!have || total < best) {
      best = total;
      best_seq = seq;
      have = true;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return SolveResult{LayoutValue(p, to_big(best)), LinearOrdering::from_sequence(best_seq),
                     SolveMethod::brute_force, nodes};
}

}  // namespace

SolveResult brute_force_layout(const Graph& g, LayoutCost cost, PNorm p) {
  if (g.n() > kBruteForceLimit) {
    throw CapacityError("brute force supports n <= " + std::to_string(kBruteForceLimit));
  }
  if (g.n() == 0) return trivial_result(g, p, SolveMethod::brute_force);
  const int max_cost = cost == LayoutCost::cutwidth ? g.m() : g.n();
  const std::uint64_t terms = cost == LayoutCost::bandwidth ? g.m() : g.n();
  if (p.is_infinite() || fits_u64(terms, max_cost, p)) {
    return brute_force<std::uint64_t>(g, cost, p);
  }
  return brute_force<BigInt>(g, cost, p);
}

SolveResult min_cutwidth(const Graph& g, PNorm p, bool use_brute_force) {
  if (use_brute_force) return brute_force_layout(g, LayoutCost::cutwidth, p);
  return prefix_dp_dispatch(g, LayoutCost::cutwidth, p);
}

SolveResult min_vertex_separation(const Graph& g, PNorm p) {
  return prefix_dp_dispatch(g, LayoutCost::vertex_separation, p);
}

SolveResult min_bandwidth(const Graph& g, PNorm p) {
  const int n = g.n();
  if (n > kBandwidthLimit) {
    throw CapacityError("bandwidth: branch and bound supports n <= " +
                        std::to_string(kBandwidthLimit) + ", got " + std::to_string(n));
  }
  if (n <= 1 || g.m() == 0) {
    return SolveResult{LayoutValue(p, 0), LinearOrdering::identity(n),
                       SolveMethod::branch_and_bound, 1};
  }
  if (fits_u64(static_cast<std::uint64_t>(g.m()) + static_cast<std::uint64_t>(n), n, p)) {
    return bandwidth_bnb<std::uint64_t>(g, p);
  }
  return bandwidth_bnb<BigInt>(g, p);
}

SolveResult solve_layout(const Graph& g, LayoutCost cost, PNorm p) {
  switch (cost) {
    case LayoutCost::cutwidth: return min_cutwidth(g, p);
    case LayoutCost::bandwidth: return min_bandwidth(g, p);
    case LayoutCost::vertex_separation: return min_vertex_separation(g, p);
  }
  throw ParameterError("unknown layout cost");
}

}  // namespace widthlab
