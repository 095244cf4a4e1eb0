#include "widthlab/profiles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace widthlab {

// ---------------------------------------------------------------- enumeration

namespace {

class Esu {
 public:
  Esu(const Graph& g, int r, const std::function<void(const std::vector<Vertex>&)>& fn)
      : g_(g), r_(r), fn_(fn), near_(g.n(), 0) {}

  void run(Vertex root) {
    if (r_ < 1) return;
    root_ = root;
    std::vector<Vertex> ext;
    for (Vertex u : g_.neighbors(root)) {
      if (u > root) ext.push_back(u);
    }
    add(root);
    extend(std::move(ext));
    remove(root);
  }

 private:
  void add(Vertex w) {
    sub_.push_back(w);
    ++near_[w];
    for (Vertex u : g_.neighbors(w)) ++near_[u];
  }
  void remove(Vertex w) {
    sub_.pop_back();
    --near_[w];
    for (Vertex u : g_.neighbors(w)) --near_[u];
  }

  void extend(std::vector<Vertex> ext) {
    fn_(sub_);
    if (static_cast<int>(sub_.size()) == r_) return;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      // exclusive neighbours of w: outside the closed neighbourhood of sub
      for (Vertex u : g_.neighbors(w)) {
        if (u > root_ && near_[u] == 0) next.push_back(u);
      }
      add(w);
      extend(std::move(next));
      remove(w);
    }
  }

  const Graph& g_;
  const int r_;
  const std::function<void(const std::vector<Vertex>&)>& fn_;
  std::vector<int> near_;
  std::vector<Vertex> sub_;
  Vertex root_ = 0;
};

}  // namespace

void for_each_connected_subset(const Graph& g, int r, Vertex root,
                               const std::function<void(const std::vector<Vertex>&)>& fn) {
  if (root < 0 || root >= g.n()) throw ParameterError("root out of range");
  Esu(g, r, fn).run(root);
}

std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, int r) {
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    for_each_connected_subset(g, r, v, [&](const std::vector<Vertex>& s) {
      VertexSet sorted = s;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
    });
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ---------------------------------------------------------------- invariants

std::string to_string(Invariant inv) {
  switch (inv) {
    case Invariant::sep: return "sep";
    case Invariant::cw: return "cw";
    case Invariant::bw: return "bw";
    case Invariant::vs: return "vs";
    case Invariant::tw: return "tw";
    case Invariant::pw: return "pw";
    case Invariant::cogrowth: return "cogrowth";
  }
  return "?";
}

Invariant parse_invariant(const std::string& name) {
  static const std::pair<const char*, Invariant> names[] = {
      {"sep", Invariant::sep},           {"cutsize", Invariant::sep},
      {"cw", Invariant::cw},             {"cutwidth", Invariant::cw},
      {"bw", Invariant::bw},             {"bandwidth", Invariant::bw},
      {"vs", Invariant::vs},             {"vertex_separation", Invariant::vs},
      {"tw", Invariant::tw},             {"treewidth", Invariant::tw},
      {"pw", Invariant::pw},             {"pathwidth", Invariant::pw},
      {"cogrowth", Invariant::cogrowth},
  };
  for (auto [n, inv] : names) {
    if (name == n) return inv;
  }
  throw ParameterError("unknown invariant '" + name + "'");
}

std::string to_string(const InvariantSpec& spec) {
  switch (spec.invariant) {
    case Invariant::sep: return "sep(" + to_string(spec.eps) + ")";
    case Invariant::cw:
    case Invariant::bw:
    case Invariant::vs: return to_string(spec.invariant) + "(" + spec.p.to_string() + ")";
    default: return to_string(spec.invariant);
  }
}

namespace {

bool is_layout(Invariant inv) {
  return inv == Invariant::cw || inv == Invariant::bw || inv == Invariant::vs;
}

bool has_packing(const InvariantSpec& spec) { return is_layout(spec.invariant) && !spec.p.is_infinite(); }

}  // namespace

BigInt evaluate_invariant(const InvariantSpec& spec, const Graph& g) {
  switch (spec.invariant) {
    case Invariant::sep: return cutsize(g, spec.eps).value;
    case Invariant::cw: return min_cutwidth(g, spec.p).value.raw();
    case Invariant::bw: return min_bandwidth(g, spec.p).value.raw();
    case Invariant::vs: return min_vertex_separation(g, spec.p).value.raw();
    case Invariant::tw: return treewidth(g).value;
    case Invariant::pw: return pathwidth(g).value;
    case Invariant::cogrowth: {
      if (g.n() == 0) throw ParameterError("cogrowth of the empty graph");
      auto d = intrinsic_diameter(g);
      return d ? *d : -1;
    }
  }
  return 0;
}

int invariant_capacity(const InvariantSpec& spec) {
  switch (spec.invariant) {
    case Invariant::sep: return kCutsizeLimit;
    case Invariant::cw:
    case Invariant::vs:
    case Invariant::pw: return kSubsetDpLimit;
    case Invariant::bw: return kBandwidthLimit;
    case Invariant::tw: return kTreewidthLimit;
    case Invariant::cogrowth: return kMaskCapacity;
  }
  return 0;
}

std::string format_value(const InvariantSpec&, const BigInt& raw) { return raw.str(); }

std::string format_value_root(const InvariantSpec& spec, const BigInt& raw) {
  if (!has_packing(spec)) return raw.str();
  const double root = std::pow(raw.convert_to<double>(), 1.0 / spec.p.p());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", root);
  return buf;
}

// ---------------------------------------------------------------- profile engine

namespace {

constexpr std::size_t kPackCandidates = 4;
constexpr std::size_t kCacheLimit = std::size_t{1} << 20;

struct Scored {
  BigInt value;
  VertexSet set;
};

// better(a, b): a should replace b as the row witness
bool better(const Scored& a, const Scored& b, bool minimise) {
  if (a.value != b.value) return minimise ? a.value < b.value : a.value > b.value;
  return a.set < b.set;
}

struct SizeSummary {
  std::optional<Scored> best;
  std::vector<Scored> top;  // finite p: best few, for packing
};

void offer_top(std::vector<Scored>& top, const Scored& s) {
  auto pos = std::find_if(top.begin(), top.end(), [&](const Scored& t) { return better(s, t, false); });
  if (pos == top.end() && top.size() >= kPackCandidates) return;
  top.insert(pos, s);
  if (top.size() > kPackCandidates) top.pop_back();
}

class Worker {
 public:
  Worker(const Graph& host, const InvariantSpec& spec, int limit, std::size_t cache_limit)
      : host_(host), spec_(spec), limit_(limit), cache_limit_(cache_limit), local_(host.n(), -1),
        sizes_(limit + 1) {}

  void process(Vertex root) {
    for_each_connected_subset(host_, limit_, root, [&](const std::vector<Vertex>& s) { visit(s); });
  }

  std::vector<SizeSummary>& sizes() { return sizes_; }

 private:
  void visit(const std::vector<Vertex>& s) {
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    const int k = static_cast<int>(sorted.size());
    for (int i = 0; i < k; ++i) local_[sorted[i]] = i;
    std::string key(static_cast<std::size_t>(k) * 4, '\0');
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
      std::uint32_t row = 0;
      for (Vertex u : host_.neighbors(sorted[i])) {
        const int j = local_[u];
        if (j >= 0) {
          row |= std::uint32_t{1} << j;
          if (j > i) edges.push_back({i, j});
        }
      }
      std::memcpy(key.data() + 4 * i, &row, 4);
    }
    for (Vertex v : sorted) local_[v] = -1;

    BigInt value;
    auto hit = cache_.find(key);
    if (hit != cache_.end()) {
      value = hit->second;
    } else {
      std::sort(edges.begin(), edges.end());
      value = evaluate_invariant(spec_, Graph(k, std::move(edges)));
      if (cache_.size() < cache_limit_) cache_.emplace(std::move(key), value);
    }
    Scored scored{std::move(value), std::move(sorted)};
    auto& summary = sizes_[k];
    const bool minimise = spec_.invariant == Invariant::cogrowth;
    if (has_packing(spec_)) offer_top(summary.top, scored);
    if (!summary.best || better(scored, *summary.best, minimise)) summary.best = std::move(scored);
  }

  const Graph& host_;
  const InvariantSpec& spec_;
  const int limit_;
  const std::size_t cache_limit_;
  std::vector<int> local_;
  std::vector<SizeSummary> sizes_;
  std::unordered_map<std::string, BigInt> cache_;
};

}  // namespace

ProfileTable profile(const Graph& host, const InvariantSpec& spec, int r_max, int jobs) {
  if (r_max < 1) throw ParameterError("r_max must be positive");
  if (jobs < 1) throw ParameterError("jobs must be positive");
  const bool minimise = spec.invariant == Invariant::cogrowth;
  const int limit = std::min({r_max, invariant_capacity(spec), host.n()});

  std::vector<Worker> workers;
  for (int j = 0; j < jobs; ++j) workers.emplace_back(host, spec, limit, kCacheLimit / static_cast<std::size_t>(jobs));
  std::atomic<Vertex> next{0};
  auto drain = [&](Worker& w) {
    for (Vertex v = next++; v < host.n(); v = next++) w.process(v);
  };
  if (jobs == 1) {
    drain(workers[0]);
  } else {
    std::vector<std::thread> threads;
    for (auto& w : workers) threads.emplace_back(drain, std::ref(w));
    for (auto& t : threads) t.join();
  }

  // merge: pure max/argmax per size, so the result is schedule independent
  std::vector<SizeSummary> merged(limit + 1);
  for (auto& w : workers) {
    for (int k = 1; k <= limit; ++k) {
      auto& from = w.sizes()[k];
      auto& into = merged[k];
      if (from.best && (!into.best || better(*from.best, *into.best, minimise))) into.best = from.best;
      for (const auto& s : from.top) offer_top(into.top, s);
    }
  }

  ProfileTable t{spec, host, r_max, {}};
  std::optional<Scored> running;
  std::vector<Scored> pool;
  for (int r = 1; r <= r_max; ++r) {
    ProfileRow row;
    row.r = r;
    if (r > limit) {
      // beyond the solver (or cogrowth beyond the host); rows past the host
      // size repeat the last row for max-profiles
      if (r > host.n() && host.n() <= invariant_capacity(spec) && !minimise && running) {
        row.value = running->value;
        row.witness = running->set;
      } else {
        row.skipped = true;
      }
      t.rows.push_back(std::move(row));
      continue;
    }
    const auto& here = merged[r];
    if (minimise) {
      if (here.best) {
        row.value = here.best->value;
        row.witness = here.best->set;
      } else {
        row.skipped = true;
      }
      t.rows.push_back(std::move(row));
      continue;
    }
    if (here.best && (!running || better(*here.best, *running, false))) running = here.best;
    if (!running) {
      row.skipped = true;
      t.rows.push_back(std::move(row));
      continue;
    }
    row.value = running->value;
    row.witness = running->set;
    if (has_packing(spec)) {
      for (const auto& s : here.top) pool.push_back(s);
      std::sort(pool.begin(), pool.end(), [](const Scored& a, const Scored& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
        return a.set < b.set;
      });
      std::vector<char> used(host.n(), 0);
      int budget = r;
      BigInt total = 0;
      VertexSet packed;
      for (const auto& s : pool) {
        if (static_cast<int>(s.set.size()) > budget) continue;
        if (std::any_of(s.set.begin(), s.set.end(), [&](Vertex v) { return used[v] != 0; })) continue;
        for (Vertex v : s.set) used[v] = 1;
        budget -= static_cast<int>(s.set.size());
        total += s.value;
        packed.insert(packed.end(), s.set.begin(), s.set.end());
      }
      std::sort(packed.begin(), packed.end());
      row.packed_value = total;
      row.packed_witness = std::move(packed);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

ProfileTable profile(const FamilySpec& family, int radius, const InvariantSpec& spec, int r_max,
                     int jobs) {
  return profile(family_ball(family, radius), spec, r_max, jobs);
}

CogrowthRow cogrowth(const Graph& host, int r) {
  if (r < 1 || r > host.n()) throw ParameterError("r must lie between 1 and the host size");
  auto t = profile(host, InvariantSpec{Invariant::cogrowth, PNorm::infinity(), Rational(1, 2)}, r);
  const auto& row = t.rows.back();
  if (row.skipped) throw ParameterError("no connected subset of that size");
  return {r, static_cast<int>(row.value), row.witness};
}

std::string to_csv(const ProfileTable& t) {
  std::ostringstream out;
  out << "r,value,value_root,witness,status,packed_value,packed_witness\n";
  auto join = [](const VertexSet& s) {
    std::string text;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) text += ';';
      text += std::to_string(s[i]);
    }
    return text;
  };
  for (const auto& row : t.rows) {
    out << row.r << ',';
    if (row.skipped) {
      out << ",,,skipped,,\n";
      continue;
    }
    out << format_value(t.spec, row.value) << ',' << format_value_root(t.spec, row.value) << ','
        << join(row.witness) << ",ok,";
    if (row.packed_value) out << row.packed_value->str() << ',' << join(row.packed_witness);
    else out << ',';
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- divide and conquer

namespace {

struct DncBuilder {
  const Graph& g;
  Rational eps;
  int delta;
  std::vector<Vertex> sequence;
  std::vector<DncStep> trace;
  int max_cutset = 0;
  int depth = 0;

  // Appends the piece's ordering; returns its certified cutwidth bound.
  int build(const VertexSet& piece, int level) {
    depth = std::max(depth, level + 1);
    Graph sub = induced_subgraph(g, piece);
    if (sub.m() == 0) {
      trace.push_back({piece, {}, level});
      sequence.insert(sequence.end(), piece.begin(), piece.end());
      return 0;
    }
    auto cut = cutsize(sub, eps);
    VertexSet cutset;
    std::vector<char> removed(sub.n(), 0);
    for (Vertex c : cut.certificate.cutset) {
      cutset.push_back(piece[c]);
      removed[c] = 1;
    }
    trace.push_back({piece, cutset, level});
    max_cutset = std::max(max_cutset, static_cast<int>(cutset.size()));
    VertexSet rest;
    for (Vertex v = 0; v < sub.n(); ++v) {
      if (!removed[v]) rest.push_back(v);
    }
    Graph remainder = induced_subgraph(sub, rest);
    int child = 0;
    for (const auto& comp : connected_components(remainder)) {
      VertexSet part;
      for (Vertex v : comp) part.push_back(piece[rest[v]]);
      child = std::max(child, build(part, level + 1));
    }
    sequence.insert(sequence.end(), cutset.begin(), cutset.end());
    return delta * static_cast<int>(cutset.size()) + child;
  }
};

}  // namespace

DncResult dnc_ordering(const Graph& g, Rational eps) {
  DncBuilder b{g, eps, max_degree(g), {}, {}, 0, 0};
  VertexSet all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  DncResult r;
  r.bound = g.n() == 0 ? 0 : b.build(all, 0);
  r.ordering = LinearOrdering::from_sequence(b.sequence);
  r.trace = std::move(b.trace);
  r.max_cutset = b.max_cutset;
  r.depth = g.n() == 0 ? 0 : b.depth;
  return r;
}

}  // namespace widthlab
