#include "widthlab/audit.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "widthlab/decomposition.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/layout.hpp"
#include "widthlab/profiles.hpp"
#include "widthlab/separation.hpp"
#include "widthlab/serialize.hpp"
#include "widthlab/wiring.hpp"

namespace widthlab {

std::vector<NamedGraph> audit_corpus(std::uint64_t seed, int count, int max_n) {
  if (count < 0 || max_n < 1) throw ParameterError("count must be >= 0 and max_n >= 1");
  Rng base(seed);
  std::vector<NamedGraph> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = base.split(static_cast<std::uint64_t>(i));
    const int n = rng.between(1, max_n);
    Graph g = rng.chance(1, 2) ? random_connected_graph(n, rng.between(0, n), rng)
                               : random_graph(n, rng.between(1, 4), 6, rng);
    out.push_back({"random-" + std::to_string(i), std::move(g)});
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::finding: return "finding";
  }
  return "?";
}

namespace {

const PNorm kInf = PNorm::infinity();

int as_int(const LayoutValue& v) { return static_cast<int>(v.raw()); }

int max_of(const std::vector<int>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

AuditCheck run_check(const std::string& name, const std::function<void(AuditCheck&)>& body) {
  AuditCheck c;
  c.name = name;
  c.values = json::object();
  try {
    body(c);
  } catch (const CapacityError& e) {
    c.status = CheckStatus::skipped;
    c.note = e.what();
  }
  return c;
}

void expect(AuditCheck& c, bool ok, const std::string& what) {
  if (!ok && c.status != CheckStatus::fail) {
    c.status = CheckStatus::fail;
    c.note = what;
  } else if (!ok) {
    c.note += "; " + what;
  }
}

AuditEntry audit_graph(const NamedGraph& ng, const AuditOptions& opt) {
  const Graph& g = ng.graph;
  const int n = g.n();
  const int delta = max_degree(g);
  AuditEntry e{ng.name, g, {}};

  e.checks.push_back(run_check("l1_identity", [&](AuditCheck& c) {
    auto f = LinearOrdering::identity(n);
    const auto cw1 = evaluate(g, LayoutCost::cutwidth, PNorm::finite(1), f);
    const auto bw1 = evaluate(g, LayoutCost::bandwidth, PNorm::finite(1), f);
    c.values["identity_cw1"] = cw1.raw().str();
    c.values["identity_bw1"] = bw1.raw().str();
    expect(c, cw1 == bw1, "sum of cuts differs from sum of stretches");
    const auto mc = min_cutwidth(g, PNorm::finite(1));
    const auto mb = min_bandwidth(g, PNorm::finite(1));
    c.values["min_cw1"] = mc.value.raw().str();
    c.values["min_bw1"] = mb.value.raw().str();
    expect(c, mc.value.raw() == mb.value.raw(), "min cw^1 differs from min bw^1");
    if (c.status == CheckStatus::fail) {
      c.certificate["cw_ordering"] = to_json(mc.witness);
      c.certificate["bw_ordering"] = to_json(mb.witness);
    }
  }));

  // shared solver values for the comparison checks
  std::optional<CutsizeResult> cut;
  std::optional<TreewidthResult> tw;
  std::optional<PathwidthResult> pw;
  std::optional<SolveResult> cw, bw;
  e.checks.push_back(run_check("comparison_chain", [&](AuditCheck& c) {
    cut = cutsize(g);
    tw = treewidth(g);
    if (opt.corrupt_treewidth) tw->value += 1;
    pw = pathwidth(g);
    cw = min_cutwidth(g, kInf);
    bw = min_bandwidth(g, kInf);
    const int vcut = cut->value, vtw = tw->value, vpw = pw->value;
    const int vcw = as_int(cw->value), vbw = as_int(bw->value);
    c.values = {{"cut", vcut}, {"tw", vtw}, {"pw", vpw}, {"cw", vcw}, {"bw", vbw}, {"delta", delta}};
    if (n >= 2) {
      expect(c, vcut <= vtw, "cut > tw");
    } else {
      c.note = "cut <= tw not asserted for a single vertex (cut = 1, tw = 0)";
    }
    expect(c, vtw <= vpw, "tw > pw");
    expect(c, vpw <= vcw, "pw > cw");
    expect(c, vcw <= delta * vpw, "cw > Delta pw");
    expect(c, vcw <= (delta / 2) * vbw + 1, "cw > floor(Delta/2) bw + 1");
    if (c.status == CheckStatus::fail) {
      c.certificate["cutset"] = cut->certificate.cutset;
      c.certificate["elimination_order"] = to_json(tw->certificate.order);
      c.certificate["pw_ordering"] = to_json(pw->ordering);
      c.certificate["cw_ordering"] = to_json(cw->witness);
      c.certificate["bw_ordering"] = to_json(bw->witness);
    }
  }));

  e.checks.push_back(run_check("cutwidth_lower_bound", [&](AuditCheck& c) {
    const int cut23 = cutsize(g, Rational(2, 3)).value;
    c.values["cut_2_3"] = cut23;
    for (unsigned p = 1; p <= 3; ++p) {
      const auto m = min_cutwidth(g, PNorm::finite(p));
      const BigInt lower = BigInt(n / 3) * boost::multiprecision::pow(BigInt(cut23), p);
      c.values["cw" + std::to_string(p)] = m.value.raw().str();
      c.values["lower" + std::to_string(p)] = lower.str();
      expect(c, m.value.raw() >= lower, "p = " + std::to_string(p) + ": cw^p below floor(n/3) cut^p");
      if (m.value.raw() < lower) c.certificate["ordering_p" + std::to_string(p)] = to_json(m.witness);
    }
  }));

  std::optional<SeparatorResult> sep;
  e.checks.push_back(run_check("separator_vs_cutsize", [&](AuditCheck& c) {
    sep = two_thirds_separator(g);
    const int cut13 = cutsize(g, Rational(1, 3)).value;
    c.values = {{"s", sep->value}, {"cut_1_3", cut13}};
    expect(c, sep->value <= cut13, "s > cut^{1/3}");
  }));

  e.checks.push_back(run_check("bandwidth_separator_bound", [&](AuditCheck& c) {
    if (!sep || !bw) throw CapacityError("needs s and bw");
    const int s = sep->value;
    const int b = as_int(bw->value);
    const double base = std::max(2, delta);
    c.values = {{"bw", b}, {"s", s}, {"n", n}, {"base", base}};
    if (s < 1 || s >= n) {
      c.status = CheckStatus::skipped;
      c.note = "log undefined (s = 0 or s >= n)";
      return;
    }
    const double bound = 6.0 * n / (std::log(static_cast<double>(n) / s) / std::log(base));
    c.values["bound"] = bound;
    if (b > bound) {
      c.status = CheckStatus::finding;
      c.note = "bw exceeds 6n / log_Delta(n/s)";
    }
  }));

  e.checks.push_back(run_check("dnc_ordering", [&](AuditCheck& c) {
    auto d = dnc_ordering(g);
    const int got = max_of(cut_vector(g, d.ordering));
    c.values = {{"cutwidth", got}, {"bound", d.bound}, {"max_cutset", d.max_cutset}, {"depth", d.depth}};
    expect(c, got <= d.bound, "ordering exceeds its recursion bound");
    if (got > d.bound) c.certificate["ordering"] = to_json(d.ordering);
  }));

  e.checks.push_back(run_check("grid_decomposition", [&](AuditCheck& c) {
    auto d = grid_decomposition(g);
    const auto problems = validate(d);
    const int width = max_bag(d);
    c.values = {{"max_bag", width}, {"bound", delta + std::max(delta, 1)}};
    expect(c, problems.empty(), problems.empty() ? "" : problems.front());
    expect(c, width <= delta + std::max(delta, 1), "bag larger than Delta + max(Delta, 1)");
  }));

  e.checks.push_back(run_check("wiring_round_trip", [&](AuditCheck& c) {
    auto d = grid_decomposition(g);
    const int k = max_bag(d);
    const BigInt l1 = width(d, PNorm::finite(1)).raw();
    auto w = wiring_from_decomposition(d);
    auto l = load(w);
    const int kw = std::max(l.fiber_max, l.walk_max);
    c.values = {{"decomposition_width", k}, {"wiring_load", kw}, {"volume", l.volume},
                {"decomposition_l1", l1.str()}};
    expect(c, kw <= std::max(delta, 1) * k, "wiring load above Delta k");
    expect(c, l.volume <= (1 + delta) * l1, "volume above (1 + Delta) V");
    auto back = decomposition_from_wiring(w);
    const auto problems = validate(back);
    expect(c, problems.empty(), problems.empty() ? "" : problems.front());
    bool isolated = false;
    for (Vertex x = 0; x < n; ++x) isolated = isolated || g.degree(x) == 0;
    const int back_width = max_bag(back);
    c.values["round_trip_width"] = back_width;
    c.values["observed_constant"] = kw == 0 ? 0.0 : static_cast<double>(back_width) / kw;
    expect(c, back_width <= (isolated ? 3 : 2) * kw, "round-trip bag above 2k");
    if (!isolated) {
      expect(c, width(back, PNorm::finite(1)).raw() <= 2 * kw * l.volume, "l1 width above 2kV");
    }
    if (c.status == CheckStatus::fail) c.certificate["wiring"] = to_json(w);
  }));
  return e;
}

}  // namespace

AuditReport audit(const std::vector<NamedGraph>& corpus, const AuditOptions& options) {
  if (options.jobs < 1) throw ParameterError("jobs must be positive");
  AuditReport report;
  report.entries.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) report.entries[i] = audit_graph(corpus[i], options);
  };
  if (options.jobs == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < options.jobs; ++j) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : report.entries) {
    for (const auto& c : e.checks) {
      switch (c.status) {
        case CheckStatus::pass: ++report.passed; break;
        case CheckStatus::fail: ++report.failed; break;
        case CheckStatus::skipped: ++report.skipped; break;
        case CheckStatus::finding: ++report.findings; break;
      }
    }
  }
  return report;
}

json to_json(const AuditReport& report) {
  json j;
  j["summary"] = {{"graphs", report.entries.size()},
                  {"passed", report.passed},
                  {"failed", report.failed},
                  {"skipped", report.skipped},
                  {"findings", report.findings}};
  j["graphs"] = json::array();
  for (const auto& e : report.entries) {
    json je;
    je["name"] = e.name;
    je["n"] = e.graph.n();
    je["m"] = e.graph.m();
    je["graph"] = graph_to_json(e.graph);
    je["checks"] = json::array();
    for (const auto& c : e.checks) {
      json jc;
      jc["check"] = c.name;
      jc["status"] = to_string(c.status);
      jc["values"] = c.values;
      if (!c.note.empty()) jc["note"] = c.note;
      if (!c.certificate.is_null()) jc["certificate"] = c.certificate;
      je["checks"].push_back(std::move(jc));
    }
    j["graphs"].push_back(std::move(je));
  }
  return j;
}

}  // namespace widthlab
