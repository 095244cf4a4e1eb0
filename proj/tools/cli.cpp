#include "widthlab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "widthlab/audit.hpp"
#include "widthlab/coarse_maps.hpp"
#include "widthlab/decomposition.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/graph_io.hpp"
#include "widthlab/layout.hpp"
#include "widthlab/profiles.hpp"
#include "widthlab/separation.hpp"
#include "widthlab/serialize.hpp"
#include "widthlab/wiring.hpp"

namespace widthlab {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  std::string manifest;
  std::string invariant;
  std::string p = "inf";
  std::string eps = "1/2";
  std::string family;
  std::vector<int> params;
  std::string format = "json";
  std::string kind;
  int radius = -1;
  int rmax = 8;
  int k = 2;
  int kappa = 1;
  std::uint64_t seed = 1;
  int jobs = 1;
  int count = 50;
  int max_n = 10;
  bool witness = false;
  bool inject_fault = false;
};

class AuditFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json number_or_string(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

const std::string& input_at(const Options& o, std::size_t i, const char* what) {
  if (o.inputs.size() <= i) throw ParameterError(std::string("missing --input for the ") + what);
  return o.inputs[i];
}

// "tree3", "grid2", "dl22" shorthands take --radius; "grid a b ..." is a
// grid_box of that many dimensions; "name:1,2" inlines parameters.
Graph resolve_family(std::string name, std::vector<int> params, int radius, std::uint64_t seed) {
  if (auto colon = name.find(':'); colon != std::string::npos) {
    std::stringstream list(name.substr(colon + 1));
    name = name.substr(0, colon);
    for (std::string item; std::getline(list, item, ',');) {
      try {
        params.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ParameterError("bad family parameter '" + item + "'");
      }
    }
  }
  auto need_radius = [&] {
    if (radius < 0) throw ParameterError(name + " needs --radius");
  };
  if (name == "tree3") {
    need_radius();
    return generate({Family::tree_ball, {3, radius}, {}});
  }
  if (name == "grid2") {
    need_radius();
    return family_ball({Family::grid_box, {2, 2 * radius + 1, 2 * radius + 1}, {}}, radius);
  }
  if (name == "dl22") {
    need_radius();
    return generate({Family::dl_ball, {2, 2, radius}, {}});
  }
  FamilySpec spec;
  if (name == "grid") {
    spec.family = Family::grid_box;
    spec.parameters = {static_cast<int>(params.size())};
    spec.parameters.insert(spec.parameters.end(), params.begin(), params.end());
  } else {
    spec.family = parse_family(name);
    spec.parameters = params;
  }
  spec.seed = seed;
  return family_ball(spec, radius);
}

Graph host_graph(const Options& o) {
  if (!o.inputs.empty()) return read_graph_file(o.inputs.front());
  if (o.family.empty()) throw ParameterError("give --family or --input");
  return resolve_family(o.family, o.params, o.radius, o.seed);
}

// ---------------------------------------------------------------- commands

std::string cmd_gen(const Options& o) {
  if (o.family.empty()) throw ParameterError("gen needs a family");
  Graph g = resolve_family(o.family, o.params, o.radius, o.seed);
  if (o.format == "edges") {
    std::ostringstream s;
    write_edge_list(s, g);
    return s.str();
  }
  if (o.format != "json") throw ParameterError("format must be json or edges");
  return dump(graph_to_json(g));
}

std::string cmd_solve(const Options& o) {
  Graph g = read_graph_file(input_at(o, 0, "graph"));
  const std::string& inv = o.invariant;
  json j;
  j["invariant"] = inv;
  j["n"] = g.n();
  j["m"] = g.m();
  auto layout = [&](LayoutCost cost) {
    const PNorm p = PNorm::parse(o.p);
    j["p"] = p.to_string();
    SolveResult r = solve_layout(g, cost, p);
    j["value"] = number_or_string(r.value.raw());
    j["value_root"] = r.value.root();
    j["method"] = to_string(r.method);
    j["nodes_explored"] = r.nodes_explored;
    if (o.witness) j["witness"] = to_json(r.witness);
  };
  if (inv == "cutwidth" || inv == "cw") {
    layout(LayoutCost::cutwidth);
  } else if (inv == "bandwidth" || inv == "bw") {
    layout(LayoutCost::bandwidth);
  } else if (inv == "vertex_separation" || inv == "vs") {
    layout(LayoutCost::vertex_separation);
  } else if (inv == "cutsize" || inv == "sep") {
    const Rational eps = parse_rational(o.eps);
    auto r = cutsize(g, eps);
    j["eps"] = to_string(eps);
    j["value"] = r.value;
    if (o.witness) {
      j["witness"] = {{"cutset", r.certificate.cutset}, {"component_sizes", r.certificate.component_sizes}};
    }
  } else if (inv == "separator") {
    auto r = two_thirds_separator(g);
    j["value"] = r.value;
    if (o.witness) j["witness"] = {{"a", r.certificate.a}, {"b", r.certificate.b}, {"s", r.certificate.s}};
  } else if (inv == "cheeger") {
    auto r = cheeger(g);
    j["value"] = to_string(r.value);
    if (o.witness) j["witness"] = r.witness;
  } else if (inv == "treewidth" || inv == "tw") {
    auto r = treewidth(g);
    j["value"] = r.value;
    if (o.witness) j["witness"] = {{"elimination_order", to_json(r.certificate.order)}};
  } else if (inv == "pathwidth" || inv == "pw") {
    auto r = pathwidth(g);
    j["value"] = r.value;
    if (o.witness) j["witness"] = to_json(r.ordering);
  } else {
    throw ParameterError("unknown invariant '" + inv + "'");
  }
  return dump(j);
}

std::string cmd_profile(const Options& o) {
  Graph host = host_graph(o);
  InvariantSpec spec{parse_invariant(o.invariant), PNorm::parse(o.p), parse_rational(o.eps)};
  return to_csv(profile(host, spec, o.rmax, o.jobs));
}

std::string cmd_audit(const Options& o) {
  auto corpus = audit_corpus(o.seed, o.count, o.max_n);
  for (const auto& path : o.inputs) corpus.push_back({path, read_graph_file(path)});
  AuditOptions opt;
  opt.jobs = o.jobs;
  opt.corrupt_treewidth = o.inject_fault;
  auto report = audit(corpus, opt);
  json j;
  j["corpus"] = {{"seed", o.seed}, {"count", o.count}, {"max_n", o.max_n}, {"inputs", o.inputs}};
  const json body = to_json(report);
  for (const auto& [key, value] : body.items()) j[key] = value;
  std::string text = dump(j);
  if (report.failed > 0) throw AuditFailed(text);
  return text;
}

// source/target graphs and the map for the coarse-map constructions
RegularMapCert load_map(const Options& o, const Graph& source, const Graph& target, std::size_t map_index) {
  if (o.inputs.size() > map_index) return map_from_json(read_json_file(o.inputs[map_index]), source, target);
  Rng rng(o.seed);
  auto cert = random_regular_map(source, target, o.kappa, rng);
  if (!cert) throw ParameterError("no " + std::to_string(o.kappa) + "-regular map found");
  return *cert;
}

json report_json(const ComparisonReport& r) {
  return {{"guest_vertices", r.guest_vertices}, {"guest_edges", r.guest_edges},
          {"vertices", r.vertices},             {"lower_size_ok", r.lower_size_ok},
          {"middle_size_ok", r.middle_size_ok}, {"upper_size_ok", r.upper_size_ok},
          {"max_walk_load", r.max_walk_load},   {"load_bound", r.load_bound.str()},
          {"load_ok", r.load_ok}};
}

std::string cmd_construct(const Options& o) {
  const std::string& kind = o.kind;
  json j;
  j["kind"] = kind;
  auto check_valid = [](const GDecomposition& d) {
    auto problems = validate(d);
    if (!problems.empty()) throw std::logic_error("constructed decomposition invalid: " + problems.front());
  };
  if (kind == "grid-decomp") {
    Graph g = read_graph_file(input_at(o, 0, "guest graph"));
    auto d = grid_decomposition(g);
    check_valid(d);
    const int delta = max_degree(g);
    j["decomposition"] = to_json(d);
    j["max_bag"] = max_bag(d);
    j["bound"] = delta + std::max(delta, 1);
  } else if (kind == "subdivide-transfer") {
    auto d = decomposition_from_json(read_json_file(input_at(o, 0, "decomposition")));
    if (o.k < 1) throw ParameterError("--k must be positive");
    auto sub = subdivide(d.host, std::vector<int>(d.host.m(), o.k));
    auto moved = subdivision_transfer(d, sub);
    check_valid(moved);
    j["decomposition"] = to_json(moved);
    j["max_bag_before"] = max_bag(d);
    j["max_bag_after"] = max_bag(moved);
  } else if (kind == "gamma-phi" || kind == "pullback-order" || kind == "pullback-decomp") {
    Graph source = read_graph_file(input_at(o, 0, "source graph"));
    Graph target = read_graph_file(input_at(o, 1, "target graph"));
    auto cert = load_map(o, source, target, 2);
    auto problems = verify_regular(cert);
    if (!problems.empty()) throw ParameterError("map is not regular: " + problems.front());
    auto cg = comparison_graph(cert);
    j["map"] = map_to_json(cert);
    if (kind == "gamma-phi") {
      j["comparison_graph"] = graph_to_json(cg.graph);
      j["walks"] = cg.walks;
      j["walk_load"] = cg.walk_load;
      j["edge_load"] = cg.edge_load;
      j["report"] = report_json(check_comparison(cert, cg));
    } else if (kind == "pullback-order") {
      auto g_order = min_cutwidth(cg.graph, PNorm::infinity()).witness;
      auto f = pullback_ordering(g_order, cert, cg);
      auto r = check_pullback(cert, cg, g_order, f);
      j["g_ordering"] = to_json(g_order);
      j["f_ordering"] = to_json(f);
      j["report"] = {{"long_edges", r.long_edges},
                     {"bandwidth_claim_failures", r.bandwidth_claim_failures},
                     {"corrected_claim_failures", r.corrected_claim_failures},
                     {"collision_constant", r.collision_constant},
                     {"cutwidth_claim_failures", r.cutwidth_claim_failures},
                     {"positions", r.positions}};
    } else {
      auto d_prime = decomposition_from_elimination(treewidth(cg.graph).certificate, cg.graph);
      auto pulled = pullback_decomposition(d_prime, cert, cg);
      check_valid(pulled);
      auto r = check_inflation(pulled, d_prime, cert, cg);
      j["comparison_decomposition"] = to_json(d_prime);
      j["decomposition"] = to_json(pulled);
      j["report"] = {{"measured", r.measured},
                     {"bound_power_of_sum", r.bound_power_of_sum.str()},
                     {"bound_sum_of_power", r.bound_sum_of_power.str()},
                     {"measured_failures", r.measured_failures},
                     {"power_of_sum_failures", r.power_of_sum_failures},
                     {"sum_of_power_failures", r.sum_of_power_failures}};
    }
  } else if (kind == "host-transfer") {
    auto d = decomposition_from_json(read_json_file(input_at(o, 0, "decomposition")));
    Graph target = read_graph_file(input_at(o, 1, "target graph"));
    auto cert = load_map(o, d.host, target, 2);
    auto t = host_transfer_decomposition(d, cert);
    check_valid(t.decomposition);
    const int c = t.overlap_constant;
    j["map"] = map_to_json(cert);
    j["decomposition"] = to_json(t.decomposition);
    j["overlap_constant"] = c;
    j["max_bag_before"] = max_bag(d);
    j["max_bag_after"] = max_bag(t.decomposition);
    for (unsigned p = 1; p <= 2; ++p) {
      const BigInt before = width(d, PNorm::finite(p)).raw();
      const BigInt after = width(t.decomposition, PNorm::finite(p)).raw();
      j["l" + std::to_string(p)] = {{"before", before.str()},
                                    {"after", after.str()},
                                    {"ok", after <= boost::multiprecision::pow(BigInt(c), p + 1) * before}};
    }
  } else if (kind == "wire-from-decomp") {
    auto d = decomposition_from_json(read_json_file(input_at(o, 0, "decomposition")));
    auto w = wiring_from_decomposition(d);
    auto l = load(w);
    j["wiring"] = to_json(w);
    j["load"] = {{"fiber_max", l.fiber_max}, {"walk_max", l.walk_max}, {"edge_max", l.edge_max},
                 {"volume", l.volume}};
    j["decomposition_width"] = max_bag(d);
  } else if (kind == "decomp-from-wire") {
    auto w = wiring_from_json(read_json_file(input_at(o, 0, "wiring")));
    auto d = decomposition_from_wiring(w);
    check_valid(d);
    auto l = load(w);
    j["decomposition"] = to_json(d);
    j["max_bag"] = max_bag(d);
    j["wiring_load"] = std::max(l.fiber_max, l.walk_max);
  } else if (kind == "dnc-order") {
    Graph g = read_graph_file(input_at(o, 0, "graph"));
    auto d = dnc_ordering(g, parse_rational(o.eps));
    auto cuts = cut_vector(g, d.ordering);
    j["ordering"] = to_json(d.ordering);
    j["cutwidth"] = cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
    j["bound"] = d.bound;
    j["max_cutset"] = d.max_cutset;
    j["depth"] = d.depth;
    j["trace"] = json::array();
    for (const auto& s : d.trace) {
      j["trace"].push_back({{"depth", s.depth}, {"vertices", s.vertices}, {"cutset", s.cutset}});
    }
  } else {
    throw ParameterError("unknown construction '" + kind + "'");
  }
  return dump(j);
}

void write_manifest(const Options& o, const std::vector<std::string>& args, double seconds) {
  json m;
  std::string line = "widthlab";
  for (const auto& a : args) line += " " + a;
  m["command"] = line;
  m["tool_version"] = kVersion;
  m["seed"] = o.seed;
  m["jobs"] = o.jobs;
  m["inputs"] = json::array();
  for (const auto& path : o.inputs) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(read_text_file(path))));
    m["inputs"].push_back({{"path", path}, {"fnv1a64", hex}});
  }
  m["wall_clock_seconds"] = seconds;
  std::ofstream f(o.manifest, std::ios::binary);
  if (!f) throw ParseError("cannot write manifest '" + o.manifest + "'");
  f << dump(m);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + o.out + "'");
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"widthlab: exact width invariants, profiles and coarse constructions", "widthlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "write the result here instead of stdout");
    c->add_option("--manifest", o.manifest, "also write a run manifest (JSON)");
    c->add_option("--seed", o.seed, "64-bit seed");
    // accepted everywhere; only profile and audit run in parallel
    c->add_option("--jobs", o.jobs, "worker threads (output does not depend on it)")
        ->envname("WIDTHLAB_JOBS")
        ->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "generate a family graph");
  common(gen);
  gen->add_option("name", o.family, "family name or shorthand (tree3, grid2, dl22, grid)");
  gen->add_option("params", o.params, "family parameters");
  gen->add_option("--family", o.family, "family name");
  gen->add_option("--radius", o.radius, "take the ball of this radius");
  gen->add_option("--format", o.format, "json or edges");

  auto* solve = app.add_subcommand("solve", "solve one invariant exactly");
  common(solve);
  solve->add_option("--invariant", o.invariant, "cutwidth|bandwidth|vertex_separation|cutsize|separator|cheeger|treewidth|pathwidth")
      ->required();
  solve->add_option("--input", o.inputs, "graph file (JSON or edge list)")->required();
  solve->add_option("--p", o.p, "norm exponent: positive integer or inf");
  solve->add_option("--eps", o.eps, "cutsize ratio a/b");
  solve->add_flag("--witness", o.witness, "include a witness");

  auto* prof = app.add_subcommand("profile", "profile table of a finite host");
  common(prof);
  prof->add_option("--family", o.family, "host family or shorthand");
  prof->add_option("--params", o.params, "family parameters");
  prof->add_option("--input", o.inputs, "host graph file instead of a family");
  prof->add_option("--radius", o.radius, "ball radius around the basepoint");
  prof->add_option("--invariant", o.invariant, "sep|cw|bw|vs|tw|pw|cogrowth")->required();
  prof->add_option("--p", o.p, "norm exponent: positive integer or inf");
  prof->add_option("--eps", o.eps, "cutsize ratio a/b");
  prof->add_option("--rmax", o.rmax, "largest subgraph size")->check(CLI::PositiveNumber);

  auto* aud = app.add_subcommand("audit", "run the inequality audit");
  common(aud);
  aud->add_option("--count", o.count, "random graphs in the corpus")->check(CLI::NonNegativeNumber);
  aud->add_option("--max-n", o.max_n, "largest random graph")->check(CLI::PositiveNumber);
  aud->add_option("--input", o.inputs, "extra graph files");
  aud->add_flag("--inject-fault", o.inject_fault, "corrupt the treewidth solver (self-test)");

  auto* con = app.add_subcommand("construct", "build and certify a construction");
  common(con);
  con->add_option("kind", o.kind,
                  "gamma-phi|pullback-order|pullback-decomp|host-transfer|grid-decomp|"
                  "subdivide-transfer|wire-from-decomp|decomp-from-wire|dnc-order")
      ->required();
  con->add_option("--input", o.inputs, "input files, in the order the construction expects");
  con->add_option("--kappa", o.kappa, "regularity constant for random maps")->check(CLI::PositiveNumber);
  con->add_option("--k", o.k, "edges per subdivided edge");
  con->add_option("--eps", o.eps, "cutsize ratio a/b");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::string text;
    if (gen->parsed()) text = cmd_gen(o);
    else if (solve->parsed()) text = cmd_solve(o);
    else if (prof->parsed()) text = cmd_profile(o);
    else if (aud->parsed()) text = cmd_audit(o);
    else text = cmd_construct(o);
    emit(o, text, out);
    if (!o.manifest.empty()) {
      write_manifest(o, args, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return kExitOk;
  } catch (const AuditFailed& e) {
    emit(o, e.what(), out);
    err << "audit: assertion checks failed; see the report for certificates\n";
    return kExitAuditFailure;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParameterError& e) {
    err << "input: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace widthlab
