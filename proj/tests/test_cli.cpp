#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "widthlab/cli.hpp"
#include "widthlab/coarse_maps.hpp"
#include "widthlab/graph_io.hpp"
#include "widthlab/serialize.hpp"
#include "widthlab/wiring.hpp"

using namespace widthlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("widthlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  auto path = (scratch() / name).string();
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::string gen_file(const std::string& name, std::vector<std::string> args) {
  args.insert(args.begin(), "gen");
  auto r = run(args);
  REQUIRE(r.code == kExitOk);
  return write(name, r.out);
}

}  // namespace

TEST_CASE("gen") {
  auto star = run({"gen", "star", "9"});
  REQUIRE(star.code == kExitOk);
  CHECK(graph_from_json(json::parse(star.out)).n() == 9);
  auto grid = run({"gen", "grid", "3", "3"});
  CHECK(graph_from_json(json::parse(grid.out)).m() == 12);
  auto a = run({"gen", "random_bounded_degree", "12", "3", "15", "--seed", "5"});
  auto b = run({"gen", "random_bounded_degree", "12", "3", "15", "--seed", "5"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(run({"gen", "star", "-1"}).code == kExitInput);
  CHECK(run({"gen", "nonsense"}).code == kExitInput);
  CHECK(run({"gen", "tree3"}).code == kExitInput);
  auto edges = run({"gen", "path", "3", "--format", "edges"});
  CHECK(edges.code == kExitOk);
  CHECK(edges.out.find("0 1") != std::string::npos);
}

TEST_CASE("solve") {
  auto star = gen_file("star9.json", {"star", "9"});
  auto bw = run({"solve", "--invariant", "bandwidth", "--input", star});
  REQUIRE(bw.code == kExitOk);
  CHECK(json::parse(bw.out)["value"] == 4);

  auto p5 = gen_file("p5.json", {"path", "5"});
  auto cut = run({"solve", "--invariant", "cutsize", "--eps", "1/2", "--input", p5, "--witness"});
  auto cj = json::parse(cut.out);
  CHECK(cj["value"] == 1);
  CHECK(cj["witness"]["cutset"] == json::array({2}));

  auto k5 = gen_file("k5.json", {"complete", "5"});
  CHECK(json::parse(run({"solve", "--invariant", "treewidth", "--input", k5}).out)["value"] == 4);

  auto c4 = gen_file("c4.json", {"cycle", "4"});
  auto mla = json::parse(run({"solve", "--invariant", "bw", "--p", "1", "--input", c4}).out);
  CHECK(mla["value"] == 6);
  CHECK(mla["p"] == "1");

  auto p30 = gen_file("p30.json", {"path", "30"});
  CHECK(run({"solve", "--invariant", "bandwidth", "--input", p30}).code == kExitCapacity);
  CHECK(run({"solve", "--invariant", "bandwidth", "--input", (scratch() / "missing.json").string()}).code ==
        kExitInput);
  auto junk = write("junk.json", "{ not json");
  CHECK(run({"solve", "--invariant", "treewidth", "--input", junk}).code == kExitInput);
  CHECK(run({"solve", "--invariant", "colour", "--input", k5}).code == kExitInput);
  CHECK(run({"solve", "--invariant", "cw", "--p", "0", "--input", k5}).code == kExitInput);
}

TEST_CASE("profile") {
  auto tree = run({"profile", "--family", "tree3", "--radius", "6", "--invariant", "sep", "--rmax", "12"});
  REQUIRE(tree.code == kExitOk);
  std::istringstream lines(tree.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "r,value,value_root,witness,status,packed_value,packed_witness");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (rows >= 2) CHECK(line.rfind(std::to_string(rows) + ",1,", 0) == 0);
  }
  CHECK(rows == 12);

  auto grid = run({"profile", "--family", "grid2", "--radius", "3", "--invariant", "tw", "--rmax", "9"});
  REQUIRE(grid.code == kExitOk);
  CHECK(grid.out.find("\n9,3,") != std::string::npos);
  CHECK(run({"profile", "--invariant", "tw"}).code == kExitInput);
}

TEST_CASE("construct chains and round trips") {
  auto p3 = gen_file("p3.json", {"path", "3"});
  auto gd = run({"construct", "grid-decomp", "--input", p3});
  REQUIRE(gd.code == kExitOk);
  auto gj = json::parse(gd.out);
  auto d = decomposition_from_json(gj);
  CHECK(validate(d).empty());
  CHECK(d.host.n() == 9);
  CHECK(gj["max_bag"].get<int>() <= gj["bound"].get<int>());
  auto gd_path = write("gd.json", gd.out);

  auto w = run({"construct", "wire-from-decomp", "--input", gd_path});
  REQUIRE(w.code == kExitOk);
  auto wiring = wiring_from_json(json::parse(w.out));
  CHECK(validate(wiring).empty());
  // serialisation round trip: the recomputed load is the recorded one
  auto recorded = json::parse(w.out)["load"];
  auto l = load(wiring);
  CHECK(recorded["volume"] == l.volume);
  CHECK(recorded["walk_max"] == l.walk_max);
  CHECK(recorded["fiber_max"] == l.fiber_max);
  CHECK(to_json(wiring) == json::parse(w.out)["wiring"]);
  auto back = run({"construct", "decomp-from-wire", "--input", write("w.json", w.out)});
  REQUIRE(back.code == kExitOk);
  CHECK(validate(decomposition_from_json(json::parse(back.out))).empty());

  CHECK(run({"construct", "subdivide-transfer", "--input", gd_path, "--k", "3"}).code == kExitOk);
  auto c6 = gen_file("c6.json", {"cycle", "6"});
  auto ht = run({"construct", "host-transfer", "--input", gd_path, "--input", c6, "--kappa", "2"});
  REQUIRE(ht.code == kExitOk);
  CHECK(json::parse(ht.out)["l1"]["ok"] == true);

  // identity map: the comparison graph is the source itself
  auto id_map = write("id.json", R"({"kappa": 1, "map": [0, 1, 2, 3, 4, 5]})");
  auto gp = run({"construct", "gamma-phi", "--input", c6, "--input", c6, "--input", id_map});
  REQUIRE(gp.code == kExitOk);
  Graph cg = graph_from_json(json::parse(gp.out)["comparison_graph"]);
  CHECK(cg.edges() == graph_from_json(json::parse(run({"gen", "cycle", "6"}).out)).edges());

  auto bad_map = write("bad.json", R"({"kappa": 1, "map": [0, 0, 2, 3, 4, 5]})");
  CHECK(run({"construct", "gamma-phi", "--input", c6, "--input", c6, "--input", bad_map}).code == kExitInput);
  CHECK(run({"construct", "grid-decomp"}).code == kExitInput);
  CHECK(run({"construct", "teleport", "--input", p3}).code == kExitInput);

  // decomp-from-wire on an identity wiring gives closed-neighbourhood bags
  auto id_wiring = write("idw.json", json{{"guest", json::parse(run({"gen", "path", "3"}).out)},
                                          {"host", json::parse(run({"gen", "path", "3"}).out)},
                                          {"vertex_map", {0, 1, 2}},
                                          {"walks", {{0, 1}, {1, 2}}}}
                                         .dump());
  auto nb = json::parse(run({"construct", "decomp-from-wire", "--input", id_wiring}).out);
  auto nd = decomposition_from_json(nb);
  CHECK(nd.bags == std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {1, 2}});
}

TEST_CASE("audit") {
  auto ok = run({"audit", "--count", "10", "--max-n", "8"});
  CHECK(ok.code == kExitOk);
  CHECK(json::parse(ok.out)["summary"]["failed"] == 0);
  auto bad = run({"audit", "--count", "5", "--max-n", "8", "--inject-fault"});
  CHECK(bad.code == kExitAuditFailure);
  CHECK(json::parse(bad.out)["summary"]["failed"].get<int>() > 0);
  auto empty = json::parse(run({"audit", "--count", "0"}).out);
  CHECK(empty["graphs"].empty());
  auto junk = write("junk2.json", "[1, 2");
  CHECK(run({"audit", "--count", "0", "--input", junk}).code == kExitInput);
}

TEST_CASE("output does not depend on --jobs") {
  const std::vector<std::vector<std::string>> commands = {
      {"profile", "--family", "grid2", "--radius", "2", "--invariant", "cw", "--p", "2", "--rmax", "7"},
      {"profile", "--family", "tree3", "--radius", "3", "--invariant", "bw", "--rmax", "8"},
      {"audit", "--count", "12", "--max-n", "8", "--seed", "3"},
  };
  for (auto args : commands) {
    std::string first;
    for (const char* jobs : {"1", "4", "8"}) {
      auto a = args;
      a.push_back("--jobs");
      a.push_back(jobs);
      auto r = run(a);
      REQUIRE(r.code == kExitOk);
      if (first.empty()) first = r.out;
      CHECK(r.out == first);
    }
  }
}

TEST_CASE("manifest and --out") {
  auto p5 = gen_file("p5m.json", {"path", "5"});
  auto out = (scratch() / "r.json").string();
  auto manifest = (scratch() / "m.json").string();
  auto r = run({"solve", "--invariant", "cw", "--input", p5, "--out", out, "--manifest", manifest});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(json::parse(read_text_file(out))["value"] == 1);
  auto m = json::parse(read_text_file(manifest));
  CHECK(m["inputs"].size() == 1);
  CHECK(m["inputs"][0]["fnv1a64"].get<std::string>().size() == 16);
  CHECK(m.contains("wall_clock_seconds"));
}
