#include "widthlab/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace widthlab {

namespace {

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("empty edge list");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      fail_at(line_no, "expected header \"n m\"");
    }
  }
  if (n > 10'000'000) fail_at(line_no, "vertex count too large");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) fail_at(line_no, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) fail_at(line_no, "vertex out of range");
    if (u == v) fail_at(line_no, "self-loop");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) fail_at(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (next_content_line(in, line, line_no)) fail_at(line_no, "trailing content");
  return Graph(static_cast<int>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph JSON needs fields \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw ParseError("graph JSON: \"n\" must be a nonnegative integer");
  }
  const auto n = j["n"].get<long long>();
  if (n > 10'000'000) throw ParseError("graph JSON: vertex count too large");
  if (!j["edges"].is_array()) throw ParseError("graph JSON: \"edges\" must be an array");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int index = 0;
  for (const auto& e : j["edges"]) {
    const std::string where = "edge " + std::to_string(index++) + ": ";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError(where + "expected [u, v]");
    }
    auto u = e[0].get<long long>();
    auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where + "vertex out of range");
    if (u == v) throw ParseError(where + "self-loop");
    Edge norm{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(norm).second) throw ParseError(where + "duplicate edge");
    edges.push_back(norm);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<long long>(j["labels"].size()) != n) {
      throw ParseError("graph JSON: \"labels\" must have one entry per vertex");
    }
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("graph JSON: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Graph(static_cast<int>(n), std::move(edges), std::move(labels));
}

Graph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in(text);
  return read_edge_list(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace widthlab
