#include "widthlab/serialize.hpp"

#include <fstream>
#include <sstream>

namespace widthlab {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

json to_json(const GDecomposition& d) {
  json j;
  j["host"] = graph_to_json(d.host);
  j["guest"] = graph_to_json(d.guest);
  j["bags"] = d.bags;
  return j;
}

GDecomposition decomposition_from_json(const json& outer) {
  const json& j = outer.is_object() && outer.contains("decomposition") ? outer["decomposition"] : outer;
  GDecomposition d{graph_from_json(field<json>(j, "host")), graph_from_json(field<json>(j, "guest")),
                   field<std::vector<VertexSet>>(j, "bags")};
  validate(d);  // throws on malformed indices
  return d;
}

json to_json(const CoarseWiring& w) {
  json j;
  j["guest"] = graph_to_json(w.guest);
  j["host"] = graph_to_json(w.host);
  j["vertex_map"] = w.vertex_map;
  j["walks"] = json::array();
  for (const Walk& walk : w.walks) j["walks"].push_back(walk.vertices);
  return j;
}

CoarseWiring wiring_from_json(const json& outer) {
  const json& j = outer.is_object() && outer.contains("wiring") ? outer["wiring"] : outer;
  CoarseWiring w{graph_from_json(field<json>(j, "guest")), graph_from_json(field<json>(j, "host")),
                 field<std::vector<Vertex>>(j, "vertex_map"), {}};
  for (auto& vs : field<std::vector<std::vector<Vertex>>>(j, "walks")) w.walks.push_back({std::move(vs)});
  validate(w);
  return w;
}

json map_to_json(const RegularMapCert& cert) {
  json j;
  j["kappa"] = cert.kappa;
  j["map"] = cert.map;
  return j;
}

RegularMapCert map_from_json(const json& outer, const Graph& source, const Graph& target) {
  const json& j = outer.is_object() && outer.contains("map") && outer["map"].is_object() ? outer["map"] : outer;
  return {source, target, field<std::vector<Vertex>>(j, "map"), field<int>(j, "kappa")};
}

json to_json(const LinearOrdering& f) { return f.sequence(); }

json to_json(const LayoutValue& v) {
  json j;
  j["raw"] = v.raw().str();
  j["root"] = v.root();
  return j;
}

}  // namespace widthlab
