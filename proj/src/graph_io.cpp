#include "gcond/graph_io.hpp"

#include "gcond/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gcond {

namespace {

using nlohmann::ordered_json;

Rational weight_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw ParseError("bad weight literal: " + j.get<std::string>());
    if (*r == 0) throw ParseError("edge weight must be nonzero");
    return *r;
  }
  throw ParseError("weight must be an integer or a \"p/q\" string");
}

ordered_json weight_to_json(const Rational& w) {
  if (denominator(w) == 1) {
    const auto& n = numerator(w);
    if (n >= std::numeric_limits<long long>::min() &&
        n <= std::numeric_limits<long long>::max())
      return ordered_json(n.convert_to<long long>());
  }
  return ordered_json(to_string(w));
}

}  // namespace

PlaneGraph parse_graph(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());   // nlohmann reports line and column
  }
  try {
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (!j.contains("vertices") || !j.contains("edges") || !j.contains("face"))
      throw ParseError("missing one of: vertices, edges, face");

    std::vector<VertexId> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());

    std::vector<WeightedEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3)
        throw ParseError("each edge must be [u, v, weight]");
      edges.push_back({EdgeKey(e[0].get<std::string>(), e[1].get<std::string>()),
                       weight_from_json(e[2])});
    }

    std::vector<VertexId> face;
    for (const auto& v : j.at("face")) face.push_back(v.get<std::string>());

    return PlaneGraph(std::move(vertices), std::move(edges), std::move(face));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PlaneGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string graph_to_text(const PlaneGraph& g) {
  ordered_json j;
  j["vertices"] = g.vertices();
  auto edges = ordered_json::array();
  for (const auto& e : g.edges())
    edges.push_back({e.key.u, e.key.v, weight_to_json(e.weight)});
  j["edges"] = std::move(edges);
  j["face"] = g.face_boundary();
  return j.dump(2) + "\n";
}

void save_graph_file(const PlaneGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << graph_to_text(g);
}

}  // namespace gcond
