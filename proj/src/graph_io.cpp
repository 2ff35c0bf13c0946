#include "surfising/graph_io.hpp"

#include <fstream>
#include <stdexcept>

namespace surfising {

namespace {

using nlohmann::json;

std::string id_string(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument(what + ": id must be an integer or a string");
}

const json& require(const json& obj, const char* key, const std::string& what) {
  auto it = obj.find(key);
  if (it == obj.end()) throw std::invalid_argument(what + ": missing field '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw std::invalid_argument(what + ": expected a number");
  return j.get<double>();
}

json id_json(const std::string& id) {
  if (!id.empty() && id.find_first_not_of("0123456789") == std::string::npos && id.size() < 18)
    return std::stoll(id);
  return id;
}

}  // namespace

EmbeddedGraph load_embedded_graph(const json& doc, ValidationOptions opt) {
  if (!doc.is_object()) throw std::invalid_argument("document must be a JSON object");
  const json& gj = require(doc, "genus", "document");
  if (!gj.is_number_integer() || gj.get<int>() < 0)
    throw std::invalid_argument("document: genus must be a nonnegative integer");
  int genus = gj.get<int>();

  std::vector<Vertex> vertices;
  std::unordered_map<std::string, int> vindex;
  const json& vs = require(doc, "vertices", "document");
  if (!vs.is_array()) throw std::invalid_argument("document: vertices must be an array");
  for (const auto& vj : vs) {
    std::string id = id_string(require(vj, "id", "vertex"), "vertex");
    std::string what = "vertex '" + id + "'";
    Vertex v{id, {number(require(vj, "x", what), what), number(require(vj, "y", what), what)}};
    if (!vindex.emplace(id, static_cast<int>(vertices.size())).second)
      throw std::invalid_argument("duplicate vertex id '" + id + "'");
    vertices.push_back(v);
  }
  auto lookup = [&](const json& j, const std::string& what) {
    std::string id = id_string(j, what);
    auto it = vindex.find(id);
    if (it == vindex.end()) throw std::invalid_argument(what + ": unknown vertex '" + id + "'");
    return it->second;
  };

  std::vector<Edge> edges;
  const json& es = require(doc, "edges", "document");
  if (!es.is_array()) throw std::invalid_argument("document: edges must be an array");
  for (const auto& ej : es) {
    Edge e;
    e.id = id_string(require(ej, "id", "edge"), "edge");
    std::string what = "edge '" + e.id + "'";
    e.u = lookup(require(ej, "u", what), what);
    e.v = lookup(require(ej, "v", what), what);
    const json& pl = require(ej, "polyline", what);
    if (!pl.is_array()) throw std::invalid_argument(what + ": polyline must be an array");
    for (const auto& p : pl) {
      if (!p.is_array() || p.size() != 2)
        throw std::invalid_argument(what + ": polyline points are [x, y] pairs");
      e.polyline.push_back({number(p[0], what), number(p[1], what)});
    }
    if (auto it = ej.find("crossings"); it != ej.end()) {
      if (!it->is_array()) throw std::invalid_argument(what + ": crossings must be an array");
      for (const auto& c : *it) {
        if (!c.is_number_integer()) throw std::invalid_argument(what + ": crossings are integers");
        e.crossings.push_back(c.get<int>());
      }
    }
    if (auto it = ej.find("weight"); it != ej.end()) {
      if (it->is_string()) {
        e.weight_name = it->get<std::string>();
      } else {
        e.weight_value = number(*it, what);
      }
    }
    if (auto it = ej.find("dual_length"); it != ej.end()) {
      double l = number(*it, what);
      if (!(l > 0.0)) throw std::invalid_argument(what + ": dual_length must be positive");
      e.dual_length = l;
    }
    edges.push_back(std::move(e));
  }

  std::optional<std::vector<Color>> colors;
  if (auto it = doc.find("bipartition"); it != doc.end() && !it->is_null()) {
    std::vector<int> seen(vertices.size(), 0);
    std::vector<Color> c(vertices.size(), Color::white);
    for (auto [key, col] : {std::pair{"white", Color::white}, std::pair{"black", Color::black}}) {
      for (const auto& idj : require(*it, key, "bipartition")) {
        int v = lookup(idj, "bipartition");
        ++seen[static_cast<std::size_t>(v)];
        c[static_cast<std::size_t>(v)] = col;
      }
    }
    for (std::size_t v = 0; v < seen.size(); ++v)
      if (seen[v] != 1)
        throw std::invalid_argument("bipartition: vertex '" + vertices[v].id +
                                    "' must be listed exactly once");
    colors = std::move(c);
  }
  return EmbeddedGraph::build(genus, std::move(vertices), std::move(edges), std::move(colors), opt);
}

EmbeddedGraph load_embedded_graph_file(const std::string& path, ValidationOptions opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
  return load_embedded_graph(doc, opt);
}

json to_json(const EmbeddedGraph& g) {
  json doc;
  doc["genus"] = g.genus();
  doc["vertices"] = json::array();
  for (const auto& v : g.vertices())
    doc["vertices"].push_back({{"id", id_json(v.id)}, {"x", v.pos.x}, {"y", v.pos.y}});
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) {
    json ej{{"id", id_json(e.id)},
            {"u", id_json(g.vertex(e.u).id)},
            {"v", id_json(g.vertex(e.v).id)},
            {"polyline", json::array()},
            {"crossings", e.crossings}};
    for (const auto& p : e.polyline) ej["polyline"].push_back({p.x, p.y});
    if (!e.weight_name.empty()) ej["weight"] = e.weight_name;
    else if (e.weight_value) ej["weight"] = *e.weight_value;
    if (e.dual_length) ej["dual_length"] = *e.dual_length;
    doc["edges"].push_back(std::move(ej));
  }
  if (g.bipartite()) {
    json white = json::array(), black = json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
      (g.color(v) == Color::white ? white : black).push_back(id_json(g.vertex(v).id));
    doc["bipartition"] = {{"white", white}, {"black", black}};
  }
  return doc;
}

}  // namespace surfising
