#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include <json.hpp>

#include "surfising/critical.hpp"
#include "surfising/graph_io.hpp"
#include "surfising/homology.hpp"
#include "surfising/polygon.hpp"
#include "surfising/reduce.hpp"

using namespace surfising;
using nlohmann::json;

namespace {

EmbeddedGraph fixture(const std::string& name) {
  return load_embedded_graph_file((std::filesystem::path(SURFISING_FIXTURE_DIR) / (name + ".json")).string());
}

json triangle_doc() {
  return json::parse(R"({"genus": 0,
    "vertices": [{"id": 1, "x": 0, "y": 0}, {"id": 2, "x": 1, "y": 0}, {"id": 3, "x": 0.5, "y": 0.8}],
    "edges": [{"id": 1, "u": 1, "v": 2, "polyline": [[0, 0], [1, 0]]},
              {"id": 2, "u": 2, "v": 3, "polyline": [[1, 0], [0.5, 0.8]]},
              {"id": 3, "u": 3, "v": 1, "polyline": [[0.5, 0.8], [0, 0]]}]})");
}

}  // namespace

TEST_CASE("base polygon gluing") {
  BasePolygon r(2);
  CHECK(r.sides() == 8);
  for (int j = 1; j <= 8; ++j) {
    CHECK(r.partner(r.partner(j)) == j);
    Vec2 p = r.side_point(j, 0.3);
    Vec2 q = r.identify(j, p);
    CHECK(r.side_of_point(q, 1e-9) == r.partner(j));
    CHECK(r.side_param(r.partner(j), q) == doctest::Approx(0.7));
  }
  CHECK(r.bridge_sides(1) == std::pair{1, 3});
  CHECK(r.bridge_sides(2) == std::pair{2, 4});
  CHECK(r.bridge_sides(3) == std::pair{5, 7});
  CHECK(r.crossing_sign(1) == 1);
  CHECK(r.crossing_sign(3) == -1);
  CHECK(r.kappa(1) == doctest::Approx(0.75));
  CHECK(r.kappa(-3) == doctest::Approx(-0.75));
  CHECK(BasePolygon(1).sides() == 4);
}

TEST_CASE("loading a planar triangle") {
  EmbeddedGraph g = load_embedded_graph(triangle_doc());
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.faces().size() == 2);
  CHECK(g.variable_name(0) == "x1");
  for (int d = 0; d < g.num_darts(); ++d) CHECK(g.head(d) == g.tail(EmbeddedGraph::reverse(d)));
}

TEST_CASE("invalid documents are rejected") {
  json doc = triangle_doc();
  doc["edges"][0]["crossings"] = {1};
  CHECK_THROWS(load_embedded_graph(doc));
  json crossing = triangle_doc();
  crossing["edges"][0]["polyline"] = {{0, 0}, {0.8, 0.6}, {1, 0}};
  CHECK_THROWS(load_embedded_graph(crossing));
  json dangling = triangle_doc();
  dangling["edges"][0]["v"] = 9;
  CHECK_THROWS(load_embedded_graph(dangling));
}

TEST_CASE("Euler characteristic of the fixtures") {
  for (const char* name : {"triangle", "k4", "grid_4x4", "torus_2x2", "torus_3x3", "torus_4x4", "bouquet_g2"}) {
    EmbeddedGraph g = fixture(name);
    int chi = g.num_vertices() - g.num_edges() + static_cast<int>(g.faces().size());
    CHECK_MESSAGE(chi == 2 - 2 * g.genus(), name);
  }
}

TEST_CASE("crossing vectors of the 2x2 torus") {
  EmbeddedGraph g = fixture("torus_2x2");
  EdgeSet all;
  for (int e = 0; e < g.num_edges(); ++e) all.push_back(e);
  CHECK(crossing_vector(g, all) == std::vector<int>{2, 2});
  CHECK(crossing_vector(g, {}) == std::vector<int>{0, 0});
  // One row is a meridian; both rows together cross bridge 1 twice.
  EdgeSet row = {0, 2};
  CHECK(is_even(g, row));
  CHECK(crossing_vector(g, row) == std::vector<int>{1, 0});
  CHECK(homology_class(g, row).str() == "10");
  EdgeSet rows = {0, 2, 4, 6};
  CHECK(crossing_vector(g, rows) == std::vector<int>{2, 0});
  CHECK(homology_class(g, rows).is_zero());
  EdgeSet column = {1, 5};
  CHECK(homology_class(g, column).str() == "01");
  CHECK(homology_class(g, symmetric_difference(row, column)) == homology_class(g, row) + homology_class(g, column));
  CHECK_THROWS(homology_class(g, {0}));
}

TEST_CASE("contractible cycles have class zero") {
  EmbeddedGraph g = fixture("torus_4x4");
  // Boundary of one square: edges 1, 2, 4 and 9 (ids), indices 0, 1, 3, 8.
  EdgeSet square = {0, 1, 3, 8};
  REQUIRE(is_even(g, square));
  CHECK(crossing_vector(g, square) == std::vector<int>{0, 0});
  CHECK(homology_class(g, square).is_zero());
}

TEST_CASE("even-set decomposition") {
  EmbeddedGraph bowtie = fixture("bowtie");
  EdgeSet both = {0, 1, 2, 3, 4, 5};
  auto cycles = decompose_even_set(bowtie, both);
  CHECK(cycles.size() == 2);
  for (const auto& c : cycles) CHECK(chord_crossings(bowtie, c) == 0);
  EmbeddedGraph tri = fixture("triangle");
  CHECK(decompose_even_set(tri, {0, 1, 2}).size() == 1);
  EmbeddedGraph two = fixture("two_squares");
  // Outer boundary of the 2x3 grid is one cycle.
  EdgeSet outer = {0, 1, 2, 4, 5, 6};
  CHECK(decompose_even_set(two, outer).size() == 1);
}

TEST_CASE("criticality of square patches") {
  CriticalityReport r = is_critical_embedding(fixture("square_patch_3x3"));
  CHECK(r.critical);
  CHECK(r.radius == doctest::Approx(std::sqrt(2.0) / 2.0));
  CriticalityReport bad = is_critical_embedding(fixture("square_patch_3x3_perturbed"));
  CHECK_FALSE(bad.critical);
  CHECK(bad.first_bad_face >= 0);
  CHECK(bad.diagnostic.find("face") != std::string::npos);
  CriticalityReport torus = is_critical_embedding(fixture("torus_4x4"));
  CHECK(torus.critical);
  CHECK(torus.radius == doctest::Approx(0.25));
}

TEST_CASE("degree reduction") {
  ReducedGraphMap id = reduce_degrees(fixture("square4"));
  CHECK(id.is_identity());

  ReducedGraphMap p5 = reduce_degrees(fixture("parallel5"));
  CHECK(p5.zero_edges.size() == 3);
  for (int v = 0; v < p5.reduced.num_vertices(); ++v) {
    CHECK(p5.reduced.degree(v) % 2 == 0);
    CHECK(p5.reduced.degree(v) <= 4);
  }

  EmbeddedGraph flower = fixture("flower");
  ReducedGraphMap fl = reduce_degrees(flower);
  CHECK(fl.zero_edges.empty());
  REQUIRE(fl.one_edges.size() == 1);
  const Edge& split = fl.reduced.edge(fl.one_edges[0]);
  CHECK(fl.reduced.degree(split.u) == 4);
  CHECK(fl.reduced.degree(split.v) == 4);
  for (int e = 0; e < flower.num_edges(); ++e) CHECK(fl.f[static_cast<std::size_t>(e)] == e);
}
