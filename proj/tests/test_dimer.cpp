#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "surfising/brute.hpp"
#include "surfising/graph_io.hpp"
#include "surfising/kasteleyn.hpp"
#include "surfising/pfaffian.hpp"

using namespace surfising;

namespace {

EmbeddedGraph fixture(const std::string& name) {
  return load_embedded_graph_file((std::filesystem::path(SURFISING_FIXTURE_DIR) / (name + ".json")).string());
}

MultiPoly x(int v) { return MultiPoly::variable(v); }

Eigen::MatrixXcd random_matrix(std::mt19937& rng, int n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex{nd(rng), nd(rng)};
  return m;
}

}  // namespace

TEST_CASE("Pfaffians of small skew matrices") {
  SquareMatrix<MultiPoly> a2(2);
  a2(0, 1) = x(0);
  a2(1, 0) = -x(0);
  CHECK(max_abs_diff(pfaffian(a2), x(0)) == 0.0);

  // a_ij = x_{k} with k numbering the pairs 12, 13, 14, 23, 24, 34.
  SquareMatrix<MultiPoly> a(4);
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j, ++k) {
      a(i, j) = x(k);
      a(j, i) = -x(k);
    }
  MultiPoly expected = x(0) * x(5) - x(1) * x(4) + x(2) * x(3);
  CHECK(max_abs_diff(pfaffian(a), expected) == 0.0);
  CHECK_THROWS(pfaffian(SquareMatrix<MultiPoly>(3)));
  SquareMatrix<Complex> bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS(pfaffian(bad));
}

TEST_CASE("Pf^2 = det and expansion determinants agree with LU") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 10; n += 2) {
    Eigen::MatrixXcd m = random_matrix(rng, n);
    Eigen::MatrixXcd s = m - m.transpose();
    Complex pf = pfaffian(from_eigen<Complex>(s));
    CHECK(std::abs(pf * pf - s.determinant()) < 1e-8 * std::max(1.0, std::abs(s.determinant())));
  }
  for (int n = 1; n <= 8; ++n) {
    Eigen::MatrixXcd m = random_matrix(rng, n);
    CHECK(std::abs(det_expand(from_eigen<Complex>(m)) - m.determinant()) < 1e-9 * std::max(1.0, std::abs(m.determinant())));
  }
}

TEST_CASE("Kasteleyn orientations") {
  for (const char* name : {"triangle", "square4", "square_patch_3x3", "k4", "grid_4x4", "torus_2x2", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    Orientation d = find_kasteleyn_orientation(g);
    CHECK_MESSAGE(is_kasteleyn(g, d), std::string(name));
    for (int f : kasteleyn_faces(g)) CHECK(clockwise_count(g, d, f) % 2 == 1);
  }
  // On a closed surface with |V| odd the root face stays even.
  EmbeddedGraph odd = fixture("torus_3x3");
  Orientation d = find_kasteleyn_orientation(odd);
  CHECK_FALSE(is_kasteleyn(odd, d));
  int even_faces = 0;
  for (int f : kasteleyn_faces(odd)) even_faces += clockwise_count(odd, d, f) % 2 == 0;
  CHECK(even_faces == 1);
  CHECK(clockwise_count(odd, d, 0) % 2 == 0);
  EmbeddedGraph sq = fixture("square4");
  CHECK(kasteleyn_faces(sq).size() == 1);
  Orientation all_forward(4, 0);
  int cw = clockwise_count(sq, all_forward, kasteleyn_faces(sq)[0]);
  CHECK(is_kasteleyn(sq, all_forward) == (cw % 2 == 1));
}

TEST_CASE("planar Pfaffians count matchings") {
  for (const char* name : {"single_edge", "square4", "two_squares", "k4", "grid_4x4"}) {
    EmbeddedGraph g = fixture(name);
    MultiPoly pf = pfaffian(skew_adjacency(g, find_kasteleyn_orientation(g)));
    MultiPoly p = brute_perfect_matchings(g);
    CHECK_MESSAGE(std::min(max_abs_diff(pf, p), max_abs_diff(pf * Complex{-1.0}, p)) < 1e-12, name);
  }
  CHECK(brute_perfect_matchings(fixture("grid_4x4")).size() == 36);
}

TEST_CASE("four Pfaffians on the torus") {
  for (const char* name : {"torus_2x2", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    MultiPoly p = brute_perfect_matchings(g);
    DimerCombination c = find_dimer_combination(g, p);
    CHECK_MESSAGE(c.matched, name);
    CHECK(c.shifts.size() == 4);
    for (double k : c.coefficients) CHECK(std::abs(k) == doctest::Approx(0.5));
    CHECK(c.rule.rfind("arf", 0) == 0);
  }
}

TEST_CASE("shifted orientations reverse the crossing edges") {
  EmbeddedGraph g = fixture("torus_2x2");
  Orientation d = find_kasteleyn_orientation(g);
  Orientation s = shifted_orientation(g, d, F2Vec::parse("10"));
  for (int e = 0; e < g.num_edges(); ++e) {
    bool crosses = g.crossing_counts(e)[0] % 2 == 1;
    CHECK((s[static_cast<std::size_t>(e)] != d[static_cast<std::size_t>(e)]) == crosses);
  }
}

TEST_CASE("Kasteleyn curvature on the 4-cycle") {
  EmbeddedGraph g = fixture("square4");
  int f = kasteleyn_faces(g)[0];
  Cycle c = face_cycle(g, f);
  std::vector<Complex> ones(4, 1.0);
  CHECK(kasteleyn_curvature(g, ones, c) == Complex{-1.0});
  CHECK_FALSE(is_kasteleyn_flat(g, ones));
  // A -1 on one edge of C+ flips the curvature.
  int plus_edge = -1;
  for (int d : c)
    if (g.color(g.tail(d)) == Color::black) plus_edge = EmbeddedGraph::edge_of(d);
  std::vector<Complex> w = ones;
  w[static_cast<std::size_t>(plus_edge)] = -1.0;
  CHECK(kasteleyn_curvature(g, w, c) == Complex{1.0});
  CHECK(is_kasteleyn_flat(g, w));
  // Reversal inverts c.
  std::vector<Complex> z = {2.0, Complex{0.0, 1.0}, 0.5, 3.0};
  CHECK(std::abs(kasteleyn_curvature(g, z, inverse(c)) * kasteleyn_curvature(g, z, c) - 1.0) < 1e-12);
}

TEST_CASE("ratio law for matchings") {
  EmbeddedGraph g = fixture("grid_4x4");
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Complex> w(static_cast<std::size_t>(g.num_edges()));
  for (auto& x : w) x = std::polar(1.0 + std::abs(u(rng)) / 3.0, u(rng));
  auto ms = list_perfect_matchings(g);
  int checked = 0;
  for (std::size_t j = 1; j < ms.size() && checked < 12; ++j) {
    try {
      PropTwoReport r = check_prop_two(g, w, ms[0], ms[j]);
      CHECK(r.holds);
      CHECK(std::abs(r.t_m / r.t_n - r.curvature) < 1e-9);
      ++checked;
    } catch (const std::invalid_argument&) {
    }
  }
  CHECK(checked >= 10);
  CHECK_THROWS(check_prop_two(g, w, ms[0], ms[0]));
}

TEST_CASE("normalization to +-1 weights") {
  EmbeddedGraph g = fixture("two_squares");
  auto w0 = weights_from_orientation(g, find_kasteleyn_orientation(g));
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> arg(-3.0, 3.0);
  std::vector<Complex> m(static_cast<std::size_t>(g.num_vertices()));
  for (auto& x : m) x = std::polar(1.0, arg(rng));
  Normalization n = normalize_to_simple_flat(g, multiply_vertices(g, w0, m));
  for (const auto& x : n.weights) CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
  CHECK(is_kasteleyn(g, n.orientation));
  CHECK(n.tree_edges.size() == static_cast<std::size_t>(g.num_vertices() - 1));

  Normalization same = normalize_to_simple_flat(g, w0);
  CHECK(is_kasteleyn_flat(g, same.weights));

  EmbeddedGraph sq = fixture("square4");
  std::vector<Complex> twisted = {1.0, 1.0, 1.0, Complex{0.0, 1.0}};
  CHECK_THROWS_AS(normalize_to_simple_flat(sq, twisted), std::domain_error);
}
