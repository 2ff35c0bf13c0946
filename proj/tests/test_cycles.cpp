#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <map>

#include "surfising/cycles.hpp"
#include "surfising/graph_io.hpp"
#include "surfising/quadform.hpp"

using namespace surfising;

namespace {

EmbeddedGraph fixture(const std::string& name) {
  return load_embedded_graph_file((std::filesystem::path(SURFISING_FIXTURE_DIR) / (name + ".json")).string());
}

/// Closed non-backtracking words of length n, by brute force over all dart
/// sequences, grouped into classes up to rotation and inversion; proper
/// powers dropped.
std::size_t brute_classes(const EmbeddedGraph& g, int n) {
  std::map<Cycle, int> seen;
  Cycle w(static_cast<std::size_t>(n));
  long total = 1;
  for (int k = 0; k < n; ++k) total *= g.num_darts();
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int k = 0; k < n; ++k, c /= g.num_darts()) w[static_cast<std::size_t>(k)] = static_cast<int>(c % g.num_darts());
    if (is_prime_reduced(g, w)) seen[canonical(w)] = 1;
  }
  return seen.size();
}

}  // namespace

TEST_CASE("cycle enumeration on small graphs") {
  EmbeddedGraph tri = fixture("triangle");
  auto c = enumerate_prime_reduced_cycles(tri, 3);
  REQUIRE(c.size() == 1);
  CHECK(c[0].size() == 3);
  CHECK(enumerate_prime_reduced_cycles(tri, 8).size() == 1);
  CHECK(enumerate_prime_reduced_cycles(fixture("single_edge"), 8).empty());
  CHECK(enumerate_prime_reduced_cycles(fixture("theta"), 2).size() == 3);
}

TEST_CASE("enumeration matches brute force over dart words") {
  for (const char* name : {"theta", "k4", "bowtie", "bouquet_g2"}) {
    EmbeddedGraph g = fixture(name);
    auto cycles = enumerate_prime_reduced_cycles(g, 4);
    for (int n = 1; n <= 4; ++n) {
      std::size_t count = 0;
      for (const auto& c : cycles) count += c.size() == static_cast<std::size_t>(n);
      CHECK_MESSAGE(count == brute_classes(g, n), name << " length " << n);
    }
  }
}

TEST_CASE("canonical forms") {
  EmbeddedGraph g = fixture("k4");
  for (const auto& c : enumerate_prime_reduced_cycles(g, 6)) {
    CHECK(is_prime_reduced(g, c));
    CHECK(canonical(inverse(c)) == c);
    Cycle rotated(c.begin() + 1, c.end());
    rotated.push_back(c.front());
    CHECK(canonical(rotated) == c);
  }
  Cycle backtrack = {0, 1};
  CHECK_FALSE(is_prime_reduced(g, backtrack));
}

TEST_CASE("convex polygons and figure-eights") {
  EmbeddedGraph tri = fixture("triangle");
  Cycle c = enumerate_prime_reduced_cycles(tri, 3)[0];
  CHECK(chord_crossings(tri, c) == 0);
  CHECK(rot0(tri, c) == 1);
  CHECK(std::abs(total_turning(tri, c)) == doctest::Approx(2.0 * 3.141592653589793));

  EmbeddedGraph bowtie = fixture("bowtie");
  int crossing = 0, touching = 0;
  for (const auto& p : enumerate_prime_reduced_cycles(bowtie, 6)) {
    if (p.size() != 6) continue;
    int si = self_intersections(bowtie, p);
    CHECK(rot0(bowtie, p) == (1 + si) % 2);
    if (si == 1) {
      ++crossing;
      CHECK(rot0(bowtie, p) == 0);
      for (const auto& s : spin_indices(0)) CHECK(check_theorem_gr(bowtie, p, s));
    } else {
      ++touching;
    }
  }
  CHECK(crossing == 1);
  CHECK(touching == 1);
}

TEST_CASE("rot_s on the torus") {
  EmbeddedGraph g = fixture("torus_2x2");
  for (const auto& c : enumerate_prime_reduced_cycles(g, 6)) {
    CHECK(rot_s(g, c, F2Vec(2)) == rot0(g, c));
    if (cycle_class(g, c).is_zero())
      for (const auto& s : spin_indices(1)) CHECK(rot_s(g, c, s) == rot0(g, c));
    CHECK(rot0(g, c) == (1 + self_intersections(g, c)) % 2);
  }
  // The meridian through edges 1 and 3: class a_1.
  Cycle meridian = {EmbeddedGraph::dart(0, 0), EmbeddedGraph::dart(2, 0)};
  REQUIRE(is_closed_walk(g, meridian));
  CHECK(cycle_class(g, meridian).str() == "10");
  CHECK(cycle_crossing_vector(g, meridian) == std::vector<int>{1, 0});
  for (const auto& s : spin_indices(1)) {
    CHECK(check_theorem_gr(g, meridian, s));
    CHECK(rot_s(g, meridian, s) == (rot0(g, meridian) + s[0]) % 2);
  }
  CHECK(dump_cycle(g, meridian) == "(1,+) (3,+)");
}

TEST_CASE("self-intersections in the bridge squares") {
  EmbeddedGraph g = fixture("bouquet_g2");
  int with_square = 0;
  for (const auto& c : enumerate_prime_reduced_cycles(g, 4)) {
    int si = self_intersections(g, c);
    if (si > chord_crossings(g, c)) ++with_square;
    CHECK(rot0(g, c) == (1 + si) % 2);
  }
  CHECK(with_square > 0);
}

TEST_CASE("all-spin check agrees with the per-spin check") {
  EmbeddedGraph g = fixture("torus_3x3");
  int cycles = 0;
  for (const auto& c : enumerate_prime_reduced_cycles(g, 8)) {
    std::vector<int> uses(static_cast<std::size_t>(g.num_edges()), 0);
    bool simple = true;
    for (int d : c) simple = simple && uses[static_cast<std::size_t>(EmbeddedGraph::edge_of(d))]++ == 0;
    if (!simple) {
      CHECK_THROWS(theorem_gr_failures(g, c));
      continue;
    }
    int per_spin = 0;
    for (const auto& s : spin_indices(1)) per_spin += !check_theorem_gr(g, c, s);
    CHECK(theorem_gr_failures(g, c) == per_spin);
    ++cycles;
  }
  CHECK(cycles > 0);
}
