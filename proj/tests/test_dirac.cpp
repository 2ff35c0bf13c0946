#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "surfising/dirac.hpp"
#include "surfising/graph_io.hpp"
#include "surfising/quadform.hpp"

using namespace surfising;

namespace {

EmbeddedGraph fixture(const std::string& name) {
  return load_embedded_graph_file((std::filesystem::path(SURFISING_FIXTURE_DIR) / (name + ".json")).string());
}

}  // namespace

TEST_CASE("transition graphs") {
  EmbeddedGraph edge = fixture("single_edge");
  TransitionGraph t = build_transition_graph(edge);
  CHECK(t.num_nodes() == 2);
  CHECK(t.arcs.size() == 2);
  CHECK(t.reduced_arcs.empty());
  CHECK(is_bipartite_transition_graph(edge, t));

  EmbeddedGraph torus = fixture("torus_2x2");
  TransitionGraph tt = build_transition_graph(torus);
  CHECK(tt.num_nodes() == 16);
  std::size_t expected = 0;
  for (int v = 0; v < torus.num_vertices(); ++v) expected += static_cast<std::size_t>(torus.degree(v) * (torus.degree(v) - 1));
  CHECK(tt.reduced_arcs.size() == expected);
  CHECK(tt.w_nodes.size() == tt.b_nodes.size());
  CHECK(is_bipartite_transition_graph(torus, tt));
  CHECK_THROWS(build_transition_graph(fixture("triangle")));
}

TEST_CASE("row proportionality on critical square lattices") {
  for (const char* name : {"square4", "square_patch_3x3", "grid_4x4", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    for (const auto& s : spin_indices(g.genus())) {
      DiracMatrices m = build_delta2(g, s);
      ProportionalityReport pr = check_row_proportionality(g, m);
      CHECK_MESSAGE(pr.holds, name << " s=" << s.str());
      CHECK(pr.spread < 1e-9);
      Eigen::MatrixXcd rec = reconstruct_delta2_from_dirac(g, m.dirac, pr.constants);
      CHECK((rec - m.delta2).cwiseAbs().maxCoeff() < 1e-9);
      // Wrong constants are detected.
      auto wrong = pr.constants;
      wrong[0] *= 2.0;
      CHECK((reconstruct_delta2_from_dirac(g, m.dirac, wrong) - m.delta2).cwiseAbs().maxCoeff() > 1e-3);
    }
  }
}

TEST_CASE("the single edge reconstructs trivially") {
  EmbeddedGraph g = fixture("single_edge");
  DiracMatrices m = build_delta2_unchecked(g, g, F2Vec(0), dual_lengths(g));
  ProportionalityReport pr = check_row_proportionality(g, m);
  CHECK(pr.holds);
  CHECK((reconstruct_delta2_from_dirac(g, m.dirac, pr.constants) - m.delta2).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("perturbed coordinates break proportionality") {
  EmbeddedGraph bad = fixture("square_patch_3x3_perturbed");
  EmbeddedGraph good = fixture("square_patch_3x3");
  CHECK_THROWS(build_delta2(bad, F2Vec(0)));
  DiracMatrices m = build_delta2_unchecked(bad, good, F2Vec(0), dual_lengths(good));
  ProportionalityReport pr = check_row_proportionality(bad, m);
  CHECK_FALSE(pr.holds);
  CHECK(pr.spread > 1e-3);
}

TEST_CASE("alternating sums of exterior powers") {
  CHECK(std::abs(fermionic_expansion_check(Eigen::MatrixXcd::Zero(3, 3)).alternating_sum - 1.0) < 1e-14);
  FermionicCheck id = fermionic_expansion_check(Eigen::MatrixXcd::Identity(2, 2));
  CHECK(std::abs(id.alternating_sum) < 1e-14);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  CHECK(std::abs(fermionic_expansion_check(d).alternating_sum - 2.0) < 1e-13);

  std::mt19937 rng(1);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int n = 1; n <= 10; ++n) {
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Complex{nd(rng), nd(rng)} / std::sqrt(2.0 * n);
    CHECK(fermionic_expansion_check(a).rel_error < 1e-9);
  }
}

TEST_CASE("regularized determinants") {
  CHECK(std::abs(regularized_det_finite(Eigen::MatrixXcd::Identity(3, 3)).product - 1.0) < 1e-14);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(1, 1) = 2.0;
  d(2, 2) = 5.0;
  RegularizedDet r = regularized_det_finite(d);
  CHECK(r.kept == 2);
  CHECK(std::abs(r.product - 10.0) < 1e-12);
  CHECK(std::abs(r.via_zeta - 10.0) < 1e-9);
}
