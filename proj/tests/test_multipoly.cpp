#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "surfising/dense_ring.hpp"
#include "surfising/multipoly.hpp"

using namespace surfising;

namespace {

MultiPoly x(int v) { return MultiPoly::variable(v); }
MultiPoly one() { return MultiPoly::constant(1.0); }

MultiPoly random_poly(std::mt19937& rng, int nvars, int degree, int terms) {
  std::uniform_int_distribution<int> var(0, nvars - 1), deg(0, degree);
  std::normal_distribution<double> c(0.0, 1.0);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<int, int>> f;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) f.emplace_back(var(rng), 1);
    p.add_term(Monomial::from_pairs(f), Complex{c(rng), c(rng)});
  }
  return p;
}

}  // namespace

TEST_CASE("products with and without a cap") {
  MultiPoly p = (one() + x(0)) * (one() + x(1));
  CHECK(render(p, RenderMode::integer) == "1 + x0 + x1 + x0*x1");
  MultiPoly q = poly_mul(one() + x(0), one() + x(0), 1);
  CHECK(render(q, RenderMode::integer) == "1 + 2*x0");
  CHECK(q.degree() == 1);
}

TEST_CASE("monomials combine exponents") {
  Monomial m = Monomial::var(0) * Monomial::var(2, 3) * Monomial::var(0);
  CHECK(m.exponent(0) == 2);
  CHECK(m.exponent(2) == 3);
  CHECK(m.degree() == 5);
  CHECK_FALSE(m.multilinear());
  CHECK(Monomial::from_pairs({{1, 1}, {0, 1}}) == Monomial::var(0) * Monomial::var(1));
}

TEST_CASE("graded square roots") {
  CHECK(max_abs_diff(graded_sqrt(one(), 5), one()) == 0.0);
  MultiPoly f = one() + x(0) + x(1);
  MultiPoly r = graded_sqrt(f * f, 2);
  CHECK(max_abs_diff(r, f) < 1e-14);
  // sqrt(1 - 4x) = 1 - 2x - 2x^2 - 4x^3 - 10x^4.
  MultiPoly s = graded_sqrt(one() - x(0) * Complex{4.0}, 4);
  CHECK(s.coefficient(Monomial::var(0, 4)).real() == doctest::Approx(-10.0));
  CHECK(s.coefficient(Monomial::var(0, 3)).real() == doctest::Approx(-4.0));
  CHECK_THROWS(graded_sqrt(x(0), 3));
}

TEST_CASE("evaluation") {
  MultiPoly p = one() + x(0) * x(1) * x(2);
  CHECK(poly_eval(p, {{0, 1.0}, {1, 1.0}, {2, 1.0}}) == Complex{2.0});
  CHECK(poly_eval(p, {{0, 0.0}, {1, 0.0}, {2, 0.0}}) == Complex{1.0});
  CHECK_THROWS_AS(poly_eval(p, {{0, 1.0}}), std::invalid_argument);
}

TEST_CASE("snapping to Gaussian integers") {
  MultiPoly p;
  p.add_term(Monomial{}, Complex{1.0000001, -1e-9});
  p.add_term(Monomial::var(0), Complex{2.9999999, 0.0});
  SnapResult s = snap(p);
  CHECK(render(s.poly, RenderMode::integer) == "1 + 3*x0");
  CHECK(s.residual == doctest::Approx(1e-7).epsilon(1e-3));
}

TEST_CASE("substitution") {
  MultiPoly p = x(0) * x(1) + x(2);
  MultiPoly q = substitute(p, {{0, one()}, {1, x(5)}, {2, MultiPoly{}}});
  CHECK(render(q, RenderMode::integer) == "x5");
}

TEST_CASE("dense rings agree with sparse products") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly a = random_poly(rng, 4, 3, 6), b = random_poly(rng, 4, 3, 6);
    DenseRing ring = DenseRing::graded(4, 5);
    MultiPoly dense = ring.to_poly(ring.mul(ring.from_poly(a), ring.from_poly(b)));
    CHECK(max_abs_diff(dense, poly_mul(a, b, 5)) < 1e-12);
  }
}

TEST_CASE("the squarefree ring keeps multilinear coefficients") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly a = random_poly(rng, 5, 3, 6), b = random_poly(rng, 5, 3, 6);
    DenseRing sq = DenseRing::squarefree(5, 5);
    MultiPoly dense = sq.to_poly(sq.mul(sq.from_poly(a), sq.from_poly(b)));
    MultiPoly full = poly_mul(a, b, 5);
    for (const auto& [m, c] : full.terms())
      if (m.multilinear()) CHECK(std::abs(dense.coefficient(m) - c) < 1e-12);
    for (const auto& [m, c] : dense.terms()) CHECK(m.multilinear());
  }
}

TEST_CASE("dense square roots") {
  DenseRing ring = DenseRing::graded(3, 4);
  MultiPoly f = one() + x(0) * Complex{0.5} - x(1) * x(2) + x(2) * x(2) * Complex{0.0, 2.0};
  MultiPoly sq = poly_mul(f, f, 4);
  MultiPoly r = ring.to_poly(ring.sqrt(ring.from_poly(sq)));
  CHECK(max_abs_diff(r, f) < 1e-12);
  CHECK(DenseRing::graded_size(3, 2) == 10);
}
