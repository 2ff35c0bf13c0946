#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "surfising/multipoly.hpp"

namespace surfising {

/// Truncated polynomial ring C[x_0..x_{n-1}] / (deg > D) with a dense
/// coefficient layout, or its squarefree quotient (x_i^2 = 0).
///
/// Graded layout: monomials of degree 0, 1, ..., D in Monomial order, so a
/// truncation to degree d is a prefix. Squarefree layout: index = bit mask.
class DenseRing {
 public:
  enum class Kind { graded, squarefree };
  using Vec = std::vector<Complex>;

  /// Throws std::length_error when the basis would exceed max_size.
  static DenseRing graded(int nvars, int max_degree, std::size_t max_size = 2'000'000);
  static DenseRing squarefree(int nvars, int max_degree);
  /// Number of monomials of degree <= d in n variables.
  static std::size_t graded_size(int nvars, int d);

  Kind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return size_; }
  int degree(std::size_t idx) const;
  /// Index of x_v * m(idx), or -1 beyond the cap or in the killed ideal.
  std::int64_t times_var(int v, std::size_t idx) const;
  Monomial monomial(std::size_t idx) const;
  /// Index of m, or -1 if m is outside the ring's basis.
  std::int64_t index_of(const Monomial& m) const;

  Vec zero() const { return Vec(size_, Complex{}); }
  Vec one() const;
  Vec mul(const Vec& f, const Vec& g) const;
  /// F with F(0) = 1 and F^2 = p; throws if p(0) != 1.
  Vec sqrt(const Vec& p, double eps = MultiPoly::kDefaultEps) const;

  MultiPoly to_poly(const Vec& f, double eps = MultiPoly::kDefaultEps) const;
  Vec from_poly(const MultiPoly& p) const;

 private:
  Kind kind_ = Kind::graded;
  int nvars_ = 0;
  int max_degree_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint8_t> exps_;   // graded: nvars exponents per monomial
  std::vector<std::int32_t> times_;  // graded: nvars entries per monomial
  std::vector<std::uint8_t> deg_;
  std::unordered_map<std::string, std::int32_t> index_;
};

}  // namespace surfising
