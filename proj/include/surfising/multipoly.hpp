#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfising {

using Complex = std::complex<double>;

/// Monomial as sorted (variable, exponent) pairs with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int v, int exp = 1);
  static Monomial from_pairs(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& factors() const { return f_; }
  int degree() const { return degree_; }
  int exponent(int v) const;
  bool is_one() const { return f_.empty(); }
  bool multilinear() const;

  Monomial operator*(const Monomial& o) const;

  /// Graded order: lower total degree first, then the monomial with the larger
  /// exponent of the smallest differing variable first.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

 private:
  std::vector<std::pair<int, int>> f_;
  int degree_ = 0;
};

/// Sparse polynomial with complex coefficients and an optional total-degree
/// cap. Coefficients with modulus below eps are removed after every operation
/// and terms above the cap are never stored.
class MultiPoly {
 public:
  static constexpr double kDefaultEps = 1e-10;

  MultiPoly() = default;
  explicit MultiPoly(std::optional<int> cap, double eps = kDefaultEps) : cap_(cap), eps_(eps) {}
  static MultiPoly constant(Complex c, std::optional<int> cap = std::nullopt);
  static MultiPoly variable(int v, std::optional<int> cap = std::nullopt);

  const std::map<Monomial, Complex>& terms() const { return terms_; }
  std::optional<int> cap() const { return cap_; }
  double eps() const { return eps_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  Complex coefficient(const Monomial& m) const;
  Complex constant_term() const { return coefficient(Monomial{}); }
  std::vector<int> variables() const;

  /// Adds c*m, respecting cap and eps.
  void add_term(const Monomial& m, Complex c);
  MultiPoly truncated(int d) const;
  MultiPoly homogeneous_part(int d) const;
  MultiPoly with_cap(std::optional<int> cap) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(Complex k) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);

 private:
  std::map<Monomial, Complex> terms_;
  std::optional<int> cap_;
  double eps_ = kDefaultEps;
};

/// Product with all terms of total degree above cap dropped; an absent cap
/// falls back to the smaller of the operand caps.
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q, std::optional<int> cap = std::nullopt);
MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);

/// The unique F with F(0) = 1 and F^2 = p up to degree cap, from the graded
/// recursion 2 F_d = p_d - sum_{0<k<d} F_k F_{d-k}. Throws if the constant term
/// of p is not 1.
MultiPoly graded_sqrt(const MultiPoly& p, int cap);

/// Evaluation; throws std::invalid_argument when a variable is unassigned.
Complex poly_eval(const MultiPoly& p, const std::map<int, Complex>& assignment);

/// Replaces each variable by a polynomial; unmapped variables are kept.
MultiPoly substitute(const MultiPoly& p, const std::map<int, MultiPoly>& images,
                     std::optional<int> cap = std::nullopt);

struct SnapResult {
  MultiPoly poly;
  double residual = 0.0;  // max distance of a coefficient to the nearest Gaussian integer
};

/// Rounds every coefficient to the nearest Gaussian integer.
SnapResult snap(const MultiPoly& p);

/// Largest coefficient modulus of p - q, optionally only up to degree d.
double max_abs_diff(const MultiPoly& p, const MultiPoly& q, std::optional<int> d = std::nullopt);

enum class RenderMode { raw, integer };
using VariableNamer = std::function<std::string(int)>;

std::string default_variable_name(int v);
std::string render_monomial(const Monomial& m, const VariableNamer& name);
/// Graded order, coefficients as (a+bi) with 12 significant digits in raw
/// mode, plain integers in integer mode.
std::string render(const MultiPoly& p, RenderMode mode, const VariableNamer& name = default_variable_name);
std::string render_complex(Complex c);

}  // namespace surfising
