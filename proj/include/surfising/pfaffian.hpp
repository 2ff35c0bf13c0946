#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "surfising/multipoly.hpp"

namespace surfising {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static Complex zero() { return {}; }
  static Complex one() { return 1.0; }
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static bool equal(const Complex& x, const Complex& y, double tol) { return std::abs(x - y) <= tol; }
};

template <>
struct ScalarTraits<MultiPoly> {
  static MultiPoly zero() { return {}; }
  static MultiPoly one() { return MultiPoly::constant(1.0); }
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static bool equal(const MultiPoly& x, const MultiPoly& y, double tol) { return max_abs_diff(x, y) <= tol; }
};

/// Square array with value semantics, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ScalarTraits<T>::zero()) {}

  int size() const { return n_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

 private:
  int n_ = 0;
  std::vector<T> a_;
};

template <class T>
bool is_skew(const SquareMatrix<T>& a, double tol = 1e-12) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      if (!ScalarTraits<T>::equal(a(i, j), -a(j, i), tol)) return false;
  return true;
}

/// Pfaffian by expansion along the first remaining row, memoized on the set of
/// remaining indices: Pf(A) = sum_j (-1)^{j+1} a_{1j} Pf(A with rows/cols 1, j
/// removed). Supports n <= 24.
template <class T>
T pfaffian(const SquareMatrix<T>& a) {
  const int n = a.size();
  if (n % 2) throw std::invalid_argument("pfaffian: odd dimension");
  if (n > 24) throw std::length_error("pfaffian: dimension above 24");
  if (!is_skew(a)) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t rest) -> T {
    if (rest == 0) return ScalarTraits<T>::one();
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    int i = std::countr_zero(rest);
    std::uint32_t r1 = rest & ~(std::uint32_t{1} << i);
    T sum = ScalarTraits<T>::zero();
    int pos = 0;
    for (int j = i + 1; j < n; ++j) {
      if (!((r1 >> j) & 1u)) continue;
      const T& aij = a(i, j);
      if (!ScalarTraits<T>::is_zero(aij)) {
        T sub = self(self, r1 & ~(std::uint32_t{1} << j));
        if (!ScalarTraits<T>::is_zero(sub)) {
          T term = aij * sub;
          if (pos % 2) sum -= term;
          else sum += term;
        }
      }
      ++pos;
    }
    memo.emplace(rest, sum);
    return sum;
  };
  return rec(rec, (std::uint32_t{1} << n) - 1);
}

/// Determinant as the sum over permutations, built row by row and memoized on
/// the set of used columns; works over any commutative ring. Supports n <= 24.
template <class T>
T det_expand(const SquareMatrix<T>& a) {
  const int n = a.size();
  if (n > 24) throw std::length_error("det_expand: dimension above 24");
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t used) -> T {
    int k = std::popcount(used);
    if (k == n) return ScalarTraits<T>::one();
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    T sum = ScalarTraits<T>::zero();
    for (int c = 0; c < n; ++c) {
      if ((used >> c) & 1u) continue;
      const T& akc = a(k, c);
      if (ScalarTraits<T>::is_zero(akc)) continue;
      T sub = self(self, used | (std::uint32_t{1} << c));
      if (ScalarTraits<T>::is_zero(sub)) continue;
      T term = akc * sub;
      if (std::popcount(used >> c) % 2) sum -= term;
      else sum += term;
    }
    memo.emplace(used, sum);
    return sum;
  };
  return rec(rec, 0u);
}

template <class T>
SquareMatrix<T> from_eigen(const Eigen::MatrixXcd& m) {
  SquareMatrix<T> a(static_cast<int>(m.rows()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      if constexpr (std::is_same_v<T, Complex>) a(i, j) = m(i, j);
      else a(i, j) = T::constant(m(i, j));
    }
  return a;
}

}  // namespace surfising
