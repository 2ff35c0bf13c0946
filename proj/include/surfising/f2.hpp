#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace surfising {

/// Vector over the two-element field, stored as a bit mask.
///
/// Coordinate k (0-based) of a length-2g vector pairs with the homology basis
/// a_1, b_1, ..., a_g, b_g, so coordinate 2(i-1) is a_i and 2i-1 is b_i. The
/// same indexing is used for bridges: bridge b (1-based) is coordinate b-1.
class F2Vec {
 public:
  static constexpr int kMaxDim = 32;

  F2Vec() = default;
  explicit F2Vec(int dim, std::uint32_t bits = 0);

  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static F2Vec parse(std::string_view text);
  static F2Vec unit(int dim, int k);

  int dim() const { return dim_; }
  std::uint32_t bits() const { return bits_; }
  bool operator[](int k) const { return (bits_ >> k) & 1u; }
  bool is_zero() const { return bits_ == 0; }

  F2Vec& flip(int k);
  F2Vec operator+(const F2Vec& other) const;

  /// Coordinate string, coordinate 0 first.
  std::string str() const;

  friend auto operator<=>(const F2Vec&, const F2Vec&) = default;

 private:
  int dim_ = 0;
  std::uint32_t bits_ = 0;
};

/// Standard scalar product mod 2.
int dot(const F2Vec& x, const F2Vec& y);

/// Mod-2 intersection form in the symplectic basis: a_i.b_j = delta_ij.
int intersection(const F2Vec& x, const F2Vec& y);

/// Number of vectors of dimension `dim`; callers iterate with F2Vec(dim, k).
inline std::uint32_t f2_space_size(int dim) { return std::uint32_t{1} << dim; }

}  // namespace surfising
