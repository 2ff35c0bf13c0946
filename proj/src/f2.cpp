#include "surfising/f2.hpp"

#include <bit>
#include <stdexcept>

namespace surfising {

F2Vec::F2Vec(int dim, std::uint32_t bits) : dim_(dim), bits_(bits) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("F2Vec: dimension out of range");
  if (dim < kMaxDim && (bits >> dim) != 0)
    throw std::invalid_argument("F2Vec: bits set beyond dimension");
}

F2Vec F2Vec::parse(std::string_view text) {
  F2Vec v(static_cast<int>(text.size()));
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '1') {
      v.bits_ |= std::uint32_t{1} << k;
    } else if (text[k] != '0') {
      throw std::invalid_argument("F2Vec: expected a string of 0/1 characters");
    }
  }
  return v;
}

F2Vec F2Vec::unit(int dim, int k) { return F2Vec(dim, std::uint32_t{1} << k); }

F2Vec& F2Vec::flip(int k) {
  bits_ ^= std::uint32_t{1} << k;
  return *this;
}

F2Vec F2Vec::operator+(const F2Vec& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("F2Vec: dimension mismatch");
  return F2Vec(dim_, bits_ ^ other.bits_);
}

std::string F2Vec::str() const {
  std::string out(static_cast<std::size_t>(dim_), '0');
  for (int k = 0; k < dim_; ++k)
    if ((*this)[k]) out[static_cast<std::size_t>(k)] = '1';
  return out;
}

int dot(const F2Vec& x, const F2Vec& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dot: dimension mismatch");
  return std::popcount(x.bits() & y.bits()) & 1;
}

int intersection(const F2Vec& x, const F2Vec& y) {
  if (x.dim() != y.dim() || x.dim() % 2 != 0)
    throw std::invalid_argument("intersection: dimension mismatch");
  int sum = 0;
  for (int k = 0; k < x.dim(); k += 2) sum += x[k] * y[k + 1] + x[k + 1] * y[k];
  return sum & 1;
}

}  // namespace surfising
