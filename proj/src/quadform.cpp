#include "surfising/quadform.hpp"

#include <stdexcept>

namespace surfising {

int QuadraticForm::operator()(const F2Vec& h) const {
  int v = dot(s_, h);
  for (int k = 0; k + 1 < h.dim(); k += 2) v += h[k] * h[k + 1];
  return v & 1;
}

int QuadraticForm::arf() const {
  int a = 0;
  for (int i = 0; i < genus(); ++i)
    a += (*this)(F2Vec::unit(s_.dim(), 2 * i)) * (*this)(F2Vec::unit(s_.dim(), 2 * i + 1));
  return a & 1;
}

std::vector<F2Vec> spin_indices(int genus) {
  std::vector<F2Vec> out;
  for (std::uint32_t k = 0; k < f2_space_size(2 * genus); ++k) out.emplace_back(2 * genus, k);
  return out;
}

SignRule parse_sign_rule(const std::string& name) {
  if (name == "arf") return SignRule::arf;
  if (name == "literal") return SignRule::literal;
  throw std::invalid_argument("unknown sign rule '" + name + "' (expected arf or literal)");
}

std::string to_string(SignRule rule) { return rule == SignRule::arf ? "arf" : "literal"; }

int sign_exponent(const F2Vec& s, SignRule rule) {
  if (rule == SignRule::arf) return QuadraticForm(s).arf();
  if (s.dim() == 0) return 0;
  int p = 1;
  for (int k = 0; k + 1 < s.dim(); k += 2) p *= s[k] * s[k + 1];
  return p;
}

}  // namespace surfising
