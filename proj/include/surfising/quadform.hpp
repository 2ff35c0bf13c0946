#pragma once

#include <string>
#include <vector>

#include "surfising/f2.hpp"

namespace surfising {

/// q_s(h) = s.h + sum_i h_{2i-1} h_{2i} on F_2^{2g}, the quadratic refinement of
/// the intersection form attached to the spin index s.
class QuadraticForm {
 public:
  explicit QuadraticForm(F2Vec s) : s_(s) {}

  const F2Vec& s() const { return s_; }
  int genus() const { return s_.dim() / 2; }
  int operator()(const F2Vec& h) const;
  /// sum_i q(a_i) q(b_i) over the standard symplectic basis.
  int arf() const;

 private:
  F2Vec s_;
};

/// All 4^g spin indices in ascending bit order.
std::vector<F2Vec> spin_indices(int genus);

enum class SignRule { arf, literal };

SignRule parse_sign_rule(const std::string& name);
std::string to_string(SignRule rule);

/// Exponent of -1 multiplying the Feynman function of s. The arf rule gives
/// Arf(q_s); the literal rule gives prod_{i odd} s_i s_{i+1}.
int sign_exponent(const F2Vec& s, SignRule rule);

}  // namespace surfising
