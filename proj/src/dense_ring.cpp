#include "surfising/dense_ring.hpp"

#include <bit>
#include <stdexcept>

namespace surfising {

std::size_t DenseRing::graded_size(int nvars, int d) {
  // C(nvars + d, d), saturating
  long double c = 1.0L;
  for (int k = 1; k <= d; ++k) c = c * (nvars + k) / k;
  return c > 1e18L ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(c + 0.5L);
}

DenseRing DenseRing::graded(int nvars, int max_degree, std::size_t max_size) {
  if (nvars < 0 || max_degree < 0) throw std::invalid_argument("DenseRing: negative size");
  if (max_degree > 255) throw std::invalid_argument("DenseRing: degree above 255");
  std::size_t n = graded_size(nvars, max_degree);
  if (n > max_size)
    throw std::length_error("polynomial basis of " + std::to_string(n) +
                            " monomials exceeds the limit of " + std::to_string(max_size) +
                            "; use the univariate specialization");
  DenseRing r;
  r.kind_ = Kind::graded;
  r.nvars_ = nvars;
  r.max_degree_ = max_degree;
  r.size_ = n;
  r.exps_.reserve(n * static_cast<std::size_t>(nvars));
  r.deg_.reserve(n);
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(nvars), 0);
  // Within a degree: larger exponent of the smaller variable first.
  auto emit = [&](auto&& self, int v, int left, int d) -> void {
    if (v == nvars - 1 || nvars == 0) {
      if (nvars > 0) cur[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(left);
      else if (left != 0) return;
      r.exps_.insert(r.exps_.end(), cur.begin(), cur.end());
      r.deg_.push_back(static_cast<std::uint8_t>(d));
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
      self(self, v + 1, left - e, d);
    }
    cur[static_cast<std::size_t>(v)] = 0;
  };
  for (int d = 0; d <= max_degree; ++d) emit(emit, 0, d, d);
  if (r.deg_.size() != n) throw std::logic_error("DenseRing: basis size mismatch");

  r.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string key(reinterpret_cast<const char*>(&r.exps_[i * static_cast<std::size_t>(nvars)]),
                    static_cast<std::size_t>(nvars));
    r.index_.emplace(std::move(key), static_cast<std::int32_t>(i));
  }
  r.times_.assign(n * static_cast<std::size_t>(nvars), -1);
  std::string key(static_cast<std::size_t>(nvars), '\0');
  for (std::size_t i = 0; i < n; ++i) {
    if (r.deg_[i] >= max_degree) continue;
    for (int v = 0; v < nvars; ++v) {
      for (int w = 0; w < nvars; ++w)
        key[static_cast<std::size_t>(w)] =
            static_cast<char>(r.exps_[i * static_cast<std::size_t>(nvars) + static_cast<std::size_t>(w)]);
      key[static_cast<std::size_t>(v)] = static_cast<char>(key[static_cast<std::size_t>(v)] + 1);
      r.times_[i * static_cast<std::size_t>(nvars) + static_cast<std::size_t>(v)] = r.index_.at(key);
    }
  }
  return r;
}

DenseRing DenseRing::squarefree(int nvars, int max_degree) {
  if (nvars < 0 || nvars > 26) throw std::length_error("squarefree ring supports at most 26 variables");
  DenseRing r;
  r.kind_ = Kind::squarefree;
  r.nvars_ = nvars;
  r.max_degree_ = std::min(max_degree, nvars);
  r.size_ = std::size_t{1} << nvars;
  return r;
}

int DenseRing::degree(std::size_t idx) const {
  if (kind_ == Kind::squarefree) return std::popcount(idx);
  return deg_[idx];
}

std::int64_t DenseRing::times_var(int v, std::size_t idx) const {
  if (kind_ == Kind::squarefree) {
    if ((idx >> v) & 1u) return -1;
    if (std::popcount(idx) + 1 > max_degree_) return -1;
    return static_cast<std::int64_t>(idx | (std::size_t{1} << v));
  }
  return times_[idx * static_cast<std::size_t>(nvars_) + static_cast<std::size_t>(v)];
}

Monomial DenseRing::monomial(std::size_t idx) const {
  std::vector<std::pair<int, int>> f;
  if (kind_ == Kind::squarefree) {
    for (int v = 0; v < nvars_; ++v)
      if ((idx >> v) & 1u) f.emplace_back(v, 1);
  } else {
    for (int v = 0; v < nvars_; ++v) {
      int e = exps_[idx * static_cast<std::size_t>(nvars_) + static_cast<std::size_t>(v)];
      if (e) f.emplace_back(v, e);
    }
  }
  return Monomial::from_pairs(std::move(f));
}

std::int64_t DenseRing::index_of(const Monomial& m) const {
  if (m.degree() > max_degree_) return -1;
  if (kind_ == Kind::squarefree) {
    std::size_t idx = 0;
    for (auto [v, e] : m.factors()) {
      if (v >= nvars_ || e > 1) return -1;
      idx |= std::size_t{1} << v;
    }
    return static_cast<std::int64_t>(idx);
  }
  std::string key(static_cast<std::size_t>(nvars_), '\0');
  for (auto [v, e] : m.factors()) {
    if (v >= nvars_) return -1;
    key[static_cast<std::size_t>(v)] = static_cast<char>(e);
  }
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

DenseRing::Vec DenseRing::one() const {
  Vec v = zero();
  v[0] = 1.0;
  return v;
}

DenseRing::Vec DenseRing::mul(const Vec& f, const Vec& g) const {
  Vec out = zero();
  std::vector<std::size_t> fnz;
  for (std::size_t i = 0; i < size_; ++i)
    if (f[i] != Complex{}) fnz.push_back(i);
  if (kind_ == Kind::squarefree) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (g[j] == Complex{}) continue;
      int dj = std::popcount(j);
      for (std::size_t i : fnz) {
        if (i & j) continue;
        if (dj + std::popcount(i) > max_degree_) continue;
        out[i | j] += f[i] * g[j];
      }
    }
    return out;
  }
  for (std::size_t j = 0; j < size_; ++j) {
    if (g[j] == Complex{}) continue;
    int dj = deg_[j];
    const std::uint8_t* ej = &exps_[j * static_cast<std::size_t>(nvars_)];
    for (std::size_t i : fnz) {
      if (deg_[i] + dj > max_degree_) break;  // fnz is ascending in degree
      std::int64_t k = static_cast<std::int64_t>(i);
      for (int v = 0; v < nvars_ && k >= 0; ++v)
        for (int e = 0; e < ej[v] && k >= 0; ++e) k = times_var(v, static_cast<std::size_t>(k));
      if (k >= 0) out[static_cast<std::size_t>(k)] += f[i] * g[j];
    }
  }
  return out;
}

DenseRing::Vec DenseRing::sqrt(const Vec& p, double eps) const {
  if (std::abs(p[0] - Complex{1.0}) > eps)
    throw std::invalid_argument("sqrt: constant term is not 1");
  // F = 1 + G with G = (P - G^2) / 2; each pass fixes one more degree.
  Vec pp = p;
  pp[0] = 0.0;
  Vec g = zero();
  for (int pass = 0; pass < max_degree_; ++pass) {
    Vec g2 = mul(g, g);
    for (std::size_t i = 0; i < size_; ++i) g[i] = 0.5 * (pp[i] - g2[i]);
  }
  g[0] = 1.0;
  return g;
}

MultiPoly DenseRing::to_poly(const Vec& f, double eps) const {
  MultiPoly p(max_degree_, eps);
  for (std::size_t i = 0; i < size_; ++i) {
    if (std::abs(f[i]) < eps) continue;
    if (kind_ == Kind::squarefree && std::popcount(i) > max_degree_) continue;
    p.add_term(monomial(i), f[i]);
  }
  return p;
}

DenseRing::Vec DenseRing::from_poly(const MultiPoly& p) const {
  Vec v = zero();
  for (const auto& [m, c] : p.terms()) {
    std::int64_t k = index_of(m);
    if (k >= 0) v[static_cast<std::size_t>(k)] += c;
  }
  return v;
}

}  // namespace surfising
