#include "surfising/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace surfising {

Monomial Monomial::var(int v, int exp) {
  Monomial m;
  if (exp > 0) {
    m.f_.emplace_back(v, exp);
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Monomial m;
  for (auto [v, e] : pairs) {
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v) {
      m.f_.back().second += e;
    } else {
      m.f_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

int Monomial::exponent(int v) const {
  for (auto [var, e] : f_)
    if (var == v) return e;
  return 0;
}

bool Monomial::multilinear() const {
  return std::all_of(f_.begin(), f_.end(), [](auto p) { return p.second == 1; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      m.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      m.f_.push_back(*b++);
    } else {
      m.f_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  auto x = a.f_.begin(), y = b.f_.begin();
  while (x != a.f_.end() && y != b.f_.end()) {
    if (x->first != y->first) return x->first < y->first;
    if (x->second != y->second) return x->second > y->second;
    ++x;
    ++y;
  }
  return false;  // equal degree and identical prefix means equal
}

MultiPoly MultiPoly::constant(Complex c, std::optional<int> cap) {
  MultiPoly p(cap);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int v, std::optional<int> cap) {
  MultiPoly p(cap);
  p.add_term(Monomial::var(v), 1.0);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Complex MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

std::vector<int> MultiPoly::variables() const {
  std::set<int> vs;
  for (const auto& [m, c] : terms_)
    for (auto [v, e] : m.factors()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

void MultiPoly::add_term(const Monomial& m, Complex c) {
  if (cap_ && m.degree() > *cap_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < eps_) terms_.erase(it);
}

MultiPoly MultiPoly::truncated(int d) const {
  MultiPoly r(cap_ ? std::min(*cap_, d) : d, eps_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) r.terms_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(cap_, eps_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::with_cap(std::optional<int> cap) const {
  MultiPoly r(cap, eps_);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Complex{-1.0}; }

MultiPoly MultiPoly::operator*(Complex k) const {
  MultiPoly r(cap_, eps_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * k);
  return r;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q, std::optional<int> cap) {
  if (!cap) {
    if (p.cap() && q.cap()) cap = std::min(*p.cap(), *q.cap());
    else cap = p.cap() ? p.cap() : q.cap();
  }
  MultiPoly r(cap, std::max(p.eps(), q.eps()));
  std::map<Monomial, Complex> acc;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      if (cap && mp.degree() + mq.degree() > *cap) continue;
      acc[mp * mq] += cp * cq;
    }
  }
  for (const auto& [m, c] : acc) r.add_term(m, c);
  return r;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return poly_mul(p, q); }

MultiPoly graded_sqrt(const MultiPoly& p, int cap) {
  if (std::abs(p.constant_term() - Complex{1.0}) > p.eps())
    throw std::invalid_argument("graded_sqrt: constant term is not 1");
  std::vector<MultiPoly> parts;  // parts[d] = F_d
  parts.push_back(MultiPoly::constant(1.0));
  MultiPoly result = MultiPoly::constant(1.0, cap);
  for (int d = 1; d <= cap; ++d) {
    MultiPoly fd = p.homogeneous_part(d);
    for (int k = 1; k < d; ++k) fd -= poly_mul(parts[static_cast<std::size_t>(k)],
                                               parts[static_cast<std::size_t>(d - k)], d);
    fd = fd * Complex{0.5};
    result += fd;
    parts.push_back(std::move(fd));
  }
  return result;
}

Complex poly_eval(const MultiPoly& p, const std::map<int, Complex>& assignment) {
  Complex sum{};
  for (const auto& [m, c] : p.terms()) {
    Complex t = c;
    for (auto [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("poly_eval: variable " + std::to_string(v) + " not assigned");
      t *= std::pow(it->second, e);
    }
    sum += t;
  }
  return sum;
}

MultiPoly substitute(const MultiPoly& p, const std::map<int, MultiPoly>& images,
                     std::optional<int> cap) {
  MultiPoly r(cap, p.eps());
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(c, cap);
    for (auto [v, e] : m.factors()) {
      auto it = images.find(v);
      MultiPoly img = it == images.end() ? MultiPoly::variable(v) : it->second;
      for (int k = 0; k < e; ++k) t = poly_mul(t, img, cap);
    }
    r += t;
  }
  return r;
}

SnapResult snap(const MultiPoly& p) {
  SnapResult s{MultiPoly(p.cap(), p.eps()), 0.0};
  for (const auto& [m, c] : p.terms()) {
    Complex r{std::round(c.real()), std::round(c.imag())};
    s.residual = std::max(s.residual, std::abs(c - r));
    s.poly.add_term(m, r);
  }
  return s;
}

double max_abs_diff(const MultiPoly& p, const MultiPoly& q, std::optional<int> d) {
  double m = 0.0;
  auto scan = [&](const MultiPoly& a, const MultiPoly& b) {
    for (const auto& [mono, c] : a.terms()) {
      if (d && mono.degree() > *d) continue;
      m = std::max(m, std::abs(c - b.coefficient(mono)));
    }
  };
  scan(p, q);
  scan(q, p);
  return m;
}

std::string default_variable_name(int v) { return "x" + std::to_string(v); }

std::string render_monomial(const Monomial& m, const VariableNamer& name) {
  std::string out;
  for (auto [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

std::string fmt12(double x) {
  if (x == 0.0) x = 0.0;  // no negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_int(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.0f", std::abs(x));
  return buf;
}

}  // namespace

std::string render_complex(Complex c) {
  std::string im = fmt12(c.imag());
  if (im[0] != '-') im = "+" + im;
  return "(" + fmt12(c.real()) + im + "i)";
}

std::string render(const MultiPoly& p, RenderMode mode, const VariableNamer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string mono = render_monomial(m, name);
    if (mode == RenderMode::raw) {
      if (!first) out += " + ";
      out += render_complex(c);
      if (!mono.empty()) out += "*" + mono;
    } else if (std::abs(c.imag()) > 0.0) {
      if (!first) out += " + ";
      out += render_complex(c);
      if (!mono.empty()) out += "*" + mono;
    } else {
      double re = c.real();
      bool neg = re < 0;
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      bool unit = std::abs(std::abs(re) - 1.0) == 0.0;
      if (mono.empty()) out += fmt_int(re);
      else if (unit) out += mono;
      else out += fmt_int(re) + "*" + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace surfising
