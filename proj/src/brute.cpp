#include "surfising/brute.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace surfising {

MultiPoly brute_even_sets(const EmbeddedGraph& g) {
  const int m = g.num_edges();
  if (m > 24) throw std::length_error("brute_even_sets: more than 24 edges");
  std::vector<int> parity(static_cast<std::size_t>(g.num_vertices()), 0);
  int odd = 0;
  auto toggle = [&](int v) {
    int& p = parity[static_cast<std::size_t>(v)];
    p ^= 1;
    odd += p ? 1 : -1;
  };
  MultiPoly out;
  out.add_term(Monomial{}, 1.0);
  std::uint32_t mask = 0;
  for (std::uint32_t k = 1; k < (std::uint32_t{1} << m); ++k) {
    int e = std::countr_zero(k);
    mask ^= std::uint32_t{1} << e;
    const Edge& ed = g.edge(e);
    if (!ed.is_loop()) {
      toggle(ed.u);
      toggle(ed.v);
    }
    if (odd) continue;
    std::vector<std::pair<int, int>> f;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) f.emplace_back(i, 1);
    out.add_term(Monomial::from_pairs(std::move(f)), 1.0);
  }
  return out;
}

std::vector<std::vector<int>> list_perfect_matchings(const EmbeddedGraph& g) {
  if (g.num_edges() > 64) throw std::length_error("brute_perfect_matchings: more than 64 edges");
  std::vector<std::vector<int>> out;
  if (g.num_vertices() % 2) return out;
  std::vector<char> covered(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < g.num_vertices() && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == g.num_vertices()) {
      std::vector<int> mt = chosen;
      std::sort(mt.begin(), mt.end());
      out.push_back(std::move(mt));
      return;
    }
    covered[static_cast<std::size_t>(v)] = 1;
    for (int d : g.rotation(v)) {
      int e = EmbeddedGraph::edge_of(d);
      if (EmbeddedGraph::dir_of(d) == 1 && g.edge(e).is_loop()) continue;
      int w = g.head(d);
      if (w == v || covered[static_cast<std::size_t>(w)]) continue;
      covered[static_cast<std::size_t>(w)] = 1;
      chosen.push_back(e);
      self(self);
      chosen.pop_back();
      covered[static_cast<std::size_t>(w)] = 0;
    }
    covered[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec);
  return out;
}

MultiPoly brute_perfect_matchings(const EmbeddedGraph& g) {
  MultiPoly out;
  for (const auto& mt : list_perfect_matchings(g)) {
    std::vector<std::pair<int, int>> f;
    for (int e : mt) f.emplace_back(e, 1);
    out.add_term(Monomial::from_pairs(std::move(f)), 1.0);
  }
  return out;
}

double brute_ising(const EmbeddedGraph& g, const std::vector<double>& couplings, double beta) {
  const int n = g.num_vertices();
  if (n > 20) throw std::length_error("brute_ising: more than 20 vertices");
  if (static_cast<int>(couplings.size()) != g.num_edges())
    throw std::invalid_argument("one coupling per edge is required");
  double z = 0.0;
  for (std::uint32_t sigma = 0; sigma < (std::uint32_t{1} << n); ++sigma) {
    double energy = 0.0;
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      int su = ((sigma >> ed.u) & 1u) ? -1 : 1;
      int sv = ((sigma >> ed.v) & 1u) ? -1 : 1;
      energy += couplings[static_cast<std::size_t>(e)] * su * sv;
    }
    z += std::exp(beta * energy);
  }
  return z;
}

}  // namespace surfising
