#include "surfising/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace surfising {

namespace {

void check_edges(const EmbeddedGraph& g, const EdgeSet& a) {
  std::set<int> seen;
  for (int e : a) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("unknown edge index " + std::to_string(e));
    if (!seen.insert(e).second) throw std::invalid_argument("edge listed twice in an edge set");
  }
}

}  // namespace

std::vector<int> crossing_vector(const EmbeddedGraph& g, const EdgeSet& a) {
  check_edges(g, a);
  std::vector<int> r(static_cast<std::size_t>(2 * g.genus()), 0);
  for (int e : a) {
    auto re = g.crossing_counts(e);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += re[i];
  }
  return r;
}

bool is_even(const EmbeddedGraph& g, const EdgeSet& a) {
  check_edges(g, a);
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int e : a) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

F2Vec homology_class(const EmbeddedGraph& g, const EdgeSet& a) {
  if (!is_even(g, a)) throw std::invalid_argument("homology_class: edge set is not even");
  auto r = crossing_vector(g, a);
  F2Vec h(2 * g.genus());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] % 2) h.flip(static_cast<int>(i));
  return h;
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  std::set<int> s(a.begin(), a.end());
  for (int e : b)
    if (!s.erase(e)) s.insert(e);
  return {s.begin(), s.end()};
}

std::vector<Cycle> decompose_even_set(const EmbeddedGraph& g, const EdgeSet& a) {
  if (!is_even(g, a)) throw std::invalid_argument("decompose_even_set: edge set is not even");
  std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e : a) in[static_cast<std::size_t>(e)] = 1;
  // partner[x] for a dart x leaving a vertex: the dart leaving the same vertex
  // paired with it.
  std::vector<int> partner(static_cast<std::size_t>(g.num_darts()), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> ends;
    for (int d : g.rotation(v))
      if (in[static_cast<std::size_t>(EmbeddedGraph::edge_of(d))]) ends.push_back(d);
    if (ends.empty()) continue;
    auto low = std::min_element(ends.begin(), ends.end());
    std::rotate(ends.begin(), low, ends.end());
    std::size_t n = ends.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
      partner[static_cast<std::size_t>(ends[i])] = ends[n - 1 - i];
      partner[static_cast<std::size_t>(ends[n - 1 - i])] = ends[i];
    }
  }
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<Cycle> out;
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (int e : sorted) {
    if (used[static_cast<std::size_t>(e)]) continue;
    Cycle c;
    int start = EmbeddedGraph::dart(e, 0);
    int x = start;
    do {
      c.push_back(x);
      used[static_cast<std::size_t>(EmbeddedGraph::edge_of(x))] = 1;
      x = partner[static_cast<std::size_t>(EmbeddedGraph::reverse(x))];
    } while (x != start);
    out.push_back(canonical(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace surfising
