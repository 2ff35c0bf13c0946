#include "surfising/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "surfising/quadform.hpp"

namespace surfising {

bool is_closed_walk(const EmbeddedGraph& g, const Cycle& c) {
  if (c.empty()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= g.num_darts()) return false;
    if (g.head(c[i]) != g.tail(c[(i + 1) % c.size()])) return false;
  }
  return true;
}

bool is_prime_reduced(const EmbeddedGraph& g, const Cycle& c) {
  if (!is_closed_walk(g, c)) return false;
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    if (c[(i + 1) % n] == EmbeddedGraph::reverse(c[i])) return false;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < n && periodic; ++i) periodic = c[i] == c[i + p];
    if (periodic) return false;
  }
  return true;
}

Cycle inverse(const Cycle& c) {
  Cycle r(c.rbegin(), c.rend());
  for (int& d : r) d = EmbeddedGraph::reverse(d);
  return r;
}

Cycle least_rotation(const Cycle& c) {
  Cycle best = c;
  Cycle cur = c;
  for (std::size_t k = 1; k < c.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

Cycle canonical(const Cycle& c) { return std::min(least_rotation(c), least_rotation(inverse(c))); }

namespace {

/// True if c is strictly smaller than every other rotation of itself.
bool strictly_least_rotation(const Cycle& c) {
  std::size_t n = c.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      int a = c[i], b = c[(i + k) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: a proper power
    }
  }
  return true;
}

void extend(const EmbeddedGraph& g, int max_len, Cycle& path, std::vector<Cycle>& out) {
  int start = path.front();
  int last = path.back();
  if (g.head(last) == g.tail(start) && start != EmbeddedGraph::reverse(last) &&
      strictly_least_rotation(path)) {
    if (path < least_rotation(inverse(path))) out.push_back(path);
  }
  if (static_cast<int>(path.size()) == max_len) return;
  for (int d : g.rotation(g.head(last))) {
    if (d < start || d == EmbeddedGraph::reverse(last)) continue;
    path.push_back(d);
    extend(g, max_len, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> enumerate_prime_reduced_cycles(const EmbeddedGraph& g, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  std::vector<Cycle> out;
  Cycle path;
  for (int s = 0; s < g.num_darts(); ++s) {
    path.assign(1, s);
    extend(g, max_len, path, out);
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<int> cycle_crossing_vector(const EmbeddedGraph& g, const Cycle& c) {
  std::vector<int> r(static_cast<std::size_t>(2 * g.genus()), 0);
  for (int d : c)
    for (int x : g.edge(EmbeddedGraph::edge_of(d)).crossings) ++r[static_cast<std::size_t>(std::abs(x) - 1)];
  return r;
}

F2Vec cycle_class(const EmbeddedGraph& g, const Cycle& c) {
  auto r = cycle_crossing_vector(g, c);
  F2Vec h(2 * g.genus());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] % 2) h.flip(static_cast<int>(i));
  return h;
}

int chord_crossings(const EmbeddedGraph& g, const Cycle& c) {
  std::size_t n = c.size();
  // Track of each position: rank among the positions using the same edge.
  std::vector<std::pair<int, std::size_t>> uses(n);
  for (std::size_t k = 0; k < n; ++k) uses[k] = {EmbeddedGraph::edge_of(c[k]), k};
  std::sort(uses.begin(), uses.end());
  std::vector<long> track(n), tracks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && uses[j].first == uses[i].first) ++j;
    for (std::size_t t = i; t < j; ++t) {
      track[uses[t].second] = static_cast<long>(t - i);
      tracks[uses[t].second] = static_cast<long>(j - i);
    }
    i = j;
  }
  // Slot of an edge end (the dart leaving the vertex) on a given track, as a
  // position in the anticlockwise order around the vertex.
  auto slot = [&](int end, long t, long m) {
    long sub = EmbeddedGraph::dir_of(end) == 0 ? m - 1 - t : t;
    return static_cast<long>(g.rotation_index(end)) * (static_cast<long>(n) + 1) + sub;
  };
  struct Chord {
    int vertex;
    long a, b;
    bool operator<(const Chord& o) const { return vertex < o.vertex; }
  };
  std::vector<Chord> chords(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t k1 = (k + 1) % n;
    long a = slot(EmbeddedGraph::reverse(c[k]), track[k], tracks[k]);
    long b = slot(c[k1], track[k1], tracks[k1]);
    chords[k] = {g.head(c[k]), std::min(a, b), std::max(a, b)};
  }
  std::sort(chords.begin(), chords.end());
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && chords[j].vertex == chords[i].vertex; ++j) {
      bool xin = chords[i].a < chords[j].a && chords[j].a < chords[i].b;
      bool yin = chords[i].a < chords[j].b && chords[j].b < chords[i].b;
      if (xin != yin) ++count;
    }
  }
  return count;
}

int self_intersections(const EmbeddedGraph& g, const Cycle& c) {
  int total = chord_crossings(g, c);
  auto r = cycle_crossing_vector(g, c);
  for (std::size_t i = 0; i + 1 < r.size(); i += 2) total += r[i] * r[i + 1];
  return total;
}

double total_turning(const EmbeddedGraph& g, const Cycle& c) {
  double t = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    int o = c[k];
    int o1 = c[(k + 1) % c.size()];
    t += g.geometry(o).internal_turn + turn_angle(g.geometry(o).in_dir, g.geometry(o1).out_dir);
  }
  return t;
}

int rot0(const EmbeddedGraph& g, const Cycle& c) {
  double w = total_turning(g, c) / (2.0 * std::numbers::pi);
  double r = std::round(w);
  if (std::abs(w - r) > 1e-6)
    throw std::runtime_error("turning of cycle " + dump_cycle(g, c) + " is not a multiple of 2*pi");
  long k = static_cast<long>(r);
  return static_cast<int>(((k % 2) + 2) % 2);
}

int rot_s(const EmbeddedGraph& g, const Cycle& c, const F2Vec& s) {
  auto r = cycle_crossing_vector(g, c);
  int sr = 0;
  for (std::size_t i = 0; i < r.size(); ++i) sr += s[static_cast<int>(i)] * r[i];
  return (rot0(g, c) + sr) & 1;
}

bool check_theorem_gr(const EmbeddedGraph& g, const Cycle& c, const F2Vec& s) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (int d : c) {
    char& flag = seen[static_cast<std::size_t>(EmbeddedGraph::edge_of(d))];
    if (flag) throw std::invalid_argument("check_theorem_gr: cycle uses an edge twice");
    flag = 1;
  }
  int rhs = (1 + chord_crossings(g, c) + QuadraticForm(s)(cycle_class(g, c))) & 1;
  return rot_s(g, c, s) == rhs;
}

int theorem_gr_failures(const EmbeddedGraph& g, const Cycle& c) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (int d : c) {
    char& flag = seen[static_cast<std::size_t>(EmbeddedGraph::edge_of(d))];
    if (flag) throw std::invalid_argument("theorem_gr_failures: cycle uses an edge twice");
    flag = 1;
  }
  int cr = chord_crossings(g, c);
  int r0 = rot0(g, c);
  auto r = cycle_crossing_vector(g, c);
  F2Vec cls(static_cast<int>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] & 1) cls.flip(static_cast<int>(i));
  int failures = 0;
  for (const auto& s : spin_indices(g.genus())) {
    int sr = 0;
    for (std::size_t i = 0; i < r.size(); ++i) sr += s[static_cast<int>(i)] * r[i];
    if (((r0 + sr) & 1) != ((1 + cr + QuadraticForm(s)(cls)) & 1)) ++failures;
  }
  return failures;
}

std::string dump_cycle(const EmbeddedGraph& g, const Cycle& c) {
  std::string out;
  for (int d : c) {
    if (!out.empty()) out += " ";
    out += "(" + g.edge(EmbeddedGraph::edge_of(d)).id + "," +
           (EmbeddedGraph::dir_of(d) == 0 ? "+" : "-") + ")";
  }
  return out;
}

}  // namespace surfising
