#include "surfising/reduce.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <set>
#include <stdexcept>

namespace surfising {

namespace {

struct Draft {
  int genus;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  ValidationOptions opt;

  EmbeddedGraph build() const { return EmbeddedGraph::build(genus, vertices, edges, std::nullopt, opt); }
};

std::string fresh_id(const std::set<std::string>& used, const std::string& base) {
  std::string id = base;
  while (used.count(id)) id += "_";
  return id;
}

/// Default offset: a tenth of the smallest distance in the drawing.
double feature_size(const EmbeddedGraph& g) {
  double m = 1.0;
  for (const auto& e : g.edges())
    for (std::size_t k = 0; k + 1 < e.polyline.size(); ++k)
      m = std::min(m, (e.polyline[k + 1] - e.polyline[k]).norm());
  for (int a = 0; a < g.num_vertices(); ++a)
    for (int b = a + 1; b < g.num_vertices(); ++b)
      m = std::min(m, (g.vertex(a).pos - g.vertex(b).pos).norm());
  return 0.1 * m;
}

/// Polyline points strictly between the ends of edge e, shifted to its left
/// by delta, plus the two new vertex positions a and b.
struct OffsetPath {
  Vec2 a, b;
  std::vector<Vec2> inner;  // points of the path a -> b excluding a and b
};

OffsetPath offset_path(const EmbeddedGraph& g, int e, double delta) {
  const Edge& ed = g.edge(e);
  const auto& pl = ed.polyline;
  std::size_t n = pl.size();
  auto seg_left = [&](std::size_t k) { return (pl[k + 1] - pl[k]).normalized().left(); };
  auto jump_at = [&](std::size_t k) -> const Jump* {
    for (const auto& j : ed.jumps)
      if (j.index == k) return &j;
    return nullptr;
  };
  OffsetPath out;
  if (n == 2) {
    Vec2 d = pl[1] - pl[0];
    out.a = pl[0] + d * (1.0 / 3.0) + seg_left(0) * delta;
    out.b = pl[0] + d * (2.0 / 3.0) + seg_left(0) * delta;
    return out;
  }
  out.a = pl[0] + (pl[1] - pl[0]) * 0.5 + seg_left(0) * delta;
  out.b = pl[n - 1] + (pl[n - 2] - pl[n - 1]) * 0.5 + seg_left(n - 2) * delta;
  const BasePolygon* poly = g.polygon() ? &*g.polygon() : nullptr;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (const Jump* j = jump_at(k)) {
      // Exit: where the shifted incoming segment meets the side.
      Vec2 d = (pl[k] - pl[k - 1]).normalized();
      Vec2 q = pl[k] + d.left() * delta;
      Vec2 nout = poly->outward_normal(j->exit_side);
      double t = -dot(q - poly->side_start(j->exit_side), nout) / dot(d, nout);
      Vec2 exit = q + d * t;
      out.inner.push_back(exit);
      out.inner.push_back(poly->identify(j->exit_side, exit));
      ++k;
      continue;
    }
    Vec2 n1 = seg_left(k - 1);
    Vec2 n2 = seg_left(k);
    double denom = 1.0 + dot(n1, n2);
    out.inner.push_back(pl[k] + (n1 + n2) * (delta / denom));
  }
  return out;
}

/// Runs `attempt` with offsets delta, delta/2, ... until the draft validates.
template <class F>
double with_halving(Draft& draft, double delta, F attempt) {
  for (int tries = 0; tries < 40; ++tries, delta *= 0.5) {
    Draft trial = draft;
    attempt(trial, delta);
    try {
      (void)trial.build();
    } catch (const std::invalid_argument&) {
      continue;
    }
    draft = std::move(trial);
    return delta;
  }
  throw std::runtime_error("reduce_degrees: could not place new drawing pieces");
}

}  // namespace

ReducedGraphMap reduce_degrees(const EmbeddedGraph& g, double offset) {
  Draft draft{g.genus(), g.vertices(), g.edges(), g.options()};
  double delta = offset > 0.0 ? offset : feature_size(g);
  std::set<std::string> vids, eids;
  for (const auto& v : g.vertices()) vids.insert(v.id);
  for (const auto& e : g.edges()) eids.insert(e.id);
  std::vector<int> zero, one;
  int m = g.num_edges();

  // Step 1: T-join of the odd vertices inside a spanning forest.
  std::vector<int> parity(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v = 0; v < g.num_vertices(); ++v) parity[static_cast<std::size_t>(v)] = g.degree(v) % 2;
  std::vector<int> join;
  {
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    std::function<int(int)> dfs = [&](int v) {
      seen[static_cast<std::size_t>(v)] = 1;
      int odd = parity[static_cast<std::size_t>(v)];
      for (int d : g.rotation(v)) {
        int w = g.head(d);
        if (seen[static_cast<std::size_t>(w)]) continue;
        int sub = dfs(w);
        if (sub % 2) join.push_back(EmbeddedGraph::edge_of(d));
        odd += sub;
      }
      return odd;
    };
    for (int v = 0; v < g.num_vertices(); ++v)
      if (!seen[static_cast<std::size_t>(v)]) dfs(v);
    std::sort(join.begin(), join.end());
  }
  EmbeddedGraph current = g;
  int zcount = 0;
  for (int e : join) {
    int k = ++zcount;
    std::string va = fresh_id(vids, "p" + std::to_string(k) + "a");
    std::string vb = fresh_id(vids, "p" + std::to_string(k) + "b");
    vids.insert(va);
    vids.insert(vb);
    std::string e1 = fresh_id(eids, "z" + std::to_string(3 * k - 2));
    eids.insert(e1);
    std::string e2 = fresh_id(eids, "z" + std::to_string(3 * k - 1));
    eids.insert(e2);
    std::string e3 = fresh_id(eids, "z" + std::to_string(3 * k));
    eids.insert(e3);
    delta = with_halving(draft, delta, [&](Draft& d, double dl) {
      OffsetPath p = offset_path(current, e, dl);
      const Edge& orig = current.edge(e);
      int ia = static_cast<int>(d.vertices.size());
      d.vertices.push_back({va, p.a});
      d.vertices.push_back({vb, p.b});
      int ib = ia + 1;
      Edge x1;
      x1.id = e1;
      x1.u = orig.u;
      x1.v = ia;
      x1.polyline = {current.vertex(orig.u).pos, p.a};
      Edge x2;
      x2.id = e2;
      x2.u = ia;
      x2.v = ib;
      x2.polyline.push_back(p.a);
      x2.polyline.insert(x2.polyline.end(), p.inner.begin(), p.inner.end());
      x2.polyline.push_back(p.b);
      x2.crossings = orig.crossings;
      Edge x3;
      x3.id = e3;
      x3.u = ib;
      x3.v = orig.v;
      x3.polyline = {p.b, current.vertex(orig.v).pos};
      for (Edge* x : {&x1, &x2, &x3}) d.edges.push_back(*x);
    });
    for (int i = 0; i < 3; ++i) zero.push_back(static_cast<int>(draft.edges.size()) - 3 + i);
    current = draft.build();
  }

  // Step 2: split even degrees above 4.
  int ocount = 0;
  for (;;) {
    int target = -1;
    for (int v = 0; v < current.num_vertices(); ++v) {
      if (current.degree(v) > 4) {
        target = v;
        break;
      }
    }
    if (target < 0) break;
    if (current.degree(target) % 2) throw std::logic_error("reduce_degrees: odd degree after step 1");
    const auto& rot = current.rotation(target);
    int deg = static_cast<int>(rot.size());
    int best = 0;
    double best_span = 1e9;
    for (int i = 0; i < deg; ++i) {
      double a0 = current.geometry(rot[static_cast<std::size_t>(i)]).out_dir.angle();
      double a2 = current.geometry(rot[static_cast<std::size_t>((i + 2) % deg)]).out_dir.angle();
      double span = std::remainder(a2 - a0, 2.0 * std::numbers::pi);
      if (span < 0) span += 2.0 * std::numbers::pi;
      if (span < best_span - 1e-12) {
        best_span = span;
        best = i;
      }
    }
    std::vector<int> moved;
    for (int i = 0; i < 3; ++i) moved.push_back(rot[static_cast<std::size_t>((best + i) % deg)]);
    double bis = current.geometry(moved[0]).out_dir.angle() + 0.5 * best_span;
    Vec2 dir{std::cos(bis), std::sin(bis)};
    int k = ++ocount;
    std::string vid = fresh_id(vids, "s" + std::to_string(k));
    vids.insert(vid);
    std::string eid = fresh_id(eids, "o" + std::to_string(k));
    eids.insert(eid);
    delta = with_halving(draft, delta, [&](Draft& d, double dl) {
      Vec2 pos = current.vertex(target).pos + dir * dl;
      int nv = static_cast<int>(d.vertices.size());
      d.vertices.push_back({vid, pos});
      for (int x : moved) {
        Edge& ed = d.edges[static_cast<std::size_t>(EmbeddedGraph::edge_of(x))];
        if (EmbeddedGraph::dir_of(x) == 0) {
          ed.u = nv;
          ed.polyline.front() = pos;
        } else {
          ed.v = nv;
          ed.polyline.back() = pos;
        }
      }
      Edge split;
      split.id = eid;
      split.u = nv;
      split.v = target;
      split.polyline = {pos, current.vertex(target).pos};
      d.edges.push_back(split);
    });
    one.push_back(static_cast<int>(draft.edges.size()) - 1);
    current = draft.build();
  }

  ReducedGraphMap out{current, zero, one, {}, delta};
  out.f.assign(static_cast<std::size_t>(current.num_edges()), -1);
  for (int e = 0; e < m; ++e) out.f[static_cast<std::size_t>(e)] = e;
  return out;
}

}  // namespace surfising
