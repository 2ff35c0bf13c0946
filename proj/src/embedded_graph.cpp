#include "surfising/embedded_graph.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace surfising {

namespace {

constexpr double kBoundaryTol = 1e-8;
constexpr double kGlueTol = 1e-7;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 d = b - a;
  double len2 = dot(d, d);
  double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + d * t)).norm();
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  double d1 = cross(b - a, c - a);
  double d2 = cross(b - a, d - a);
  double d3 = cross(d - c, a - c);
  double d4 = cross(d - c, b - c);
  // Near-collinear configurations are not proper crossings.
  double eps = 1e-12 * (b - a).norm() * (d - c).norm();
  if (std::abs(d1) <= eps || std::abs(d2) <= eps || std::abs(d3) <= eps || std::abs(d4) <= eps) return false;
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

double segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

struct Segment {
  int edge;
  std::size_t index;  // polyline[index] -> polyline[index+1]
  Vec2 a, b;
  int vertex_a;  // graph vertex at a, or -1
  int vertex_b;
};

}  // namespace

EmbeddedGraph EmbeddedGraph::build(int genus, std::vector<Vertex> vertices,
                                   std::vector<Edge> edges,
                                   std::optional<std::vector<Color>> colors,
                                   ValidationOptions opt) {
  if (genus < 0) fail("genus must be nonnegative");
  EmbeddedGraph g;
  g.genus_ = genus;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.colors_ = std::move(colors);
  g.options_ = opt;
  if (genus > 0) g.polygon_.emplace(genus);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!g.vertex_index_.emplace(g.vertices_[static_cast<std::size_t>(v)].id, v).second)
      fail("duplicate vertex id '" + g.vertex(v).id + "'");
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!g.edge_index_.emplace(g.edges_[static_cast<std::size_t>(e)].id, e).second)
      fail("duplicate edge id '" + g.edge(e).id + "'");
  }
  g.detect_jumps();
  g.validate();
  g.derive();
  g.build_faces();
  return g;
}

void EmbeddedGraph::detect_jumps() {
  for (auto& ed : edges_) {
    ed.jumps.clear();
    if (!polygon_) continue;
    const std::string where = "edge '" + ed.id + "': ";
    const auto& pl = ed.polyline;
    std::size_t n = pl.size();
    for (std::size_t k = 1; k + 1 < n; ++k) {
      int side = polygon_->side_of_point(pl[k], kBoundaryTol);
      if (side == 0) {
        if (!polygon_->strictly_inside(pl[k], kBoundaryTol))
          fail(where + "polyline leaves the base polygon outside a bridge");
        continue;
      }
      if (polygon_->near_corner(pl[k], kGlueTol)) fail(where + "bridge traversal at a polygon corner");
      if (k + 2 >= n) fail(where + "boundary point without a matching entry point");
      int entry = polygon_->side_of_point(pl[k + 1], kBoundaryTol);
      if (entry != polygon_->partner(side))
        fail(where + "exit on side " + std::to_string(side) + " is not followed by an entry on side " +
             std::to_string(polygon_->partner(side)));
      if ((polygon_->identify(side, pl[k]) - pl[k + 1]).norm() > kGlueTol)
        fail(where + "entry point is not the glued image of the exit point");
      ed.jumps.push_back({k, side, entry, polygon_->crossing_sign(side)});
      ++k;
    }
  }
}

void EmbeddedGraph::validate() const {
  const double tol = options_.tol;
  if (colors_ && colors_->size() != vertices_.size()) fail("bipartition does not cover all vertices");

  for (const auto& vx : vertices_) {
    if (polygon_ && !polygon_->strictly_inside(vx.pos, kBoundaryTol))
      fail("vertex '" + vx.id + "' is not in the interior of the base polygon");
  }

  for (int e = 0; e < num_edges(); ++e) {
    const Edge& ed = edge(e);
    const std::string where = "edge '" + ed.id + "': ";
    if (ed.u < 0 || ed.u >= num_vertices() || ed.v < 0 || ed.v >= num_vertices())
      fail(where + "unknown endpoint");
    if (ed.polyline.size() < 2) fail(where + "polyline needs at least two points");
    if ((ed.polyline.front() - vertex(ed.u).pos).norm() > tol)
      fail(where + "polyline does not start at vertex '" + vertex(ed.u).id + "'");
    if ((ed.polyline.back() - vertex(ed.v).pos).norm() > tol)
      fail(where + "polyline does not end at vertex '" + vertex(ed.v).id + "'");
    for (std::size_t k = 0; k + 1 < ed.polyline.size(); ++k)
      if ((ed.polyline[k + 1] - ed.polyline[k]).norm() <= tol) fail(where + "zero-length segment");
    if (colors_) {
      if ((*colors_)[static_cast<std::size_t>(ed.u)] == (*colors_)[static_cast<std::size_t>(ed.v)])
        fail(where + "joins two vertices of the same color");
    }
    if (!polygon_) {
      if (!ed.crossings.empty()) fail(where + "crossings listed on a genus-0 drawing");
      continue;
    }
    for (int c : ed.crossings)
      if (c == 0 || std::abs(c) > 2 * genus_) fail(where + "crossing index out of range");
    if (ed.jumps.size() != ed.crossings.size())
      fail(where + "polyline has " + std::to_string(ed.jumps.size()) +
           " bridge traversals but crossings lists " + std::to_string(ed.crossings.size()));
    for (std::size_t k = 0; k < ed.jumps.size(); ++k) {
      const Jump& j = ed.jumps[k];
      if (j.bridge != ed.crossings[k])
        fail(where + "traversal " + std::to_string(k + 1) + " crosses bridge " +
             std::to_string(j.bridge) + " but crossings lists " + std::to_string(ed.crossings[k]));
      Vec2 in = ed.polyline[j.index] - ed.polyline[j.index - 1];
      Vec2 out = ed.polyline[j.index + 2] - ed.polyline[j.index + 1];
      if (dot(in.normalized(), polygon_->outward_normal(j.exit_side)) <= options_.angle_tol ||
          dot(out.normalized(), -polygon_->outward_normal(j.entry_side)) <= options_.angle_tol)
        fail(where + "bridge traversal is not transversal to the boundary");
    }
  }

  // Pairwise disjointness of the straight pieces.
  std::vector<Segment> segs;
  for (int e = 0; e < num_edges(); ++e) {
    const Edge& ed = edge(e);
    std::size_t n = ed.polyline.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      bool is_jump = std::any_of(ed.jumps.begin(), ed.jumps.end(),
                                 [&](const Jump& j) { return j.index == k; });
      if (is_jump) continue;
      segs.push_back({e, k, ed.polyline[k], ed.polyline[k + 1], k == 0 ? ed.u : -1,
                      k + 2 == n ? ed.v : -1});
    }
  }
  for (const auto& s : segs) {
    for (int v = 0; v < num_vertices(); ++v) {
      if (v == s.vertex_a || v == s.vertex_b) continue;
      if (point_segment_distance(vertex(v).pos, s.a, s.b) <= tol)
        fail("edge '" + edge(s.edge).id + "' passes through vertex '" + vertex(v).id + "'");
    }
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& s = segs[i];
      const Segment& t = segs[j];
      // Shared point allowed: consecutive pieces of one edge, or a common vertex.
      std::optional<Vec2> shared;
      Vec2 ds, dt;
      if (s.edge == t.edge && t.index == s.index + 1) {
        shared = s.b;
        ds = s.a - s.b;
        dt = t.b - t.a;
      } else {
        auto at = [](int x, int y) { return x >= 0 && x == y; };
        if (at(s.vertex_a, t.vertex_a)) {
          shared = s.a;
          ds = s.b - s.a;
          dt = t.b - t.a;
        } else if (at(s.vertex_a, t.vertex_b)) {
          shared = s.a;
          ds = s.b - s.a;
          dt = t.a - t.b;
        } else if (at(s.vertex_b, t.vertex_a)) {
          shared = s.b;
          ds = s.a - s.b;
          dt = t.b - t.a;
        } else if (at(s.vertex_b, t.vertex_b)) {
          shared = s.b;
          ds = s.a - s.b;
          dt = t.a - t.b;
        }
      }
      if (shared) {
        if (std::abs(turn_angle(ds, dt)) <= options_.angle_tol)
          fail("edges '" + edge(s.edge).id + "' and '" + edge(t.edge).id + "' overlap");
        // Away from the shared point the pieces must stay apart.
        Vec2 sa = (s.a - *shared).norm() <= tol ? s.a + (s.b - s.a) * 1e-6 : s.a;
        Vec2 sb = (s.b - *shared).norm() <= tol ? s.b + (s.a - s.b) * 1e-6 : s.b;
        Vec2 ta = (t.a - *shared).norm() <= tol ? t.a + (t.b - t.a) * 1e-6 : t.a;
        Vec2 tb = (t.b - *shared).norm() <= tol ? t.b + (t.a - t.b) * 1e-6 : t.b;
        if (segments_intersect(sa, sb, ta, tb))
          fail("edges '" + edge(s.edge).id + "' and '" + edge(t.edge).id + "' cross");
        continue;
      }
      if (segment_distance(s.a, s.b, t.a, t.b) <= tol)
        fail("edges '" + edge(s.edge).id + "' and '" + edge(t.edge).id + "' cross or touch");
    }
  }
}

void EmbeddedGraph::derive() {
  geometry_.assign(static_cast<std::size_t>(num_darts()), {});
  for (int e = 0; e < num_edges(); ++e) {
    Edge& ed = edges_[static_cast<std::size_t>(e)];
    const auto& pl = ed.polyline;
    std::size_t n = pl.size();
    auto jump_at = [&](std::size_t k) -> const Jump* {
      for (const auto& j : ed.jumps)
        if (j.index == k) return &j;
      return nullptr;
    };
    double total = 0.0;
    double kappa = 0.0;
    std::optional<Vec2> prev;
    const Jump* pending = nullptr;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (const Jump* j = jump_at(k)) {
        pending = j;
        continue;
      }
      Vec2 d = pl[k + 1] - pl[k];
      if (prev) {
        if (pending) {
          Vec2 nout = polygon_->outward_normal(pending->exit_side);
          Vec2 nin = -polygon_->outward_normal(pending->entry_side);
          total += turn_angle(*prev, nout) + polygon_->sweep(pending->bridge) + turn_angle(nin, d);
          kappa += polygon_->kappa(pending->bridge);
          pending = nullptr;
        } else {
          total += turn_angle(*prev, d);
        }
      }
      prev = d;
    }
    Vec2 first = (pl[1] - pl[0]).normalized();
    Vec2 last = (pl[n - 1] - pl[n - 2]).normalized();
    geometry_[static_cast<std::size_t>(dart(e, 0))] = {first, last, total, kappa};
    geometry_[static_cast<std::size_t>(dart(e, 1))] = {-last, -first, -total, -kappa};
  }

  rotation_.assign(static_cast<std::size_t>(num_vertices()), {});
  rotation_index_.assign(static_cast<std::size_t>(num_darts()), 0);
  for (int d = 0; d < num_darts(); ++d) rotation_[static_cast<std::size_t>(tail(d))].push_back(d);
  for (int v = 0; v < num_vertices(); ++v) {
    auto& rot = rotation_[static_cast<std::size_t>(v)];
    std::sort(rot.begin(), rot.end(), [&](int a, int b) {
      return geometry(a).out_dir.angle() < geometry(b).out_dir.angle();
    });
    for (std::size_t i = 0; i < rot.size(); ++i) {
      rotation_index_[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
      if (rot.size() > 1) {
        double a = geometry(rot[i]).out_dir.angle();
        double b = geometry(rot[(i + 1) % rot.size()]).out_dir.angle();
        double gap = std::remainder(b - a, 2.0 * std::numbers::pi);
        if (std::abs(gap) <= options_.angle_tol)
          fail("two edge ends leave vertex '" + vertex(v).id + "' in the same direction");
      }
    }
  }
}

int EmbeddedGraph::tail(int d) const {
  const Edge& e = edge(edge_of(d));
  return dir_of(d) == 0 ? e.u : e.v;
}

int EmbeddedGraph::head(int d) const {
  const Edge& e = edge(edge_of(d));
  return dir_of(d) == 0 ? e.v : e.u;
}

std::vector<Vec2> EmbeddedGraph::dart_polyline(int d) const {
  std::vector<Vec2> pts = edge(edge_of(d)).polyline;
  if (dir_of(d) == 1) std::reverse(pts.begin(), pts.end());
  return pts;
}

std::vector<int> EmbeddedGraph::crossing_counts(int e) const {
  std::vector<int> r(static_cast<std::size_t>(2 * genus_), 0);
  for (int c : edge(e).crossings) ++r[static_cast<std::size_t>(std::abs(c) - 1)];
  return r;
}

int EmbeddedGraph::face_next(int d) const {
  const auto& rot = rotation(head(d));
  int deg = static_cast<int>(rot.size());
  int i = rotation_index(reverse(d));
  return rot[static_cast<std::size_t>((i - 1 + deg) % deg)];
}

void EmbeddedGraph::build_faces() {
  faces_.clear();
  face_of_dart_.assign(static_cast<std::size_t>(num_darts()), -1);
  for (int d0 = 0; d0 < num_darts(); ++d0) {
    if (face_of_dart_[static_cast<std::size_t>(d0)] >= 0) continue;
    int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    int d = d0;
    do {
      face_of_dart_[static_cast<std::size_t>(d)] = f;
      faces_.back().push_back(d);
      d = face_next(d);
    } while (d != d0);
  }
  outer_face_ = -1;
  if (genus_ == 0) {
    // One outer face per component; the first found with negative area is kept.
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
      if (face_area(f) < 0.0) {
        outer_face_ = f;
        break;
      }
    }
  }
}

double EmbeddedGraph::face_area(int f) const {
  double a = 0.0;
  for (int d : faces_[static_cast<std::size_t>(f)]) {
    auto pts = dart_polyline(d);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) a += cross(pts[k], pts[k + 1]);
  }
  return 0.5 * a;
}

std::optional<int> EmbeddedGraph::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> EmbeddedGraph::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::string EmbeddedGraph::variable_name(int e) const {
  const Edge& ed = edge(e);
  return ed.weight_name.empty() ? "x" + ed.id : ed.weight_name;
}

int EmbeddedGraph::components() const {
  std::vector<int> parent(static_cast<std::size_t>(num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int count = num_vertices();
  for (const auto& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --count;
    }
  }
  return count;
}

}  // namespace surfising
