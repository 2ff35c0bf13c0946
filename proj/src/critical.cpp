#include "surfising/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace surfising {

namespace {

/// Points of the dart's polyline with the bridge jumps in traversal order:
/// jump_exit[k] = side left between points k and k+1, or 0.
std::vector<int> dart_jumps(const EmbeddedGraph& g, int d, std::size_t npts) {
  std::vector<int> exits(npts, 0);
  for (const Jump& j : g.edge(EmbeddedGraph::edge_of(d)).jumps) {
    if (EmbeddedGraph::dir_of(d) == 0) exits[j.index] = j.exit_side;
    else exits[npts - 2 - j.index] = j.entry_side;
  }
  return exits;
}

bool inside_closed(const std::vector<Vec2>& poly, Vec2 p, double tol) {
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = poly[i], b = poly[(i + 1) % n];
    Vec2 ab = b - a;
    double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
    if ((a + ab * t - p).norm() <= tol) return true;
  }
  double wind = 0.0;
  for (std::size_t i = 0; i < n; ++i) wind += std::atan2(cross(poly[i] - p, poly[(i + 1) % n] - p),
                                                         dot(poly[i] - p, poly[(i + 1) % n] - p));
  return std::abs(wind) > 3.0;
}

}  // namespace

DevelopedFace develop_face(const EmbeddedGraph& g, int f) {
  DevelopedFace out;
  Rigid chart;
  const auto& darts = g.faces()[static_cast<std::size_t>(f)];
  Vec2 start = g.vertex(g.tail(darts.front())).pos;
  for (int d : darts) {
    auto pts = g.dart_polyline(d);
    auto exits = dart_jumps(g, d, pts.size());
    out.corners.push_back(chart.apply(pts.front()));
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (k == 0 || !exits[k - 1]) out.outline.push_back(chart.apply(pts[k]));
      if (exits[k]) chart = chart.compose(g.polygon()->gluing_into(exits[k]));
    }
  }
  Vec2 end = chart.apply(g.vertex(g.head(darts.back())).pos);
  out.closing_error = (end - start).norm();
  return out;
}

CriticalityReport is_critical_embedding(const EmbeddedGraph& g, double tol) {
  CriticalityReport rep;
  double rmin = 1e300, rmax = -1e300;
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
    if (f == g.outer_face()) continue;
    DevelopedFace face = develop_face(g, f);
    const auto& c = face.corners;
    if (c.size() < 3) throw std::invalid_argument("face " + std::to_string(f) + " has fewer than three corners");
    std::size_t bi = 0, bj = 1, bk = 2;
    double best = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        for (std::size_t k = j + 1; k < c.size(); ++k) {
          double a = std::abs(cross(c[j] - c[i], c[k] - c[i]));
          if (a > best) {
            best = a;
            bi = i, bj = j, bk = k;
          }
        }
    if (best <= 1e-12) throw std::invalid_argument("face " + std::to_string(f) + " has collinear vertices");
    Vec2 a = c[bi], b = c[bj], q = c[bk];
    double dd = 2.0 * cross(b - a, q - a);
    Vec2 ab = b - a, aq = q - a;
    Vec2 center = a + Vec2{(aq.y * dot(ab, ab) - ab.y * dot(aq, aq)) / dd, (ab.x * dot(aq, aq) - aq.x * dot(ab, ab)) / dd};
    double r = (a - center).norm();
    rep.faces.push_back(f);
    rep.radii.push_back(r);
    rep.centers.push_back(center);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    if (rep.first_bad_face >= 0) continue;
    double worst = 0.0;
    for (Vec2 p : c) worst = std::max(worst, std::abs((p - center).norm() - r));
    if (worst > tol) {
      rep.first_bad_face = f;
      rep.diagnostic = "face " + std::to_string(f) + " is not cyclic (deviation " + std::to_string(worst) + ")";
    } else if (!inside_closed(face.outline, center, tol)) {
      rep.first_bad_face = f;
      rep.diagnostic = "circumcenter of face " + std::to_string(f) + " lies outside the face";
    }
  }
  if (rep.faces.empty()) throw std::invalid_argument("graph has no face to check");
  rep.radius = rep.radii.front();
  rep.spread = rmax - rmin;
  if (rep.first_bad_face < 0 && rep.spread > tol) {
    auto it = std::max_element(rep.radii.begin(), rep.radii.end(),
                               [&](double x, double y) { return std::abs(x - rep.radius) < std::abs(y - rep.radius); });
    rep.first_bad_face = rep.faces[static_cast<std::size_t>(it - rep.radii.begin())];
    rep.diagnostic = "face " + std::to_string(rep.first_bad_face) + " has a different circumradius (spread " +
                     std::to_string(rep.spread) + ")";
  }
  rep.critical = rep.first_bad_face < 0;
  return rep;
}

double edge_length(const EmbeddedGraph& g, int e) {
  const Edge& ed = g.edge(e);
  double len = 0.0;
  for (std::size_t k = 0; k + 1 < ed.polyline.size(); ++k) {
    bool jump = std::any_of(ed.jumps.begin(), ed.jumps.end(), [&](const Jump& j) { return j.index == k; });
    if (!jump) len += (ed.polyline[k + 1] - ed.polyline[k]).norm();
  }
  return len;
}

std::vector<double> isoradial_dual_lengths(const EmbeddedGraph& g, double radius) {
  std::vector<double> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    double h = edge_length(g, e) / 2.0;
    double s = radius * radius - h * h;
    if (s < 0.0) throw std::invalid_argument("edge " + g.edge(e).id + " is longer than the circle diameter");
    out.push_back(2.0 * std::sqrt(s));
  }
  return out;
}

std::vector<int> vertices_at_cone_point(const EmbeddedGraph& g, double tol) {
  std::vector<int> out;
  if (!g.polygon()) return out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.polygon()->near_corner(g.vertex(v).pos, tol)) out.push_back(v);
  return out;
}

}  // namespace surfising
