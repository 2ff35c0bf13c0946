#pragma once

#include <cmath>
#include <utility>

namespace surfising {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  Vec2 operator-() const { return {-x, -y}; }
  double norm() const { return std::hypot(x, y); }
  double angle() const { return std::atan2(y, x); }
  Vec2 normalized() const { return *this * (1.0 / norm()); }
  Vec2 left() const { return {-y, x}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Signed turning angle from direction a to direction b, in (-pi, pi].
double turn_angle(Vec2 a, Vec2 b);

/// Orientation-preserving isometry p -> R p + t.
struct Rigid {
  double c = 1.0;
  double s = 0.0;
  Vec2 t{};

  Vec2 apply(Vec2 p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y}; }
  Vec2 rotate(Vec2 d) const { return {c * d.x - s * d.y, s * d.x + c * d.y}; }
  /// (this o other)(p) = this(other(p)).
  Rigid compose(const Rigid& other) const;
  /// The isometry sending segment a0->a1 onto b0->b1 (equal lengths assumed).
  static Rigid mapping(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);
};

/// The base polygon R of a genus-g surface: the regular 4g-gon inscribed in
/// the unit circle with corner k at angle 2*pi*k/(4g). Side j (1-based) runs
/// from corner j-1 to corner j, and z_j(t) is glued to z_{j+2}(1-t) for
/// j = 1,2 mod 4.
///
/// Bridge 2i-1 joins sides 4i-3 and 4i-1, bridge 2i joins sides 4i-2 and 4i.
/// A traversal leaving R through the lower side of a bridge and re-entering
/// through the higher side follows the anticlockwise orientation of the
/// boundary and is recorded as +b, the opposite traversal as -b.
class BasePolygon {
 public:
  explicit BasePolygon(int genus);

  int genus() const { return genus_; }
  int sides() const { return 4 * genus_; }

  Vec2 corner(int k) const;
  Vec2 side_start(int j) const { return corner(j - 1); }
  Vec2 side_end(int j) const { return corner(j); }
  Vec2 outward_normal(int j) const;
  double side_length() const;

  /// Side j' glued to side j.
  int partner(int j) const;
  /// Bridge (1-based) owning side j.
  int bridge_of_side(int j) const;
  /// (lower side, higher side) of bridge b.
  std::pair<int, int> bridge_sides(int b) const;
  /// Signed bridge index of a traversal leaving through side j.
  int crossing_sign(int exit_side) const;

  /// Side the point lies on within tol (1-based), or 0 if none.
  int side_of_point(Vec2 p, double tol) const;
  /// Parameter t of the point on side j.
  double side_param(int j, Vec2 p) const;
  Vec2 side_point(int j, double t) const;
  /// Image of a point on side j under the side gluing.
  Vec2 identify(int j, Vec2 p) const;
  /// Isometry taking the glued partner of side j onto side j, so that a
  /// chart continued across side j is the old chart composed with it.
  Rigid gluing_into(int j) const;

  bool strictly_inside(Vec2 p, double tol) const;
  bool near_corner(Vec2 p, double tol) const;

  /// Half of the turning of the exterior route of a bridge traversal, in
  /// units of pi: +-(g+1)/(2g).
  double kappa(int signed_bridge) const;
  /// Turning of the exterior route between outward and inward normals.
  double sweep(int signed_bridge) const;

 private:
  int genus_;
};

}  // namespace surfising
