#include "surfising/polygon.hpp"

#include <numbers>
#include <stdexcept>

namespace surfising {

double turn_angle(Vec2 a, Vec2 b) {
  double t = std::atan2(cross(a, b), dot(a, b));
  if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
  return t;
}

Rigid Rigid::compose(const Rigid& o) const {
  Rigid r;
  r.c = c * o.c - s * o.s;
  r.s = s * o.c + c * o.s;
  r.t = apply(o.t);
  return r;
}

Rigid Rigid::mapping(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  double phi = (b1 - b0).angle() - (a1 - a0).angle();
  Rigid r;
  r.c = std::cos(phi);
  r.s = std::sin(phi);
  r.t = b0 - r.rotate(a0);
  return r;
}

BasePolygon::BasePolygon(int genus) : genus_(genus) {
  if (genus < 1) throw std::invalid_argument("BasePolygon: genus must be positive");
}

Vec2 BasePolygon::corner(int k) const {
  int n = sides();
  k = ((k % n) + n) % n;
  double a = 2.0 * std::numbers::pi * k / n;
  return {std::cos(a), std::sin(a)};
}

Vec2 BasePolygon::outward_normal(int j) const {
  double a = 2.0 * std::numbers::pi * (j - 0.5) / sides();
  return {std::cos(a), std::sin(a)};
}

double BasePolygon::side_length() const { return (corner(1) - corner(0)).norm(); }

int BasePolygon::partner(int j) const {
  int pos = (j - 1) % 4;
  return pos < 2 ? j + 2 : j - 2;
}

int BasePolygon::bridge_of_side(int j) const {
  int block = (j - 1) / 4;
  int pos = (j - 1) % 4;
  return 2 * block + (pos % 2 == 0 ? 1 : 2);
}

std::pair<int, int> BasePolygon::bridge_sides(int b) const {
  int block = (b - 1) / 2;
  int lower = 4 * block + ((b - 1) % 2 == 0 ? 1 : 2);
  return {lower, lower + 2};
}

int BasePolygon::crossing_sign(int exit_side) const {
  int b = bridge_of_side(exit_side);
  return bridge_sides(b).first == exit_side ? b : -b;
}

int BasePolygon::side_of_point(Vec2 p, double tol) const {
  for (int j = 1; j <= sides(); ++j) {
    Vec2 a = side_start(j);
    Vec2 d = side_end(j) - a;
    double len = d.norm();
    double dist = cross(d, p - a) / len;
    double t = dot(p - a, d) / (len * len);
    if (std::abs(dist) <= tol && t >= -tol && t <= 1.0 + tol) return j;
  }
  return 0;
}

double BasePolygon::side_param(int j, Vec2 p) const {
  Vec2 a = side_start(j);
  Vec2 d = side_end(j) - a;
  return dot(p - a, d) / dot(d, d);
}

Vec2 BasePolygon::side_point(int j, double t) const {
  return side_start(j) + (side_end(j) - side_start(j)) * t;
}

Vec2 BasePolygon::identify(int j, Vec2 p) const {
  return side_point(partner(j), 1.0 - side_param(j, p));
}

Rigid BasePolygon::gluing_into(int j) const {
  int k = partner(j);
  return Rigid::mapping(side_start(k), side_end(k), side_end(j), side_start(j));
}

bool BasePolygon::strictly_inside(Vec2 p, double tol) const {
  for (int j = 1; j <= sides(); ++j)
    if (cross(side_end(j) - side_start(j), p - side_start(j)) / side_length() <= tol) return false;
  return true;
}

bool BasePolygon::near_corner(Vec2 p, double tol) const {
  for (int k = 0; k < sides(); ++k)
    if ((p - corner(k)).norm() <= tol) return true;
  return false;
}

double BasePolygon::kappa(int signed_bridge) const {
  double k = (genus_ + 1.0) / (2.0 * genus_);
  return signed_bridge > 0 ? k : -k;
}

double BasePolygon::sweep(int signed_bridge) const {
  return std::numbers::pi * 2.0 * kappa(signed_bridge);
}

}  // namespace surfising
