#pragma once

#include <string>
#include <vector>

#include "surfising/embedded_graph.hpp"

namespace surfising {

/// Face boundary unfolded into one chart: across a bridge the chart continues
/// through the side gluing, so the face appears as a plane polygon.
struct DevelopedFace {
  std::vector<Vec2> corners;   // images of the vertices, one per boundary dart
  std::vector<Vec2> outline;   // all polyline points in order
  double closing_error = 0.0;  // distance between the walk's start and end images
};

DevelopedFace develop_face(const EmbeddedGraph& g, int f);

struct CriticalityReport {
  bool critical = false;
  double radius = 0.0;         // common radius (of the first checked face)
  double spread = 0.0;         // max - min circumradius
  int first_bad_face = -1;
  std::string diagnostic;
  std::vector<int> faces;      // faces checked
  std::vector<double> radii;   // per checked face
  std::vector<Vec2> centers;   // per checked face, in its developed chart
};

/// True iff every face (all but the outer face in genus 0) is inscribed in a
/// circle, the radii agree within tol and every circumcenter lies in the
/// closed developed face. Throws std::invalid_argument on a face whose
/// vertices are collinear or fewer than three.
CriticalityReport is_critical_embedding(const EmbeddedGraph& g, double tol = 1e-9);

/// Length of edge e measured along its drawing.
double edge_length(const EmbeddedGraph& g, int e);

/// l(e*) = 2 sqrt(r^2 - |e|^2 / 4) for radius r, per edge.
std::vector<double> isoradial_dual_lengths(const EmbeddedGraph& g, double radius);

/// Vertices within tol of the cone point (the corners of the base polygon).
std::vector<int> vertices_at_cone_point(const EmbeddedGraph& g, double tol = 1e-6);

}  // namespace surfising
