#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "surfising/polygon.hpp"

namespace surfising {

enum class Color { white, black };

struct Vertex {
  std::string id;
  Vec2 pos;
};

/// A bridge traversal: polyline[index] is the exit point, polyline[index+1]
/// the entry point.
struct Jump {
  std::size_t index = 0;
  int exit_side = 0;
  int entry_side = 0;
  int bridge = 0;  // signed
};

struct Edge {
  std::string id;
  int u = 0;
  int v = 0;
  std::vector<Vec2> polyline;
  std::vector<int> crossings;
  std::string weight_name;  // empty: rendered as x<id>
  std::optional<double> weight_value;
  std::optional<double> dual_length;

  std::vector<Jump> jumps;  // derived

  bool is_loop() const { return u == v; }
};

/// Turning data of a directed edge drawn in the g-graph.
struct DartGeometry {
  Vec2 out_dir;          // unit direction leaving the tail
  Vec2 in_dir;           // unit direction arriving at the head
  double internal_turn;  // bends plus exterior bridge routes
  double kappa;          // sum of +-(g+1)/(2g) over bridge traversals
};

struct ValidationOptions {
  double tol = 1e-9;
  double angle_tol = 1e-9;
};

/// A graph drawn as a g-graph: vertices and polylines inside the base polygon,
/// bridge traversals recorded as jumps between glued boundary points.
///
/// Directed edges (darts) are numbered 2e + dir, dir 0 running u -> v. This
/// numbering is also the canonical order of directed edges.
class EmbeddedGraph {
 public:
  /// Validates every drawing invariant and throws std::invalid_argument on the
  /// first violation.
  static EmbeddedGraph build(int genus, std::vector<Vertex> vertices, std::vector<Edge> edges,
                             std::optional<std::vector<Color>> colors,
                             ValidationOptions opt = {});

  int genus() const { return genus_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::optional<BasePolygon>& polygon() const { return polygon_; }
  const std::optional<std::vector<Color>>& colors() const { return colors_; }
  bool bipartite() const { return colors_.has_value(); }
  Color color(int v) const { return (*colors_)[static_cast<std::size_t>(v)]; }
  const ValidationOptions& options() const { return options_; }

  static int dart(int e, int dir) { return 2 * e + dir; }
  static int edge_of(int d) { return d / 2; }
  static int dir_of(int d) { return d % 2; }
  static int reverse(int d) { return d ^ 1; }
  int tail(int d) const;
  int head(int d) const;
  const DartGeometry& geometry(int d) const { return geometry_[static_cast<std::size_t>(d)]; }
  /// Points of the dart's polyline in traversal order.
  std::vector<Vec2> dart_polyline(int d) const;

  /// Darts leaving v, sorted anticlockwise by their initial direction.
  const std::vector<int>& rotation(int v) const { return rotation_[static_cast<std::size_t>(v)]; }
  int rotation_index(int d) const { return rotation_index_[static_cast<std::size_t>(d)]; }
  int degree(int v) const { return static_cast<int>(rotation(v).size()); }

  /// r_i(e): number of traversals of bridge i (1-based index i-1).
  std::vector<int> crossing_counts(int e) const;

  /// Faces of the rotation system. Each face is the cyclic list of darts
  /// bounding it with the face on the left.
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_of_dart(int d) const { return face_of_dart_[static_cast<std::size_t>(d)]; }
  /// Dart following d along its face.
  int face_next(int d) const;

  /// Index of the outer face when genus is 0 (negative signed area), else -1.
  int outer_face() const { return outer_face_; }
  /// Signed area of a face in the plane; only meaningful for genus 0.
  double face_area(int f) const;

  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_edge(const std::string& id) const;
  std::string variable_name(int e) const;

  int components() const;

 private:
  void detect_jumps();
  void derive();
  void validate() const;
  void build_faces();

  int genus_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<std::vector<Color>> colors_;
  std::optional<BasePolygon> polygon_;
  ValidationOptions options_;

  std::vector<DartGeometry> geometry_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> rotation_index_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_dart_;
  int outer_face_ = -1;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
};

}  // namespace surfising
