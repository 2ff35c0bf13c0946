#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfising/cycles.hpp"
#include "surfising/embedded_graph.hpp"
#include "surfising/f2.hpp"
#include "surfising/multipoly.hpp"
#include "surfising/pfaffian.hpp"

namespace surfising {

/// Per-edge direction bit: 0 orients u -> v, 1 orients v -> u.
using Orientation = std::vector<int>;

/// Vertex order for Pfaffians and determinants: black before white, ascending
/// index within a color; plain index order without a bipartition.
std::vector<int> vertex_order(const EmbeddedGraph& g);

/// A(G, D)_{ij} = sum over edges e oriented i -> j of x_e minus the same over
/// edges oriented j -> i, rows and columns in vertex_order.
SquareMatrix<MultiPoly> skew_adjacency(const EmbeddedGraph& g, const Orientation& d);
SquareMatrix<Complex> skew_adjacency(const EmbeddedGraph& g, const Orientation& d, const std::vector<Complex>& x);

/// Number of edges of face f oriented against its boundary walk (the walk
/// keeps the face on its left, so these are the clockwise edges).
int clockwise_count(const EmbeddedGraph& g, const Orientation& d, int f);

/// Faces checked by the Kasteleyn condition: all faces, except the outer face
/// in genus 0.
std::vector<int> kasteleyn_faces(const EmbeddedGraph& g);
bool is_kasteleyn(const EmbeddedGraph& g, const Orientation& d);

/// Orients a spanning tree, then a spanning tree of the dual over the other
/// edges, leaves the remaining 2g edges as drawn, and fixes the dual tree edges
/// from the leaves towards the root face. Every face but the root is odd; the
/// root is odd as well when |V| is even. Throws if G is disconnected.
Orientation find_kasteleyn_orientation(const EmbeddedGraph& g);

/// Base orientation with every edge e reversed where eps . r(e) is odd.
Orientation shifted_orientation(const EmbeddedGraph& g, const Orientation& base, const F2Vec& eps);

struct DimerCombination {
  Orientation base;
  std::vector<F2Vec> shifts;           // eps per Pfaffian
  std::vector<MultiPoly> pfaffians;    // Pf A(G, D_eps)
  std::vector<double> coefficients;    // c_eps
  std::string rule;                    // how the coefficients were found
  MultiPoly combination;               // sum c_eps Pf A(G, D_eps)
  double residual = 0.0;               // max deviation from the target
  bool matched = false;
};

/// sum_i c_i Pf A(G, D_i).
MultiPoly dimer_pfaffian_combination(const EmbeddedGraph& g, const std::vector<Orientation>& orientations,
                                     const std::vector<double>& coefficients);

/// Finds coefficients c_eps for the 4^g shifted Kasteleyn orientations that
/// reproduce target. Tries 2^-g sigma (-1)^{Arf(q_{eps+delta})} for all delta
/// and sigma = +-1 first, then every sign pattern of +-2^-g.
DimerCombination find_dimer_combination(const EmbeddedGraph& g, const MultiPoly& target, double tol = 1e-9);

/// c(C) = (-1)^{|C|/2+1} prod_{C+} w / prod_{C-} w, where C+ holds the edges
/// traversed from black to white. C is a closed walk of darts.
Complex kasteleyn_curvature(const EmbeddedGraph& g, const std::vector<Complex>& w, const Cycle& c);

/// Boundary walk of face f as a cycle (face on the left).
Cycle face_cycle(const EmbeddedGraph& g, int f);

bool is_kasteleyn_flat(const EmbeddedGraph& g, const std::vector<Complex>& w, double tol = 1e-9);

/// D_B(w): rows black, columns white, entry sum of w(e) x_e.
SquareMatrix<MultiPoly> bipartite_matrix(const EmbeddedGraph& g, const std::vector<Complex>& w);

struct PropTwoReport {
  Complex t_m;
  Complex t_n;
  Complex curvature;
  bool holds = false;
};

/// Checks t(M) / t(N) = c(C) for C = M xor N, oriented so that the edges of M
/// run from black to white; t is read off the symbolic det D_B(w). Throws if
/// M xor N is not a single cycle.
PropTwoReport check_prop_two(const EmbeddedGraph& g, const std::vector<Complex>& w, const std::vector<int>& m,
                             const std::vector<int>& n, double tol = 1e-9);

/// The cycle M xor N traversed with M's edges from black to white.
Cycle alternating_cycle(const EmbeddedGraph& g, const std::vector<int>& m, const std::vector<int>& n);

struct Normalization {
  std::vector<Complex> multipliers;  // per vertex
  std::vector<Complex> weights;      // w'(e) = m(u) w(e) m(v), in {1, -1}
  Orientation orientation;           // +1 black -> white, -1 white -> black
  std::vector<int> tree_edges;
};

/// Vertex multiplications making every spanning-tree edge 1. Throws
/// std::domain_error if a non-tree edge does not land in {1, -1}, which is the
/// case exactly when a fundamental cycle has curvature outside {1, -1}.
Normalization normalize_to_simple_flat(const EmbeddedGraph& g, const std::vector<Complex>& w, double tol = 1e-9);

/// Applies w(e) -> m(u) w(e) m(v).
std::vector<Complex> multiply_vertices(const EmbeddedGraph& g, const std::vector<Complex>& w,
                                       const std::vector<Complex>& multipliers);

/// Weights +1 on edges oriented black -> white by d, -1 otherwise.
std::vector<Complex> weights_from_orientation(const EmbeddedGraph& g, const Orientation& d);

}  // namespace surfising
