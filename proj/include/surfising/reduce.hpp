#pragma once

#include <vector>

#include "surfising/embedded_graph.hpp"

namespace surfising {

/// G' with all degrees in {2, 4} together with the substitution that carries
/// E(G', z) to E(G, x): z_e = 0 on Z, z_e = 1 on O, z_e = x_{f(e)} otherwise.
struct ReducedGraphMap {
  EmbeddedGraph reduced;
  std::vector<int> zero_edges;  // Z
  std::vector<int> one_edges;   // O
  std::vector<int> f;           // reduced edge -> original edge, -1 on Z and O
  double offset = 0.0;          // drawing offset finally used

  bool is_identity() const { return zero_edges.empty() && one_edges.empty(); }
};

/// Step 1 pairs the odd vertices along a T-join of a spanning forest and draws
/// a path u-a-b-v beside every T-join edge {u,v}; its three edges go to Z.
/// Step 2 repeatedly detaches three consecutive edge ends of a vertex of even
/// degree above 4 onto a new vertex joined to it by a splitting edge in O.
/// New drawing pieces run at distance `offset` from existing ones; the offset
/// is halved until the drawing validates. Original edges keep their indices.
ReducedGraphMap reduce_degrees(const EmbeddedGraph& g, double offset = 0.0);

}  // namespace surfising
