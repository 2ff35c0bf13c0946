#pragma once

#include <vector>

#include "surfising/embedded_graph.hpp"
#include "surfising/multipoly.hpp"

namespace surfising {

/// E(G, x) = sum over even edge sets of prod x_e, by Gray-code enumeration of
/// all 2^|E| subsets. Throws std::length_error above 24 edges.
MultiPoly brute_even_sets(const EmbeddedGraph& g);

/// P(G, x) = sum over perfect matchings of prod x_e, by backtracking on the
/// lowest uncovered vertex. Throws std::length_error above 64 edges.
MultiPoly brute_perfect_matchings(const EmbeddedGraph& g);

/// Perfect matchings as sorted edge lists, in the backtracking order.
std::vector<std::vector<int>> list_perfect_matchings(const EmbeddedGraph& g);

/// sum over sigma: V -> {+1, -1} of exp(beta sum_e J_e sigma_u sigma_v).
/// Throws std::length_error above 20 vertices.
double brute_ising(const EmbeddedGraph& g, const std::vector<double>& couplings, double beta);

}  // namespace surfising
