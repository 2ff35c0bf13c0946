#pragma once

#include <vector>

#include "surfising/cycles.hpp"
#include "surfising/embedded_graph.hpp"
#include "surfising/f2.hpp"

namespace surfising {

/// Edge set as a list of edge indices; duplicates are rejected.
using EdgeSet = std::vector<int>;

/// r(A)_i = sum_{e in A} r_i(e).
std::vector<int> crossing_vector(const EmbeddedGraph& g, const EdgeSet& a);
bool is_even(const EmbeddedGraph& g, const EdgeSet& a);
/// r(A) mod 2 in the basis a_1, b_1, ..., a_g, b_g; throws if A is not even.
F2Vec homology_class(const EmbeddedGraph& g, const EdgeSet& a);
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

/// Splits an even set into edge-disjoint cycles using the non-crossing
/// transitions: at every vertex the ends of A, read anticlockwise from the
/// smallest dart, are paired as nested parentheses (i with 2k-1-i).
std::vector<Cycle> decompose_even_set(const EmbeddedGraph& g, const EdgeSet& a);

}  // namespace surfising
