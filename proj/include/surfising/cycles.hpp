#pragma once

#include <string>
#include <vector>

#include "surfising/embedded_graph.hpp"
#include "surfising/f2.hpp"

namespace surfising {

/// Circular sequence of darts. A prime reduced cycle has head(o_i) =
/// tail(o_{i+1}), o_{i+1} != o_i^{-1} cyclically, and is not a proper power.
using Cycle = std::vector<int>;

bool is_closed_walk(const EmbeddedGraph& g, const Cycle& c);
bool is_prime_reduced(const EmbeddedGraph& g, const Cycle& c);
Cycle inverse(const Cycle& c);
/// Lexicographically least rotation of c.
Cycle least_rotation(const Cycle& c);
/// Least rotation over c and its inverse.
Cycle canonical(const Cycle& c);

/// One canonical representative per class {p, p^-1} with |p| <= max_len,
/// sorted by length and then lexicographically.
std::vector<Cycle> enumerate_prime_reduced_cycles(const EmbeddedGraph& g, int max_len);

/// r(p) counted with multiplicity, length 2g.
std::vector<int> cycle_crossing_vector(const EmbeddedGraph& g, const Cycle& c);
F2Vec cycle_class(const EmbeddedGraph& g, const Cycle& c);

/// Pairs of intersecting chords at the vertices, edges reused by c being
/// resolved into parallel tracks (the k-th traversal uses the k-th track).
int chord_crossings(const EmbeddedGraph& g, const Cycle& c);
/// Self-intersections of the drawn cycle p^g: chord crossings plus the
/// crossings in the squares where bridges 2i-1 and 2i overlap.
int self_intersections(const EmbeddedGraph& g, const Cycle& c);

/// Total turning of the drawn cycle in radians.
double total_turning(const EmbeddedGraph& g, const Cycle& c);
/// Turning number mod 2; throws std::runtime_error when the turning is not
/// within 1e-6 of a multiple of 2*pi.
int rot0(const EmbeddedGraph& g, const Cycle& c);
int rot_s(const EmbeddedGraph& g, const Cycle& c, const F2Vec& s);

/// rot_s(p^g) == 1 + chord_crossings(p) + q_s([p]) mod 2 for an edge-simple p.
bool check_theorem_gr(const EmbeddedGraph& g, const Cycle& c, const F2Vec& s);
/// Number of spin indices s for which check_theorem_gr fails; the
/// spin-independent parts are computed once.
int theorem_gr_failures(const EmbeddedGraph& g, const Cycle& c);

/// "(3,+) (5,-)": edge id and direction (+ from u to v) per dart.
std::string dump_cycle(const EmbeddedGraph& g, const Cycle& c);

}  // namespace surfising
