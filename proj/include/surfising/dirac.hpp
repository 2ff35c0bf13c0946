#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "surfising/embedded_graph.hpp"
#include "surfising/f2.hpp"
#include "surfising/multipoly.hpp"

namespace surfising {

/// Directed transition graph T_G on the darts of a bipartite graph.
struct TransitionGraph {
  std::vector<int> w_nodes;  // darts from black to white
  std::vector<int> b_nodes;  // darts from white to black
  std::vector<std::pair<int, int>> arcs;          // (o, o') with head(o) = tail(o')
  std::vector<std::pair<int, int>> reduced_arcs;  // arcs without (o, o^-1)
  int num_nodes() const { return static_cast<int>(w_nodes.size() + b_nodes.size()); }
};

TransitionGraph build_transition_graph(const EmbeddedGraph& g);
/// True iff every arc joins W^o and B^o.
bool is_bipartite_transition_graph(const EmbeddedGraph& g, const TransitionGraph& t);

struct DiracMatrices {
  F2Vec s;
  Eigen::MatrixXcd delta2;  // 2|E| x 2|E|, all arcs of T_G
  Eigen::MatrixXcd dirac;   // |V| x |V|
};

/// Dual lengths l(e*) read from the drawing; throws if any edge lacks one.
std::vector<double> dual_lengths(const EmbeddedGraph& g);

/// Delta_2(s): every entry of Delta(s) squared with x_e^2 -> l(e*), and the
/// Dirac matrix D(v, w) = l(e*) exp(i alpha) with alpha the direction of the
/// edge v -> w at v. Requires a bipartite critical simple graph with dual
/// lengths and no vertex at the cone point.
DiracMatrices build_delta2(const EmbeddedGraph& g, const F2Vec& s);

/// Delta_2(s) of g with the Dirac matrix of a second drawing of the same
/// graph, without any precondition check.
DiracMatrices build_delta2_unchecked(const EmbeddedGraph& g, const EmbeddedGraph& dirac_source, const F2Vec& s,
                                     const std::vector<double>& lengths);

Eigen::MatrixXcd dirac_matrix(const EmbeddedGraph& g, const std::vector<double>& lengths);

struct ProportionalityReport {
  bool holds = false;
  double spread = 0.0;               // max |Delta_2(o, .) - c(o) D(v, .)| over rows
  double vertex_spread = 0.0;        // max ratio mismatch between rows entering one vertex
  std::vector<Complex> constants;    // c(o) per dart
  int worst_row = -1;
};

/// Each row o of Delta_2, o entering v, is c(o) times row v of D carried onto
/// the darts leaving v. Rows entering one vertex are then multiples of each
/// other.
ProportionalityReport check_row_proportionality(const EmbeddedGraph& g, const DiracMatrices& m, double tol = 1e-9);

/// Delta_2 rebuilt from D: row v copied once per dart entering v, scaled by
/// c(o), and spread over the 2|E| dart columns with zeros elsewhere.
Eigen::MatrixXcd reconstruct_delta2_from_dirac(const EmbeddedGraph& g, const Eigen::MatrixXcd& dirac,
                                               const std::vector<Complex>& constants);

/// |D 1|_inf, informational.
double constant_kernel_residual(const Eigen::MatrixXcd& dirac);

struct FermionicCheck {
  Complex alternating_sum;  // sum_k (-1)^k Tr(wedge^k A)
  Complex det;              // det(I - A)
  double rel_error = 0.0;
};

/// Tr(wedge^k A) = e_k(eigenvalues) from the power traces by Newton's
/// identities, compared with det(I - A).
FermionicCheck fermionic_expansion_check(const Eigen::MatrixXcd& a);

struct RegularizedDet {
  Complex product;   // product of eigenvalues with |lambda| > eps
  Complex via_zeta;  // exp(-zeta'(0)) with zeta(s) = sum lambda^-s
  int kept = 0;
};

RegularizedDet regularized_det_finite(const Eigen::MatrixXcd& t, double eps = 1e-8);

}  // namespace surfising
