#pragma once

#include <vector>

#include <Eigen/Dense>

#include "surfising/embedded_graph.hpp"
#include "surfising/f2.hpp"
#include "surfising/multipoly.hpp"

namespace surfising {

/// Nonzero entry d_s(o, o') = phase * x_{e(o')}.
struct TransitionEntry {
  int row = 0;
  int col = 0;
  Complex phase;
  int edge = 0;  // variable of the entry: the edge of the column dart
};

/// Transition matrix over directed edges, stored by its nonzero entries in
/// row-major order.
struct TransitionMatrix {
  F2Vec s;
  int size = 0;
  bool reduced = false;  // reversal entries (o, o^-1) removed
  std::vector<TransitionEntry> entries;

  /// Dense numeric matrix with x_e replaced by values[e].
  Eigen::MatrixXcd numeric(const std::vector<Complex>& values) const;
};

/// Turning angle of the transition from o into o', in (-pi, pi]; a reversal
/// counts as +pi.
double transition_angle(const EmbeddedGraph& g, int o, int o1);

/// y_0(o, o') in turns, so that the product of the phases
/// exp(i pi y_s(o, o')) exp(i pi kappa(o)) around a closed walk equals
/// (-1)^{rot_s}.
double y0(const EmbeddedGraph& g, int o, int o1);

/// Delta(s)(x): entries at every pair with head(o) = tail(o').
TransitionMatrix build_delta(const EmbeddedGraph& g, const F2Vec& s);
/// Delta'(s)(x): Delta with the reversal entries removed.
TransitionMatrix build_delta_prime(const TransitionMatrix& delta);

}  // namespace surfising
