#include "surfising/transition.hpp"

#include <numbers>
#include <stdexcept>

namespace surfising {

Eigen::MatrixXcd TransitionMatrix::numeric(const std::vector<Complex>& values) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  for (const auto& t : entries) m(t.row, t.col) += t.phase * values[static_cast<std::size_t>(t.edge)];
  return m;
}

double transition_angle(const EmbeddedGraph& g, int o, int o1) {
  if (o1 == EmbeddedGraph::reverse(o)) return std::numbers::pi;
  return turn_angle(g.geometry(o).in_dir, g.geometry(o1).out_dir);
}

double y0(const EmbeddedGraph& g, int o, int o1) {
  const auto& geo = g.geometry(o);
  return (transition_angle(g, o, o1) + geo.internal_turn) / (2.0 * std::numbers::pi) - geo.kappa;
}

TransitionMatrix build_delta(const EmbeddedGraph& g, const F2Vec& s) {
  if (s.dim() != 2 * g.genus()) throw std::invalid_argument("build_delta: spin index has wrong length");
  TransitionMatrix m;
  m.s = s;
  m.size = g.num_darts();
  for (int o = 0; o < g.num_darts(); ++o) {
    auto r = g.crossing_counts(EmbeddedGraph::edge_of(o));
    int sr = 0;
    for (std::size_t i = 0; i < r.size(); ++i) sr += s[static_cast<int>(i)] * r[i];
    double kappa = g.geometry(o).kappa;
    for (int o1 : g.rotation(g.head(o))) {
      double ys = y0(g, o, o1) + (sr & 1);
      Complex phase = std::polar(1.0, std::numbers::pi * ys) * std::polar(1.0, std::numbers::pi * kappa);
      m.entries.push_back({o, o1, phase, EmbeddedGraph::edge_of(o1)});
    }
  }
  return m;
}

TransitionMatrix build_delta_prime(const TransitionMatrix& delta) {
  TransitionMatrix m = delta;
  m.reduced = true;
  m.entries.clear();
  for (const auto& t : delta.entries)
    if (t.col != EmbeddedGraph::reverse(t.row)) m.entries.push_back(t);
  return m;
}

}  // namespace surfising
