#include "surfising/dirac.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "surfising/critical.hpp"
#include "surfising/transition.hpp"

namespace surfising {

namespace {

bool black_to_white(const EmbeddedGraph& g, int d) { return g.color(g.tail(d)) == Color::black; }

void require_simple(const EmbeddedGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> seen;
    for (int d : g.rotation(v)) {
      int w = g.head(d);
      if (w == v) throw std::invalid_argument("Dirac matrix needs a graph without loops");
      for (int x : seen)
        if (x == w) throw std::invalid_argument("Dirac matrix needs a graph without parallel edges");
      seen.push_back(w);
    }
  }
}

}  // namespace

TransitionGraph build_transition_graph(const EmbeddedGraph& g) {
  if (!g.bipartite()) throw std::invalid_argument("build_transition_graph: graph has no bipartition");
  TransitionGraph t;
  for (int d = 0; d < g.num_darts(); ++d) (black_to_white(g, d) ? t.w_nodes : t.b_nodes).push_back(d);
  for (int o = 0; o < g.num_darts(); ++o)
    for (int o1 : g.rotation(g.head(o))) {
      t.arcs.emplace_back(o, o1);
      if (o1 != EmbeddedGraph::reverse(o)) t.reduced_arcs.emplace_back(o, o1);
    }
  return t;
}

bool is_bipartite_transition_graph(const EmbeddedGraph& g, const TransitionGraph& t) {
  for (auto [o, o1] : t.arcs)
    if (black_to_white(g, o) == black_to_white(g, o1)) return false;
  return true;
}

std::vector<double> dual_lengths(const EmbeddedGraph& g) {
  std::vector<double> l;
  for (const Edge& e : g.edges()) {
    if (!e.dual_length) throw std::invalid_argument("edge " + e.id + " has no dual length");
    l.push_back(*e.dual_length);
  }
  return l;
}

Eigen::MatrixXcd dirac_matrix(const EmbeddedGraph& g, const std::vector<double>& lengths) {
  require_simple(g);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(g.num_vertices(), g.num_vertices());
  for (int o = 0; o < g.num_darts(); ++o)
    d(g.tail(o), g.head(o)) =
        std::polar(lengths[static_cast<std::size_t>(EmbeddedGraph::edge_of(o))], g.geometry(o).out_dir.angle());
  return d;
}

DiracMatrices build_delta2_unchecked(const EmbeddedGraph& g, const EmbeddedGraph& dirac_source, const F2Vec& s,
                                     const std::vector<double>& lengths) {
  DiracMatrices m;
  m.s = s;
  m.delta2 = Eigen::MatrixXcd::Zero(g.num_darts(), g.num_darts());
  for (const auto& t : build_delta(g, s).entries)
    m.delta2(t.row, t.col) += t.phase * t.phase * lengths[static_cast<std::size_t>(t.edge)];
  m.dirac = dirac_matrix(dirac_source, lengths);
  return m;
}

DiracMatrices build_delta2(const EmbeddedGraph& g, const F2Vec& s) {
  if (!g.bipartite()) throw std::invalid_argument("build_delta2: graph has no bipartition");
  auto crit = is_critical_embedding(g);
  if (!crit.critical) throw std::invalid_argument("build_delta2: embedding is not critical: " + crit.diagnostic);
  if (!vertices_at_cone_point(g).empty()) throw std::invalid_argument("build_delta2: a vertex sits at the cone point");
  return build_delta2_unchecked(g, g, s, dual_lengths(g));
}

ProportionalityReport check_row_proportionality(const EmbeddedGraph& g, const DiracMatrices& m, double tol) {
  ProportionalityReport rep;
  rep.constants.assign(static_cast<std::size_t>(g.num_darts()), Complex{});
  for (int o = 0; o < g.num_darts(); ++o) {
    int v = g.head(o);
    Complex c{};
    for (int o1 : g.rotation(v)) {
      Complex dv = m.dirac(v, g.head(o1));
      if (std::abs(dv) > 0.0) {
        c = m.delta2(o, o1) / dv;
        break;
      }
    }
    rep.constants[static_cast<std::size_t>(o)] = c;
    double dev = 0.0;
    for (int o1 = 0; o1 < g.num_darts(); ++o1) {
      Complex expect = g.tail(o1) == v ? c * m.dirac(v, g.head(o1)) : Complex{};
      dev = std::max(dev, std::abs(m.delta2(o, o1) - expect));
    }
    if (dev > rep.spread) {
      rep.spread = dev;
      rep.worst_row = o;
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> in;
    for (int d : g.rotation(v)) in.push_back(EmbeddedGraph::reverse(d));
    for (std::size_t a = 1; a < in.size(); ++a) {
      int o1 = in[0], o2 = in[a];
      Complex c1 = rep.constants[static_cast<std::size_t>(o1)];
      Complex c2 = rep.constants[static_cast<std::size_t>(o2)];
      if (c1 == Complex{}) continue;
      for (int col : g.rotation(v))
        rep.vertex_spread = std::max(rep.vertex_spread, std::abs(m.delta2(o2, col) - (c2 / c1) * m.delta2(o1, col)));
    }
  }
  rep.holds = rep.spread <= tol && rep.vertex_spread <= tol;
  return rep;
}

Eigen::MatrixXcd reconstruct_delta2_from_dirac(const EmbeddedGraph& g, const Eigen::MatrixXcd& dirac,
                                               const std::vector<Complex>& constants) {
  if (dirac.rows() != g.num_vertices() || dirac.cols() != g.num_vertices())
    throw std::invalid_argument("reconstruct_delta2_from_dirac: Dirac matrix has the wrong shape");
  if (static_cast<int>(constants.size()) != g.num_darts())
    throw std::invalid_argument("reconstruct_delta2_from_dirac: one constant per dart is required");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(g.num_darts(), g.num_darts());
  for (int o = 0; o < g.num_darts(); ++o) {
    int v = g.head(o);
    for (int o1 : g.rotation(v)) out(o, o1) = constants[static_cast<std::size_t>(o)] * dirac(v, g.head(o1));
  }
  return out;
}

double constant_kernel_residual(const Eigen::MatrixXcd& dirac) {
  return (dirac * Eigen::VectorXcd::Ones(dirac.cols())).cwiseAbs().maxCoeff();
}

FermionicCheck fermionic_expansion_check(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Complex> p(static_cast<std::size_t>(n) + 1, Complex{});
  Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(n, n);
  for (int j = 1; j <= n; ++j) {
    pw = pw * a;
    p[static_cast<std::size_t>(j)] = pw.trace();
  }
  std::vector<Complex> e(static_cast<std::size_t>(n) + 1, Complex{});
  e[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    Complex sum{};
    for (int j = 1; j <= k; ++j)
      sum += (j % 2 ? 1.0 : -1.0) * e[static_cast<std::size_t>(k - j)] * p[static_cast<std::size_t>(j)];
    e[static_cast<std::size_t>(k)] = sum / static_cast<double>(k);
  }
  FermionicCheck r;
  for (int k = 0; k <= n; ++k) r.alternating_sum += (k % 2 ? -1.0 : 1.0) * e[static_cast<std::size_t>(k)];
  r.det = (Eigen::MatrixXcd::Identity(n, n) - a).determinant();
  r.rel_error = std::abs(r.alternating_sum - r.det) / std::max(1.0, std::abs(r.det));
  return r;
}

RegularizedDet regularized_det_finite(const Eigen::MatrixXcd& t, double eps) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(t, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("regularized_det_finite: eigenvalue solver failed");
  RegularizedDet r;
  r.product = 1.0;
  Complex zeta_prime{};
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    Complex lam = es.eigenvalues()(i);
    if (std::abs(lam) <= eps) continue;
    r.product *= lam;
    zeta_prime -= std::log(lam);  // d/ds lambda^-s at s = 0
    ++r.kept;
  }
  r.via_zeta = std::exp(-zeta_prime);
  return r;
}

}  // namespace surfising
