#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfising/dense_ring.hpp"
#include "surfising/embedded_graph.hpp"
#include "surfising/multipoly.hpp"
#include "surfising/quadform.hpp"
#include "surfising/reduce.hpp"
#include "surfising/transition.hpp"

namespace surfising {

/// Edge variables as seen by a determinant: x_e -> scale[e] * y_{var[e]}, with
/// var[e] = -1 meaning x_e = 0.
struct Specialization {
  int nvars = 0;
  std::vector<int> var;
  std::vector<Complex> scale;

  /// x_e -> y_e.
  static Specialization identity(int num_edges);
  /// x_e -> t for every edge.
  static Specialization univariate(int num_edges);
  /// x_e -> c_e t with fixed pseudo-random complex c_e of modulus in [0.5, 1].
  static Specialization random_univariate(int num_edges, unsigned seed);
};

enum class RingPolicy { automatic, graded, squarefree };

RingPolicy parse_ring_policy(const std::string& name);
std::string to_string(RingPolicy policy);
std::string ring_name(const DenseRing& ring);

/// Ring for a determinant of a size x size matrix in nvars variables up to
/// degree cap. The automatic policy keeps the full graded ring while the
/// Faddeev-LeVerrier work matrices fit in about 1.5 GB and otherwise uses the
/// squarefree quotient, which preserves every multilinear coefficient.
DenseRing make_ring(int nvars, int cap, int size, RingPolicy policy);

/// det(I - A) in the ring by the Faddeev-LeVerrier recurrence
/// M_1 = I, c_k = -tr(A M_k) / k, M_{k+1} = A M_k + c_k I,
/// which needs only scalar divisions. Entries of A are homogeneous of degree
/// one, so c_k vanishes beyond the ring's degree and the recurrence stops
/// there.
DenseRing::Vec ihara_det_dense(const DenseRing& ring, const TransitionMatrix& a, const Specialization& spec);

/// det(I - Delta') in the variables x_e of the matrix, truncated at cap.
MultiPoly ihara_selberg_det(const TransitionMatrix& dprime, int cap);

/// prod over prime reduced cycles p with |p| <= L of (1 - (-1)^{rot_s(p)} x^p),
/// both members of each inverse pair included, expanded in the ring.
DenseRing::Vec truncated_cycle_product_dense(const EmbeddedGraph& g, const F2Vec& s, int max_len,
                                             const DenseRing& ring, const Specialization& spec);
MultiPoly truncated_cycle_product(const EmbeddedGraph& g, const F2Vec& s, int max_len);

/// The square root of det(I - Delta'(s)) with constant term 1, up to cap.
MultiPoly feynman(const EmbeddedGraph& g, const F2Vec& s, int cap);

struct IsingOptions {
  std::optional<int> cap;  // default |E(G)|
  SignRule sign_rule = SignRule::arf;
  bool univariate = false;
  int threads = 1;
  double tolerance = 1e-6;
  RingPolicy ring = RingPolicy::automatic;
};

struct SpinReport {
  F2Vec s;
  int sign_exponent = 0;
  double sqrt_deviation = 0.0;  // max |F^2 - det| up to the cap
  std::size_t det_terms = 0;
  std::size_t feynman_terms = 0;
};

struct IsingResult {
  MultiPoly raw;      // after substitution, before snapping
  MultiPoly snapped;  // nearest Gaussian integers
  double residual = 0.0;
  bool ok = false;  // residual below tolerance
  int cap = 0;
  bool univariate = false;
  std::string ring;
  int reduced_edges = 0;
  int zero_edges = 0;
  int one_edges = 0;
  std::vector<SpinReport> spins;
};

/// E(G, x) = 2^-g sum_s (-1)^{sign(s)} F(Delta(s)) computed on the reduced graph
/// G' and carried back by Z -> 0, O -> 1. In univariate mode every original
/// edge variable is t (variable 0).
IsingResult ising_generating_function(const EmbeddedGraph& g, const IsingOptions& opt = {});

/// Z = 2^|V| prod_e cosh(beta J_e) E(G, tanh(beta J_e)).
double ising_partition_from_generating(const EmbeddedGraph& g, const MultiPoly& e_poly,
                                       const std::vector<double>& couplings, double beta);

struct FzReport {
  F2Vec s;
  int max_len = 0;
  std::string ring;
  bool univariate = false;
  std::size_t cycles = 0;
  double max_deviation = 0.0;
};

/// Compares the truncated cycle product with det(I - Delta'(s)) up to degree
/// max_len for every spin index. Graphs whose multivariate ring would be too
/// large use a random univariate specialization.
std::vector<FzReport> verify_foata_zeilberger(const EmbeddedGraph& g, int max_len,
                                              RingPolicy policy = RingPolicy::automatic);

struct SqrtReport {
  F2Vec s;
  int cap = 0;
  std::string ring;
  bool univariate = false;
  double max_deviation = 0.0;
};

/// Checks F(Delta(s))^2 = det(I - Delta'(s)) up to cap (default |E|) for every s.
std::vector<SqrtReport> verify_square_root(const EmbeddedGraph& g, std::optional<int> cap = std::nullopt);

}  // namespace surfising
