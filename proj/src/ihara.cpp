#include "surfising/ihara.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <stdexcept>

#include "surfising/cycles.hpp"

namespace surfising {

Specialization Specialization::identity(int num_edges) {
  Specialization s;
  s.nvars = num_edges;
  for (int e = 0; e < num_edges; ++e) {
    s.var.push_back(e);
    s.scale.push_back(1.0);
  }
  return s;
}

Specialization Specialization::univariate(int num_edges) {
  Specialization s;
  s.nvars = 1;
  s.var.assign(static_cast<std::size_t>(num_edges), 0);
  s.scale.assign(static_cast<std::size_t>(num_edges), 1.0);
  return s;
}

Specialization Specialization::random_univariate(int num_edges, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> mod(0.5, 1.0);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  Specialization s = univariate(num_edges);
  for (auto& c : s.scale) {
    double r = mod(rng);
    c = std::polar(r, arg(rng));
  }
  return s;
}

RingPolicy parse_ring_policy(const std::string& name) {
  if (name == "auto") return RingPolicy::automatic;
  if (name == "graded") return RingPolicy::graded;
  if (name == "squarefree") return RingPolicy::squarefree;
  throw std::invalid_argument("unknown ring policy '" + name + "' (auto|graded|squarefree)");
}

std::string to_string(RingPolicy policy) {
  switch (policy) {
    case RingPolicy::automatic:
      return "auto";
    case RingPolicy::graded:
      return "graded";
    case RingPolicy::squarefree:
      return "squarefree";
  }
  return "auto";
}

std::string ring_name(const DenseRing& ring) {
  return std::string(ring.kind() == DenseRing::Kind::graded ? "graded" : "squarefree") + "(" +
         std::to_string(ring.nvars()) + " vars, degree " + std::to_string(ring.max_degree()) + ")";
}

namespace {

constexpr double kWorkBytes = 1.5e9;

double work_bytes(int size, std::size_t ring_size) {
  return static_cast<double>(size) * size * static_cast<double>(ring_size) * 32.0;
}

/// Darts whose edge variable is not specialized to zero.
std::vector<int> active_darts(const TransitionMatrix& a, const Specialization& spec) {
  std::vector<char> zero_col(static_cast<std::size_t>(a.size), 0);
  for (int d = 0; d < a.size; ++d) zero_col[static_cast<std::size_t>(d)] = spec.var[static_cast<std::size_t>(d / 2)] < 0;
  std::vector<int> act;
  for (int d = 0; d < a.size; ++d)
    if (!zero_col[static_cast<std::size_t>(d)]) act.push_back(d);
  return act;
}

/// dst += c * y_v * src over the entries of src of degree below `limit_deg`.
void add_shifted(const DenseRing& ring, const Complex* src, Complex* dst, int v, Complex c, std::size_t limit) {
  if (v < 0) return;
  for (std::size_t i = 0; i < limit; ++i) {
    if (src[i] == Complex{}) continue;
    std::int64_t t = ring.times_var(v, i);
    if (t >= 0) dst[t] += c * src[i];
  }
}

DenseRing::Vec combine_monomial(const DenseRing& ring, const DenseRing::Vec& f, const std::vector<int>& vars, Complex w) {
  // f * (1 - w * prod y_vars)
  DenseRing::Vec out = f;
  DenseRing::Vec cur = f;
  for (int v : vars) {
    DenseRing::Vec next = ring.zero();
    add_shifted(ring, cur.data(), next.data(), v, 1.0, ring.size());
    cur.swap(next);
  }
  for (std::size_t i = 0; i < ring.size(); ++i) out[i] -= w * cur[i];
  return out;
}

}  // namespace

DenseRing make_ring(int nvars, int cap, int size, RingPolicy policy) {
  std::size_t gsize = DenseRing::graded_size(nvars, cap);
  bool graded_fits = gsize <= 2'000'000 && work_bytes(size, gsize) <= kWorkBytes;
  if (policy == RingPolicy::graded || (policy == RingPolicy::automatic && graded_fits))
    return DenseRing::graded(nvars, cap, std::max<std::size_t>(gsize, 2'000'000));
  if (nvars <= 26 && work_bytes(size, std::size_t{1} << nvars) <= kWorkBytes)
    return DenseRing::squarefree(nvars, cap);
  throw std::length_error("determinant of size " + std::to_string(size) + " in " + std::to_string(nvars) +
                          " variables up to degree " + std::to_string(cap) +
                          " does not fit in memory; use the univariate specialization");
}

DenseRing::Vec ihara_det_dense(const DenseRing& ring, const TransitionMatrix& a, const Specialization& spec) {
  std::vector<int> act = active_darts(a, spec);
  int n = static_cast<int>(act.size());
  std::vector<int> pos(static_cast<std::size_t>(a.size), -1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(act[static_cast<std::size_t>(i)])] = i;

  struct Entry {
    int col;
    int var;
    Complex coef;
  };
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n));
  for (const auto& t : a.entries) {
    int r = pos[static_cast<std::size_t>(t.row)];
    int c = pos[static_cast<std::size_t>(t.col)];
    if (r < 0 || c < 0) continue;
    auto e = static_cast<std::size_t>(t.edge);
    rows[static_cast<std::size_t>(r)].push_back({c, spec.var[e], t.phase * spec.scale[e]});
  }

  const std::size_t sz = ring.size();
  auto cell = [&](std::vector<Complex>& m, int r, int c) {
    return m.data() + (static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)) * sz;
  };
  DenseRing::Vec det = ring.one();
  if (n == 0) return det;
  std::vector<Complex> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * sz, Complex{});
  std::vector<Complex> am(m.size(), Complex{});
  for (int i = 0; i < n; ++i) cell(m, i, i)[0] = 1.0;

  int steps = std::min(n, ring.max_degree());
  for (int k = 1; k <= steps; ++k) {
    std::size_t limit = ring.kind() == DenseRing::Kind::graded ? DenseRing::graded_size(ring.nvars(), k - 1) : sz;
    std::fill(am.begin(), am.end(), Complex{});
    for (int r = 0; r < n; ++r)
      for (const auto& e : rows[static_cast<std::size_t>(r)])
        for (int c = 0; c < n; ++c) add_shifted(ring, cell(m, e.col, c), cell(am, r, c), e.var, e.coef, limit);
    DenseRing::Vec ck = ring.zero();
    for (int r = 0; r < n; ++r) {
      const Complex* d = cell(am, r, r);
      for (std::size_t i = 0; i < sz; ++i) ck[i] += d[i];
    }
    for (auto& x : ck) x *= -1.0 / k;
    for (std::size_t i = 0; i < sz; ++i) det[i] += ck[i];
    m.swap(am);
    for (int r = 0; r < n; ++r) {
      Complex* d = cell(m, r, r);
      for (std::size_t i = 0; i < sz; ++i) d[i] += ck[i];
    }
  }
  return det;
}

MultiPoly ihara_selberg_det(const TransitionMatrix& dprime, int cap) {
  int nvars = 0;
  for (const auto& t : dprime.entries) nvars = std::max(nvars, t.edge + 1);
  nvars = std::max(nvars, dprime.size / 2);
  DenseRing ring = make_ring(nvars, cap, dprime.size, RingPolicy::automatic);
  return ring.to_poly(ihara_det_dense(ring, dprime, Specialization::identity(nvars))).with_cap(cap);
}

DenseRing::Vec truncated_cycle_product_dense(const EmbeddedGraph& g, const F2Vec& s, int max_len,
                                             const DenseRing& ring, const Specialization& spec) {
  DenseRing::Vec f = ring.one();
  for (const Cycle& p : enumerate_prime_reduced_cycles(g, max_len)) {
    double sign = rot_s(g, p, s) ? -1.0 : 1.0;
    std::vector<int> vars;
    Complex w = sign;
    bool zero = false;
    for (int d : p) {
      auto e = static_cast<std::size_t>(EmbeddedGraph::edge_of(d));
      if (spec.var[e] < 0) zero = true;
      vars.push_back(spec.var[e]);
      w *= spec.scale[e];
    }
    if (zero) continue;
    // p and its inverse carry the same weight.
    f = combine_monomial(ring, f, vars, w);
    f = combine_monomial(ring, f, vars, w);
  }
  return f;
}

MultiPoly truncated_cycle_product(const EmbeddedGraph& g, const F2Vec& s, int max_len) {
  DenseRing ring = DenseRing::graded(g.num_edges(), max_len);
  return ring.to_poly(truncated_cycle_product_dense(g, s, max_len, ring, Specialization::identity(g.num_edges())));
}

MultiPoly feynman(const EmbeddedGraph& g, const F2Vec& s, int cap) {
  TransitionMatrix dp = build_delta_prime(build_delta(g, s));
  DenseRing ring = make_ring(g.num_edges(), cap, dp.size, RingPolicy::automatic);
  auto det = ihara_det_dense(ring, dp, Specialization::identity(g.num_edges()));
  return ring.to_poly(ring.sqrt(det));
}

IsingResult ising_generating_function(const EmbeddedGraph& g, const IsingOptions& opt) {
  const int m = g.num_edges();
  const int cap = opt.cap.value_or(m);
  ReducedGraphMap red = reduce_degrees(g);
  const EmbeddedGraph& gp = red.reduced;
  const int nO = static_cast<int>(red.one_edges.size());

  Specialization spec;
  spec.var.assign(static_cast<std::size_t>(gp.num_edges()), -1);
  spec.scale.assign(static_cast<std::size_t>(gp.num_edges()), 1.0);
  for (int e = 0; e < gp.num_edges(); ++e)
    if (red.f[static_cast<std::size_t>(e)] >= 0)
      spec.var[static_cast<std::size_t>(e)] = opt.univariate ? 0 : red.f[static_cast<std::size_t>(e)];
  for (int k = 0; k < nO; ++k)
    spec.var[static_cast<std::size_t>(red.one_edges[static_cast<std::size_t>(k)])] = opt.univariate ? 1 : m + k;
  int base_vars = opt.univariate ? 1 : m;
  spec.nvars = opt.univariate ? base_vars + (nO > 0 ? 1 : 0) : m + nO;
  int one_var0 = opt.univariate ? 1 : m;

  const int internal_cap = cap + nO;
  int active = 0;
  for (int e = 0; e < gp.num_edges(); ++e) active += spec.var[static_cast<std::size_t>(e)] >= 0 ? 2 : 0;
  DenseRing ring = make_ring(spec.nvars, internal_cap, active, opt.ring);

  std::vector<F2Vec> spins = spin_indices(g.genus());
  std::vector<DenseRing::Vec> feyn(spins.size());
  std::vector<SpinReport> reports(spins.size());
  auto work = [&](std::size_t i) {
    TransitionMatrix dp = build_delta_prime(build_delta(gp, spins[i]));
    DenseRing::Vec det = ihara_det_dense(ring, dp, spec);
    DenseRing::Vec f = ring.sqrt(det);
    DenseRing::Vec f2 = ring.mul(f, f);
    double dev = 0.0;
    std::size_t nz_det = 0, nz_f = 0;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      dev = std::max(dev, std::abs(f2[k] - det[k]));
      nz_det += std::abs(det[k]) > MultiPoly::kDefaultEps;
      nz_f += std::abs(f[k]) > MultiPoly::kDefaultEps;
    }
    reports[i] = {spins[i], sign_exponent(spins[i], opt.sign_rule), dev, nz_det, nz_f};
    feyn[i] = std::move(f);
  };
  std::size_t threads = static_cast<std::size_t>(std::max(1, opt.threads));
  for (std::size_t start = 0; start < spins.size(); start += threads) {
    std::vector<std::future<void>> jobs;
    std::size_t stop = std::min(spins.size(), start + threads);
    for (std::size_t i = start + 1; i < stop; ++i) jobs.push_back(std::async(std::launch::async, work, i));
    work(start);
    for (auto& j : jobs) j.get();
  }

  DenseRing::Vec sum = ring.zero();
  double norm = std::ldexp(1.0, -g.genus());
  for (std::size_t i = 0; i < spins.size(); ++i) {
    double c = (reports[i].sign_exponent ? -norm : norm);
    for (std::size_t k = 0; k < ring.size(); ++k) sum[k] += c * feyn[i][k];
  }
  MultiPoly combined = ring.to_poly(sum);
  std::map<int, MultiPoly> ones;
  for (int v = one_var0; v < spec.nvars; ++v) ones.emplace(v, MultiPoly::constant(1.0));
  MultiPoly raw = substitute(combined, ones).truncated(cap);

  IsingResult out;
  SnapResult sn = snap(raw);
  out.raw = raw;
  out.snapped = sn.poly;
  out.residual = sn.residual;
  out.ok = sn.residual < opt.tolerance;
  out.cap = cap;
  out.univariate = opt.univariate;
  out.ring = ring_name(ring);
  out.reduced_edges = gp.num_edges();
  out.zero_edges = static_cast<int>(red.zero_edges.size());
  out.one_edges = nO;
  out.spins = std::move(reports);
  return out;
}

double ising_partition_from_generating(const EmbeddedGraph& g, const MultiPoly& e_poly,
                                       const std::vector<double>& couplings, double beta) {
  if (static_cast<int>(couplings.size()) != g.num_edges())
    throw std::invalid_argument("one coupling per edge is required");
  std::map<int, Complex> at;
  double pre = std::ldexp(1.0, g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    double bj = beta * couplings[static_cast<std::size_t>(e)];
    at[e] = std::tanh(bj);
    pre *= std::cosh(bj);
  }
  return pre * poly_eval(e_poly, at).real();
}

std::vector<FzReport> verify_foata_zeilberger(const EmbeddedGraph& g, int max_len, RingPolicy policy) {
  const int m = g.num_edges();
  std::size_t ncycles = enumerate_prime_reduced_cycles(g, max_len).size();
  Specialization spec = Specialization::identity(m);
  std::optional<DenseRing> ring;
  bool univariate = false;
  try {
    DenseRing r = make_ring(m, max_len, 2 * m, policy == RingPolicy::automatic ? RingPolicy::automatic : policy);
    if (r.kind() == DenseRing::Kind::graded || policy == RingPolicy::squarefree)
      if (static_cast<double>(ncycles) * static_cast<double>(r.size()) <= 5e7) ring = std::move(r);
  } catch (const std::length_error&) {
  }
  if (!ring) {
    spec = Specialization::random_univariate(m, 20240531u);
    ring = DenseRing::graded(1, max_len);
    univariate = true;
  }
  std::vector<FzReport> out;
  for (const F2Vec& s : spin_indices(g.genus())) {
    TransitionMatrix dp = build_delta_prime(build_delta(g, s));
    DenseRing::Vec det = ihara_det_dense(*ring, dp, spec);
    DenseRing::Vec prod = truncated_cycle_product_dense(g, s, max_len, *ring, spec);
    double dev = 0.0;
    for (std::size_t k = 0; k < ring->size(); ++k) dev = std::max(dev, std::abs(det[k] - prod[k]));
    out.push_back({s, max_len, ring_name(*ring), univariate, ncycles, dev});
  }
  return out;
}

std::vector<SqrtReport> verify_square_root(const EmbeddedGraph& g, std::optional<int> cap) {
  const int m = g.num_edges();
  const int d = cap.value_or(m);
  Specialization spec = Specialization::identity(m);
  std::optional<DenseRing> ring;
  bool univariate = false;
  try {
    DenseRing r = make_ring(m, d, 2 * m, RingPolicy::automatic);
    if (r.kind() == DenseRing::Kind::graded) ring = std::move(r);
  } catch (const std::length_error&) {
  }
  if (!ring) {
    spec = Specialization::random_univariate(m, 20240531u);
    ring = DenseRing::graded(1, d);
    univariate = true;
  }
  std::vector<SqrtReport> out;
  for (const F2Vec& s : spin_indices(g.genus())) {
    TransitionMatrix dp = build_delta_prime(build_delta(g, s));
    DenseRing::Vec det = ihara_det_dense(*ring, dp, spec);
    DenseRing::Vec f = ring->sqrt(det);
    double dev = 0.0;
    if (ring->size() <= 3000) {
      // Independent check through the sparse product.
      MultiPoly fp = ring->to_poly(f, 0.0);
      dev = max_abs_diff(poly_mul(fp, fp, d), ring->to_poly(det, 0.0), d);
    } else {
      DenseRing::Vec f2 = ring->mul(f, f);
      for (std::size_t k = 0; k < ring->size(); ++k) dev = std::max(dev, std::abs(f2[k] - det[k]));
    }
    out.push_back({s, d, ring_name(*ring), univariate, dev});
  }
  return out;
}

}  // namespace surfising
