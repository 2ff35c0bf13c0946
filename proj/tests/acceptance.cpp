// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "surfising/brute.hpp"
#include "surfising/critical.hpp"
#include "surfising/cycles.hpp"
#include "surfising/dirac.hpp"
#include "surfising/graph_io.hpp"
#include "surfising/ihara.hpp"
#include "surfising/kasteleyn.hpp"
#include "surfising/pfaffian.hpp"
#include "surfising/quadform.hpp"
#include "surfising/reduce.hpp"

namespace fs = std::filesystem;
using namespace surfising;

namespace {

// Tolerances and limits.
constexpr double kSnapResidual = 1e-6;
constexpr double kGenus0Seconds = 5.0;
constexpr double kGenus1Seconds = 300.0;
constexpr int kFzLength = 8;
constexpr double kFzDeviation = 1e-8;
constexpr double kSqrtDeviation = 1e-8;
constexpr int kRotationLength = 8;
constexpr double kDimerTolerance = 1e-9;
constexpr int kPropTwoPairs = 10;
constexpr double kDiracTolerance = 1e-9;
constexpr int kFermiTrials = 200;
constexpr int kFermiMaxDim = 10;
constexpr double kFermiRelError = 1e-9;
constexpr double kDetPrimeRelError = 1e-8;
constexpr double kFermiSeconds = 10.0;
constexpr unsigned kSeed = 20240531;

const std::vector<std::string> kAllFixtures = {
    "triangle",     "k4",        "two_squares", "theta",     "single_edge", "square4",
    "square_patch_3x3", "square_patch_3x3_perturbed", "grid_4x4", "bowtie", "flower", "parallel5",
    "torus_2x2",    "torus_3x3", "torus_4x4",   "bouquet_g2"};

EmbeddedGraph fixture(const std::string& name) {
  return load_embedded_graph_file((fs::path(SURFISING_FIXTURE_DIR) / (name + ".json")).string());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MultiPoly univariate(const MultiPoly& p, int num_edges) {
  std::map<int, MultiPoly> t;
  for (int e = 0; e < num_edges; ++e) t.emplace(e, MultiPoly::variable(0));
  return substitute(p, t);
}

/// Exact equality of two integer-snapped polynomials.
bool same(const MultiPoly& a, const MultiPoly& b) { return max_abs_diff(snap(a).poly, snap(b).poly) == 0.0; }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  out.detail << std::setprecision(3);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  if (!out.pass) ++failures;
  std::cout << "criterion " << std::setw(2) << number << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title << " ("
            << std::fixed << std::setprecision(1) << seconds_since(t0) << " s)\n   " << out.detail.str() << "\n"
            << std::defaultfloat << std::flush;
}

/// Feynman against brute force on one fixture; returns false on mismatch.
bool ising_matches(Outcome& out, const std::string& name, bool univariate_mode, double limit) {
  EmbeddedGraph g = fixture(name);
  auto t0 = std::chrono::steady_clock::now();
  IsingOptions opt;
  opt.univariate = univariate_mode;
  IsingResult r = ising_generating_function(g, opt);
  double dt = seconds_since(t0);
  MultiPoly brute = brute_even_sets(g);
  if (univariate_mode) brute = univariate(brute, g.num_edges());
  bool eq = same(r.snapped, brute);
  out.detail << " " << name << (univariate_mode ? "(t)" : "") << ": residual " << r.residual << ", " << dt << " s;";
  out.require(eq, name + " differs from brute force");
  out.require(r.residual < kSnapResidual, name + " residual");
  out.require(dt < limit, name + " runtime");
  return eq;
}

/// Calls visit on every edge-simple closed trail, each class {p, p^-1} once:
/// the smallest edge of the trail is entered first and in its u -> v direction.
long for_each_edge_simple_cycle(const EmbeddedGraph& g, const std::function<void(const Cycle&)>& visit) {
  long count = 0;
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  Cycle path;
  std::function<void(int, int)> extend = [&](int start_edge, int start_vertex) {
    int v = g.head(path.back());
    if (v == start_vertex) {
      ++count;
      visit(path);
    }
    for (int d : g.rotation(v)) {
      int e = EmbeddedGraph::edge_of(d);
      if (e <= start_edge || used[static_cast<std::size_t>(e)]) continue;
      used[static_cast<std::size_t>(e)] = 1;
      path.push_back(d);
      extend(start_edge, start_vertex);
      path.pop_back();
      used[static_cast<std::size_t>(e)] = 0;
    }
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    int d = EmbeddedGraph::dart(e, 0);
    used[static_cast<std::size_t>(e)] = 1;
    path = {d};
    extend(e, g.tail(d));
    used[static_cast<std::size_t>(e)] = 0;
  }
  return count;
}

// ---------------------------------------------------------------- criteria

void genus_zero(Outcome& out) {
  for (const char* name : {"triangle", "k4", "two_squares"}) ising_matches(out, name, false, kGenus0Seconds);
}

void genus_one(Outcome& out) {
  ising_matches(out, "torus_2x2", false, kGenus1Seconds);
  ising_matches(out, "torus_3x3", true, kGenus1Seconds);
}

void foata_zeilberger(Outcome& out) {
  double worst = 0.0;
  for (const auto& name : kAllFixtures) {
    EmbeddedGraph g = fixture(name);
    double dev = 0.0;
    std::size_t cycles = 0;
    for (const auto& r : verify_foata_zeilberger(g, kFzLength)) {
      dev = std::max(dev, r.max_deviation);
      cycles = r.cycles;
    }
    worst = std::max(worst, dev);
    out.require(dev < kFzDeviation, name);
    if (name == "theta" || name == "torus_2x2" || name == "bouquet_g2")
      out.detail << " " << name << ": " << cycles << " cycle classes;";
  }
  out.detail << " L = " << kFzLength << ", " << kAllFixtures.size() << " fixtures, all spins, max deviation " << worst;
}

void square_root(Outcome& out) {
  double worst = 0.0;
  int pairs = 0;
  for (const auto& name : kAllFixtures) {
    EmbeddedGraph g = fixture(name);
    for (const auto& r : verify_square_root(g)) {
      worst = std::max(worst, r.max_deviation);
      out.require(r.max_deviation < kSqrtDeviation, name + " s=" + r.s.str());
      ++pairs;
    }
  }
  out.detail << " " << pairs << " fixture/spin pairs, max deviation " << worst;
}

void rotation_laws(Outcome& out) {
  long cycles = 0, inf_bad = 0;
  for (const auto& name : kAllFixtures) {
    EmbeddedGraph g = fixture(name);
    for (const auto& c : enumerate_prime_reduced_cycles(g, kRotationLength)) {
      ++cycles;
      if (rot0(g, c) != (1 + self_intersections(g, c)) % 2) ++inf_bad;
    }
  }
  out.detail << " rot0 = 1 + self-intersections: " << inf_bad << " failures in " << cycles << " cycles (length <= "
             << kRotationLength << ");";
  out.require(inf_bad == 0, "rot0 parity");
  long checks = 0, gr_bad = 0;
  for (const char* name : {"torus_2x2", "torus_3x3", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    long n = for_each_edge_simple_cycle(g, [&](const Cycle& c) { gr_bad += theorem_gr_failures(g, c); });
    checks += n * static_cast<long>(spin_indices(g.genus()).size());
    out.detail << " " << name << ": " << n << " edge-simple cycles;";
  }
  out.detail << " rot_s law: " << gr_bad << " failures in " << checks << " checks";
  out.require(gr_bad == 0, "rot_s law");
}

void quadratic_forms(Outcome& out) {
  long pairs = 0, bad = 0, arf_bad = 0;
  for (int g = 1; g <= 2; ++g) {
    int dim = 2 * g;
    for (const auto& s : spin_indices(g)) {
      QuadraticForm q(s);
      for (std::uint32_t x = 0; x < f2_space_size(dim); ++x)
        for (std::uint32_t y = 0; y < f2_space_size(dim); ++y) {
          F2Vec a(dim, x), b(dim, y);
          ++pairs;
          if (q(a + b) != (q(a) + q(b) + intersection(a, b)) % 2) ++bad;
        }
      int arf = 0;
      for (int i = 0; i < g; ++i) arf += q(F2Vec::unit(dim, 2 * i)) * q(F2Vec::unit(dim, 2 * i + 1));
      // Independent value: the majority value of q.
      int ones = 0;
      for (std::uint32_t x = 0; x < f2_space_size(dim); ++x) ones += q(F2Vec(dim, x));
      int majority = ones > static_cast<int>(f2_space_size(dim)) / 2 ? 1 : 0;
      if (q.arf() != arf % 2 || q.arf() != majority || sign_exponent(s, SignRule::arf) != q.arf()) ++arf_bad;
    }
  }
  out.detail << " q(x+y) = q(x) + q(y) + x.y: " << bad << " failures in " << pairs << " pairs; Arf mismatches "
             << arf_bad << ";";
  out.require(bad == 0, "quadratic refinement");
  out.require(arf_bad == 0, "Arf value");
  out.require(ising_matches(out, "torus_2x2", false, kGenus1Seconds), "Arf rule on torus_2x2");
  out.require(ising_matches(out, "bouquet_g2", false, kGenus1Seconds), "Arf rule on bouquet_g2");
  for (const char* name : {"torus_2x2", "bouquet_g2"}) {
    EmbeddedGraph g = fixture(name);
    IsingOptions opt;
    opt.sign_rule = SignRule::literal;
    IsingResult r = ising_generating_function(g, opt);
    bool match = r.ok && same(r.snapped, brute_even_sets(g));
    out.detail << " literal product rule on " << name << ": " << (match ? "matches" : "does not match") << ";";
  }
}

void dimers(Outcome& out) {
  for (const char* name : {"single_edge", "square4", "two_squares", "k4", "grid_4x4"}) {
    EmbeddedGraph g = fixture(name);
    Orientation d = find_kasteleyn_orientation(g);
    out.require(is_kasteleyn(g, d), std::string(name) + " orientation");
    MultiPoly pf = pfaffian(skew_adjacency(g, d));
    MultiPoly p = brute_perfect_matchings(g);
    bool ok = max_abs_diff(pf, p) < kDimerTolerance || max_abs_diff(pf * Complex{-1.0}, p) < kDimerTolerance;
    out.require(ok, std::string(name) + " single Pfaffian");
    out.detail << " " << name << ": " << p.size() << " matchings;";
  }
  for (const char* name : {"torus_2x2", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    MultiPoly p = brute_perfect_matchings(g);
    DimerCombination c = find_dimer_combination(g, p, kDimerTolerance);
    out.require(c.matched && c.residual < kDimerTolerance, std::string(name) + " four Pfaffians");
    out.detail << " " << name << ": " << p.size() << " matchings, " << c.rule << ";";
  }

  std::mt19937 rng(kSeed);
  std::uniform_real_distribution<double> mod(0.5, 2.0), arg(-std::numbers::pi, std::numbers::pi);
  auto random_unit = [&] { return std::polar(mod(rng), arg(rng)); };
  int pairs = 0, bad = 0;
  for (const char* name : {"grid_4x4", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    std::vector<Complex> w(static_cast<std::size_t>(g.num_edges()));
    for (auto& x : w) x = random_unit();
    auto ms = list_perfect_matchings(g);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        std::vector<int> diff;
        std::set_symmetric_difference(ms[i].begin(), ms[i].end(), ms[j].begin(), ms[j].end(), std::back_inserter(diff));
        if (diff.size() > 8 || pairs >= 4 * kPropTwoPairs) continue;
        PropTwoReport r;
        try {
          r = check_prop_two(g, w, ms[i], ms[j], kDimerTolerance);
        } catch (const std::invalid_argument&) {
          continue;  // not a single cycle
        }
        ++pairs;
        if (!r.holds) ++bad;
      }
  }
  out.detail << " t(M)/t(N) = c(C): " << bad << " failures in " << pairs << " pairs;";
  out.require(pairs >= kPropTwoPairs && bad == 0, "ratio law");

  int rounds = 0;
  for (const char* name : {"grid_4x4", "two_squares", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    auto w0 = weights_from_orientation(g, find_kasteleyn_orientation(g));
    for (int k = 0; k < 5; ++k, ++rounds) {
      std::vector<Complex> m(static_cast<std::size_t>(g.num_vertices()));
      for (auto& x : m) x = random_unit();
      Normalization n = normalize_to_simple_flat(g, multiply_vertices(g, w0, m));
      bool unit = true;
      for (const auto& x : n.weights) unit = unit && std::abs(std::abs(x.real()) - 1.0) < kDimerTolerance && std::abs(x.imag()) < kDimerTolerance;
      out.require(unit && is_kasteleyn_flat(g, n.weights) && is_kasteleyn(g, n.orientation),
                  std::string(name) + " normalization");
    }
  }
  out.detail << " normalization round trips: " << rounds;
}

void dirac(Outcome& out) {
  double spread = 0.0, rec = 0.0;
  int spins = 0;
  for (const char* name : {"square_patch_3x3", "torus_4x4"}) {
    EmbeddedGraph g = fixture(name);
    for (const auto& s : spin_indices(g.genus())) {
      DiracMatrices m = build_delta2(g, s);
      ProportionalityReport pr = check_row_proportionality(g, m, kDiracTolerance);
      double r = (reconstruct_delta2_from_dirac(g, m.dirac, pr.constants) - m.delta2).cwiseAbs().maxCoeff();
      out.require(pr.holds && pr.spread < kDiracTolerance, std::string(name) + " proportionality");
      out.require(r < kDiracTolerance, std::string(name) + " reconstruction");
      spread = std::max(spread, pr.spread);
      rec = std::max(rec, r);
      ++spins;
    }
  }
  out.detail << " " << spins << " spin indices: ratio spread " << spread << ", reconstruction error " << rec << ";";
  EmbeddedGraph bad = fixture("square_patch_3x3_perturbed");
  EmbeddedGraph good = fixture("square_patch_3x3");
  bool critical = is_critical_embedding(bad).critical;
  DiracMatrices m = build_delta2_unchecked(bad, good, F2Vec(0), dual_lengths(good));
  ProportionalityReport pr = check_row_proportionality(bad, m, kDiracTolerance);
  out.detail << " perturbed control: critical " << (critical ? "yes" : "no") << ", spread " << pr.spread;
  out.require(!critical && !pr.holds, "perturbed control detected");
}

void fermionic(Outcome& out) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(kSeed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_int_distribution<int> dim(1, kFermiMaxDim);
  double expansion = 0.0, det_prime = 0.0, zeta = 0.0;
  for (int k = 0; k < kFermiTrials; ++k) {
    int n = dim(rng);
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Complex{nd(rng), nd(rng)} / std::sqrt(2.0 * n);
    expansion = std::max(expansion, fermionic_expansion_check(a).rel_error);
    Eigen::MatrixXcd t = a + Eigen::MatrixXcd::Identity(n, n);
    Complex det = t.determinant();
    RegularizedDet rd = regularized_det_finite(t);
    det_prime = std::max(det_prime, std::abs(rd.product - det) / std::abs(det));
    zeta = std::max(zeta, std::abs(rd.via_zeta - det) / std::abs(det));
  }
  double dt = seconds_since(t0);
  out.detail << " " << kFermiTrials << " matrices: alternating sum error " << expansion << ", det' error " << det_prime
             << ", zeta form error " << zeta;
  out.require(expansion < kFermiRelError, "alternating sum");
  out.require(det_prime < kDetPrimeRelError && zeta < kDetPrimeRelError, "det'");
  out.require(dt < kFermiSeconds, "runtime");
}

void degree_reduction(Outcome& out) {
  for (const char* name : {"flower", "parallel5", "k4"}) {
    EmbeddedGraph g = fixture(name);
    ReducedGraphMap r = reduce_degrees(g);
    bool degrees = true;
    for (int v = 0; v < r.reduced.num_vertices(); ++v) degrees = degrees && r.reduced.degree(v) <= 4;
    std::map<int, MultiPoly> sub;
    for (int e : r.zero_edges) sub.emplace(e, MultiPoly{});
    for (int e : r.one_edges) sub.emplace(e, MultiPoly::constant(1.0));
    for (int e = 0; e < r.reduced.num_edges(); ++e)
      if (r.f[static_cast<std::size_t>(e)] >= 0) sub.emplace(e, MultiPoly::variable(r.f[static_cast<std::size_t>(e)]));
    MultiPoly carried = substitute(brute_even_sets(r.reduced), sub);
    MultiPoly original = brute_even_sets(g);
    out.detail << " " << name << ": " << g.num_edges() << " -> " << r.reduced.num_edges() << " edges (|Z| "
               << r.zero_edges.size() << ", |O| " << r.one_edges.size() << ");";
    out.require(degrees, std::string(name) + " degrees");
    out.require(max_abs_diff(carried, original) == 0.0, std::string(name) + " E");
  }
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto run = [&](int n, const std::string& title, const std::function<void(Outcome&)>& body) {
    if (only.empty() || only.count(n)) report(n, title, body);
  };
  run(1, "Feynman equals brute force, genus 0", genus_zero);
  run(2, "Feynman equals brute force, genus 1", genus_one);
  run(3, "truncated cycle product equals det(I - Delta')", foata_zeilberger);
  run(4, "Feynman function squared equals det(I - Delta')", square_root);
  run(5, "rotation parity laws", rotation_laws);
  run(6, "quadratic form axioms and sign rule", quadratic_forms);
  run(7, "dimer Pfaffians, ratio law and normalization", dimers);
  run(8, "Dirac row proportionality and reconstruction", dirac);
  run(9, "fermionic identities", fermionic);
  run(10, "degree reduction", degree_reduction);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
