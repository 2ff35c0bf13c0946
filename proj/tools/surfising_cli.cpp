// Command-line front end: Ising and dimer generating functions of surface
// graphs, verification reports and fixture management.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surfising/brute.hpp"
#include "surfising/critical.hpp"
#include "surfising/dirac.hpp"
#include "surfising/graph_io.hpp"
#include "surfising/ihara.hpp"
#include "surfising/kasteleyn.hpp"
#include "surfising/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace surfising;

namespace {

struct Global {
  std::optional<int> cap;
  double tolerance = 1e-6;
  int threads = 1;
  std::string sign_rule = "arf";
  std::string output = "table";
  bool timing = false;
};

/// Verification failure: reported, then exit status 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path fixture_dir() {
  if (const char* env = std::getenv("SURFISING_FIXTURES")) return env;
#ifdef SURFISING_FIXTURE_DIR
  return SURFISING_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

/// A path, or the name of a bundled fixture.
fs::path resolve_input(const std::string& input) {
  if (fs::exists(input)) return input;
  fs::path p = fixture_dir() / (input + ".json");
  if (fs::exists(p)) return p;
  throw std::runtime_error("fixture not found: '" + input + "'");
}

std::string fixture_id(const fs::path& p) { return p.stem().string(); }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

VariableNamer edge_namer(const EmbeddedGraph& g, bool univariate) {
  if (univariate) return [](int v) { return v == 0 ? std::string("t") : "y" + std::to_string(v); };
  return [&g](int v) { return v < g.num_edges() ? g.variable_name(v) : default_variable_name(v); };
}

MultiPoly to_univariate(const MultiPoly& p, int num_edges) {
  std::map<int, MultiPoly> t;
  for (int e = 0; e < num_edges; ++e) t.emplace(e, MultiPoly::variable(0));
  return substitute(p, t);
}

/// Per-edge values keyed by edge id: a number or [re, im].
std::vector<Complex> read_edge_values(const EmbeddedGraph& g, const std::string& path, Complex fallback) {
  std::vector<Complex> w(static_cast<std::size_t>(g.num_edges()), fallback);
  json j = read_json(path);
  if (!j.is_object()) throw std::invalid_argument(path + ": expected an object keyed by edge id");
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto e = g.find_edge(it.key());
    if (!e) throw std::invalid_argument(path + ": unknown edge '" + it.key() + "'");
    const json& v = it.value();
    Complex c = v.is_array() ? Complex{v.at(0).get<double>(), v.at(1).get<double>()} : Complex{v.get<double>()};
    w[static_cast<std::size_t>(*e)] = c;
  }
  return w;
}

class Emitter {
 public:
  explicit Emitter(const Global& g) : g_(g) {}
  void emit(const ResultBlock& b, const std::string& table) const {
    ResultBlock out = b;
    if (!g_.timing) out.seconds.reset();
    if (g_.output == "table") std::cout << table;
    std::cout << to_json(out).dump() << "\n";
  }
  bool table() const { return g_.output == "table"; }

 private:
  const Global& g_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string spin_label(const F2Vec& s) { return s.dim() == 0 ? "-" : s.str(); }

// ---------------------------------------------------------------- commands

int run_ising(const Global& gl, const std::string& input, const std::string& method, bool univariate,
              const std::string& ring) {
  auto t0 = std::chrono::steady_clock::now();
  fs::path path = resolve_input(input);
  EmbeddedGraph g = load_embedded_graph_file(path.string());
  ResultBlock b;
  b.command = "ising";
  b.fixture = fixture_id(path);
  b.method = method;
  b.quantity = univariate ? "E(t)" : "E";
  b.namer = edge_namer(g, univariate);
  std::ostringstream tab;
  bool ok = true;
  if (method == "bruteforce") {
    MultiPoly e = brute_even_sets(g);
    if (univariate) e = to_univariate(e, g.num_edges());
    b.snapped = e;
    b.raw = e;
  } else if (method == "feynman") {
    IsingOptions opt;
    opt.cap = gl.cap;
    opt.sign_rule = parse_sign_rule(gl.sign_rule);
    opt.univariate = univariate;
    opt.threads = gl.threads;
    opt.tolerance = gl.tolerance;
    opt.ring = parse_ring_policy(ring);
    IsingResult r = ising_generating_function(g, opt);
    b.snapped = r.snapped;
    b.raw = r.raw;
    b.residual = r.residual;
    ok = r.ok;
    json spins = json::array();
    for (const auto& s : r.spins)
      spins.push_back({{"s", spin_label(s.s)}, {"sign_exponent", s.sign_exponent}, {"sqrt_deviation", s.sqrt_deviation},
                       {"det_terms", s.det_terms}, {"feynman_terms", s.feynman_terms}});
    b.diagnostics = {{"cap", r.cap},           {"sign_rule", gl.sign_rule}, {"ring", r.ring},
                     {"reduced_edges", r.reduced_edges}, {"zero_edges", r.zero_edges}, {"one_edges", r.one_edges},
                     {"spins", spins}};
    tab << "reduced graph: " << r.reduced_edges << " edges (" << r.zero_edges << " set to 0, " << r.one_edges
        << " set to 1), ring " << r.ring << "\n";
    for (const auto& s : r.spins)
      tab << "  s=" << spin_label(s.s) << "  sign (-1)^" << s.sign_exponent << "  |F^2-det| " << s.sqrt_deviation << "\n";
  } else {
    throw std::invalid_argument("unknown method '" + method + "' (feynman|bruteforce)");
  }
  b.seconds = seconds_since(t0);
  tab << b.fixture << " E = " << render(*b.snapped, RenderMode::integer, b.namer) << "\n";
  tab << "residual " << b.residual << (ok ? "" : "  ABOVE TOLERANCE") << "\n";
  Emitter(gl).emit(b, tab.str());
  if (!ok) throw Failure("snap residual " + std::to_string(b.residual) + " exceeds tolerance");
  return 0;
}

int run_partition(const Global& gl, const std::string& input, const std::string& method, double beta,
                  const std::string& couplings_path) {
  auto t0 = std::chrono::steady_clock::now();
  fs::path path = resolve_input(input);
  EmbeddedGraph g = load_embedded_graph_file(path.string());
  std::vector<double> j(static_cast<std::size_t>(g.num_edges()), 1.0);
  if (!couplings_path.empty()) {
    auto c = read_edge_values(g, couplings_path, 1.0);
    for (std::size_t k = 0; k < c.size(); ++k) j[k] = c[k].real();
  }
  ResultBlock b;
  b.command = "partition";
  b.fixture = fixture_id(path);
  b.method = method;
  b.quantity = "Z";
  if (method == "bruteforce") {
    b.scalar = brute_ising(g, j, beta);
  } else if (method == "feynman") {
    IsingOptions opt;
    opt.cap = gl.cap;
    opt.sign_rule = parse_sign_rule(gl.sign_rule);
    opt.threads = gl.threads;
    opt.tolerance = gl.tolerance;
    IsingResult r = ising_generating_function(g, opt);
    if (!r.ok) throw Failure("snap residual " + std::to_string(r.residual) + " exceeds tolerance");
    b.residual = r.residual;
    b.scalar = ising_partition_from_generating(g, r.snapped, j, beta);
  } else {
    throw std::invalid_argument("unknown method '" + method + "' (feynman|bruteforce)");
  }
  b.diagnostics = {{"beta", beta}};
  b.seconds = seconds_since(t0);
  std::ostringstream tab;
  tab.precision(15);
  tab << b.fixture << " Z(beta=" << beta << ") = " << *b.scalar << "\n";
  Emitter(gl).emit(b, tab.str());
  return 0;
}

int run_dimer(const Global& gl, const std::string& input, const std::string& method) {
  auto t0 = std::chrono::steady_clock::now();
  fs::path path = resolve_input(input);
  EmbeddedGraph g = load_embedded_graph_file(path.string());
  ResultBlock b;
  b.command = "dimer";
  b.fixture = fixture_id(path);
  b.method = method;
  b.quantity = "P";
  b.namer = edge_namer(g, false);
  std::ostringstream tab;
  bool ok = true;
  MultiPoly brute = brute_perfect_matchings(g);
  if (method == "bruteforce") {
    b.snapped = brute;
    b.raw = brute;
  } else if (method == "pfaffian") {
    DimerCombination c = find_dimer_combination(g, brute);
    SnapResult sn = snap(c.combination);
    b.snapped = sn.poly;
    b.raw = c.combination;
    b.residual = c.residual;
    ok = c.matched;
    json terms = json::array();
    for (std::size_t i = 0; i < c.shifts.size(); ++i)
      terms.push_back({{"eps", spin_label(c.shifts[i])}, {"coefficient", c.coefficients[i]}});
    b.diagnostics = {{"rule", c.rule}, {"matched", c.matched}, {"terms", terms}};
    tab << "coefficients (" << c.rule << "):";
    for (std::size_t i = 0; i < c.shifts.size(); ++i) tab << "  " << spin_label(c.shifts[i]) << ":" << c.coefficients[i];
    tab << "\n";
  } else {
    throw std::invalid_argument("unknown method '" + method + "' (pfaffian|bruteforce)");
  }
  b.seconds = seconds_since(t0);
  tab << b.fixture << " P = " << render(*b.snapped, RenderMode::integer, b.namer) << "\n";
  Emitter(gl).emit(b, tab.str());
  if (!ok) throw Failure("no Pfaffian combination reproduces the matching polynomial");
  return 0;
}

int run_kasteleyn(const Global& gl, const std::string& action, const std::string& input, const std::string& weights) {
  fs::path path = resolve_input(input);
  EmbeddedGraph g = load_embedded_graph_file(path.string());
  ResultBlock b;
  b.command = "kasteleyn " + action;
  b.fixture = fixture_id(path);
  b.method = "orientation";
  b.quantity = "kasteleyn";
  std::ostringstream tab;
  bool ok = true;
  if (action == "check") {
    Orientation d = find_kasteleyn_orientation(g);
    json faces = json::array();
    for (int f : kasteleyn_faces(g)) {
      int cw = clockwise_count(g, d, f);
      faces.push_back({{"face", f}, {"length", g.faces()[static_cast<std::size_t>(f)].size()}, {"clockwise", cw}});
      tab << "face " << f << ": " << cw << " clockwise of " << g.faces()[static_cast<std::size_t>(f)].size() << "\n";
    }
    ok = is_kasteleyn(g, d);
    json orient = json::object();
    for (int e = 0; e < g.num_edges(); ++e) {
      int tail = d[static_cast<std::size_t>(e)] == 0 ? g.edge(e).u : g.edge(e).v;
      int head = d[static_cast<std::size_t>(e)] == 0 ? g.edge(e).v : g.edge(e).u;
      orient[g.edge(e).id] = g.vertex(tail).id + "->" + g.vertex(head).id;
    }
    b.diagnostics = {{"kasteleyn", ok}, {"faces", faces}, {"orientation", orient}};
    if (!weights.empty()) {
      auto w = read_edge_values(g, weights, 1.0);
      json curv = json::array();
      for (int f : kasteleyn_faces(g)) {
        Complex c = kasteleyn_curvature(g, w, face_cycle(g, f));
        curv.push_back({{"face", f}, {"re", c.real()}, {"im", c.imag()}});
      }
      bool flat = is_kasteleyn_flat(g, w);
      b.diagnostics["flat"] = flat;
      b.diagnostics["curvature"] = curv;
      tab << "weights are " << (flat ? "" : "not ") << "Kasteleyn flat\n";
    }
    tab << b.fixture << ": orientation " << (ok ? "is" : "is NOT") << " Kasteleyn\n";
  } else if (action == "normalize") {
    if (weights.empty()) throw std::invalid_argument("kasteleyn normalize needs --weights");
    auto w = read_edge_values(g, weights, 1.0);
    Normalization n = normalize_to_simple_flat(g, w);
    json out = json::object();
    for (int e = 0; e < g.num_edges(); ++e) {
      out[g.edge(e).id] = n.weights[static_cast<std::size_t>(e)].real();
      tab << "edge " << g.edge(e).id << ": " << n.weights[static_cast<std::size_t>(e)].real() << "\n";
    }
    ok = is_kasteleyn(g, n.orientation);
    b.diagnostics = {{"weights", out}, {"kasteleyn", ok}, {"flat", is_kasteleyn_flat(g, n.weights)}};
    tab << b.fixture << ": normalized weights " << (ok ? "give" : "do NOT give") << " a Kasteleyn orientation\n";
  } else {
    throw std::invalid_argument("unknown kasteleyn action '" + action + "' (check|normalize)");
  }
  Emitter(gl).emit(b, tab.str());
  if (!ok) throw Failure("Kasteleyn condition fails");
  return 0;
}

int run_dirac(const Global& gl, const std::string& input, const std::string& spin) {
  fs::path path = resolve_input(input);
  EmbeddedGraph g = load_embedded_graph_file(path.string());
  std::vector<F2Vec> spins = spin.empty() ? spin_indices(g.genus()) : std::vector<F2Vec>{F2Vec::parse(spin)};
  ResultBlock b;
  b.command = "dirac check";
  b.fixture = fixture_id(path);
  b.method = "proportionality";
  b.quantity = "dirac";
  std::ostringstream tab;
  bool ok = true;
  json per = json::array();
  for (const F2Vec& s : spins) {
    if (s.dim() != 2 * g.genus()) throw std::invalid_argument("spin index must have length 2g");
    DiracMatrices m = build_delta2(g, s);
    ProportionalityReport pr = check_row_proportionality(g, m);
    double rec = (reconstruct_delta2_from_dirac(g, m.dirac, pr.constants) - m.delta2).cwiseAbs().maxCoeff();
    ok = ok && pr.holds && rec <= 1e-9;
    json consts = json::array();
    for (int o = 0; o < g.num_darts(); ++o) {
      Complex c = pr.constants[static_cast<std::size_t>(o)];
      int e = EmbeddedGraph::edge_of(o);
      consts.push_back({{"dart", g.vertex(g.tail(o)).id + "->" + g.vertex(g.head(o)).id + " (" + g.edge(e).id + ")"},
                        {"re", c.real()}, {"im", c.imag()}});
    }
    double kernel = constant_kernel_residual(m.dirac);
    per.push_back({{"s", spin_label(s)}, {"proportional", pr.holds}, {"spread", pr.spread},
                   {"vertex_spread", pr.vertex_spread}, {"reconstruction", rec}, {"constant_kernel_residual", kernel},
                   {"constants", consts}});
    tab << "s=" << spin_label(s) << ": rows " << (pr.holds ? "proportional" : "NOT proportional") << ", spread "
        << pr.spread << ", reconstruction error " << rec << ", |D 1| " << kernel << "\n";
    b.residual = std::max({b.residual, pr.spread, rec});
  }
  b.diagnostics = {{"spins", per}};
  Emitter(gl).emit(b, tab.str());
  if (!ok) throw Failure("row proportionality fails");
  return 0;
}

int run_verify_fz(const Global& gl, const std::string& input, int max_len) {
  auto t0 = std::chrono::steady_clock::now();
  fs::path path = resolve_input(input);
  EmbeddedGraph g = load_embedded_graph_file(path.string());
  auto reps = verify_foata_zeilberger(g, max_len);
  ResultBlock b;
  b.command = "verify-fz";
  b.fixture = fixture_id(path);
  b.method = "cycle-product";
  b.quantity = "fz";
  std::ostringstream tab;
  json per = json::array();
  for (const auto& r : reps) {
    per.push_back({{"s", spin_label(r.s)}, {"deviation", r.max_deviation}, {"cycles", r.cycles}, {"ring", r.ring},
                   {"univariate", r.univariate}});
    tab << "s=" << spin_label(r.s) << ": " << r.cycles << " cycle classes, max deviation " << r.max_deviation
        << (r.univariate ? " (random univariate)" : "") << "\n";
    b.residual = std::max(b.residual, r.max_deviation);
  }
  b.diagnostics = {{"max_len", max_len}, {"spins", per}};
  b.seconds = seconds_since(t0);
  bool ok = b.residual < 1e-8;
  tab << b.fixture << ": det(I - Delta') and the cycle product " << (ok ? "agree" : "DISAGREE") << " to degree "
      << max_len << "\n";
  Emitter(gl).emit(b, tab.str());
  if (!ok) throw Failure("truncated cycle product differs from the determinant");
  return 0;
}

int run_fermi(const Global& gl, int trials, unsigned seed) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_int_distribution<int> dim(2, 10);
  double worst_fermi = 0.0, worst_det = 0.0;
  for (int k = 0; k < trials; ++k) {
    int n = dim(rng);
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Complex{nd(rng), nd(rng)} / std::sqrt(2.0 * n);
    worst_fermi = std::max(worst_fermi, fermionic_expansion_check(a).rel_error);
    Eigen::MatrixXcd t = a + Eigen::MatrixXcd::Identity(n, n);
    Complex det = t.determinant();
    RegularizedDet rd = regularized_det_finite(t);
    worst_det = std::max(worst_det, std::abs(rd.product - det) / std::abs(det));
  }
  ResultBlock b;
  b.command = "fermi selftest";
  b.method = "random";
  b.quantity = "fermi";
  b.residual = std::max(worst_fermi, worst_det);
  b.seconds = seconds_since(t0);
  b.diagnostics = {{"trials", trials}, {"seed", seed}, {"expansion_rel_error", worst_fermi},
                   {"regularized_det_rel_error", worst_det}};
  bool ok = worst_fermi < 1e-9 && worst_det < 1e-8;
  std::ostringstream tab;
  tab << trials << " random matrices: expansion error " << worst_fermi << ", det' error " << worst_det << "\n";
  Emitter(gl).emit(b, tab.str());
  if (!ok) throw Failure("fermionic identities fail");
  return 0;
}

int run_fixtures_list(const Global& gl) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fixture_dir()))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json list = json::array();
  for (const auto& f : files) {
    EmbeddedGraph g = load_embedded_graph_file(f.string());
    list.push_back({{"id", fixture_id(f)}, {"genus", g.genus()}, {"vertices", g.num_vertices()},
                    {"edges", g.num_edges()}, {"bipartite", g.bipartite()}});
    if (gl.output == "table")
      std::cout << fixture_id(f) << "  genus " << g.genus() << "  |V| " << g.num_vertices() << "  |E| " << g.num_edges()
                << (g.bipartite() ? "  bipartite" : "") << "\n";
  }
  if (gl.output == "json") std::cout << list.dump() << "\n";
  return 0;
}

json last_block(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty() && line.front() == '{') last = line;
  if (last.empty()) throw std::invalid_argument("'" + path + "' holds no result block");
  return json::parse(last);
}

int run_compare(const Global& gl, const std::string& a, const std::string& b) {
  CompareReport r = compare(last_block(a), last_block(b));
  json out = {{"command", "compare"}, {"comparable", r.comparable}, {"equal", r.equal()},
              {"max_deviation", r.max_deviation}, {"offending", r.offending}};
  if (!r.comparable) out["reason"] = r.reason;
  if (gl.output == "table") {
    if (!r.comparable) std::cout << "not comparable: " << r.reason << "\n";
    else if (r.equal()) std::cout << "identical (max deviation " << r.max_deviation << ")\n";
    else {
      std::cout << r.offending.size() << " coefficients differ (max deviation " << r.max_deviation << "):";
      for (const auto& m : r.offending) std::cout << " " << m;
      std::cout << "\n";
    }
  }
  std::cout << out.dump() << "\n";
  if (!r.comparable) throw std::invalid_argument(r.reason);
  if (!r.equal()) throw Failure("results differ");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising and dimer generating functions of graphs on surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--cap", gl.cap, "Degree cap of the Feynman computation (default |E|)");
  app.add_option("--tolerance", gl.tolerance, "Integer snap tolerance")->capture_default_str();
  app.add_option("--threads", gl.threads, "Worker threads for the spin indices")->capture_default_str();
  app.add_option("--sign-rule", gl.sign_rule, "Coefficient rule: arf or literal")
      ->check(CLI::IsMember({"arf", "literal"}))
      ->capture_default_str();
  app.add_option("--output", gl.output, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_flag("--timing", gl.timing, "Include wall-clock seconds in result blocks");

  std::string input, method, ring = "auto", couplings, weights, spin, action;
  bool univariate = false;
  double beta = 0.0;
  int max_len = 8, trials = 200;
  unsigned seed = 12345;

  auto* ising = app.add_subcommand("ising", "Ising generating function E(G, x)");
  ising->add_option("--input", input, "Fixture file or bundled fixture name")->required();
  ising->add_option("--method", method, "feynman or bruteforce")->required();
  ising->add_flag("--specialize-univariate", univariate, "Set every edge variable to t");
  ising->add_option("--ring", ring, "Coefficient ring: auto, graded or squarefree")->capture_default_str();

  auto* part = app.add_subcommand("partition", "Ising partition function");
  part->add_option("--input", input, "Fixture file or bundled fixture name")->required();
  part->add_option("--beta", beta, "Inverse temperature")->required();
  part->add_option("--couplings", couplings, "JSON object edge id -> J (default J = 1)");
  part->add_option("--method", method, "feynman or bruteforce")->default_val("feynman");

  auto* dimer = app.add_subcommand("dimer", "Dimer generating function P(G, x)");
  dimer->add_option("--input", input, "Fixture file or bundled fixture name")->required();
  dimer->add_option("--method", method, "pfaffian or bruteforce")->required();

  auto* kast = app.add_subcommand("kasteleyn", "Kasteleyn orientations and flat weights");
  kast->add_option("action", action, "check or normalize")->required();
  kast->add_option("--input", input, "Fixture file or bundled fixture name")->required();
  kast->add_option("--weights", weights, "JSON object edge id -> weight (number or [re, im])");

  auto* dirac = app.add_subcommand("dirac", "Discrete Dirac structure of critical embeddings");
  dirac->add_option("action", action, "check")->required()->check(CLI::IsMember({"check"}));
  dirac->add_option("--input", input, "Fixture file or bundled fixture name")->required();
  dirac->add_option("--spin", spin, "Spin index as a 0/1 string (default: all)");

  auto* fz = app.add_subcommand("verify-fz", "Compare det(I - Delta') with the truncated cycle product");
  fz->add_option("--input", input, "Fixture file or bundled fixture name")->required();
  fz->add_option("--max-len", max_len, "Cycle length and degree bound")->capture_default_str();

  auto* fermi = app.add_subcommand("fermi", "Fermionic expansion identities");
  fermi->add_option("action", action, "selftest")->required()->check(CLI::IsMember({"selftest"}));
  fermi->add_option("--trials", trials, "Random matrices")->capture_default_str();
  fermi->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* fixtures = app.add_subcommand("fixtures", "Bundled fixtures");
  fixtures->add_option("action", action, "list")->required()->check(CLI::IsMember({"list"}));

  std::string file_a, file_b;
  auto* cmp = app.add_subcommand("compare", "Coefficientwise comparison of two result files");
  cmp->add_option("a", file_a, "First result file (last block is used)")->required();
  cmp->add_option("b", file_b, "Second result file")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*ising) return run_ising(gl, input, method, univariate, ring);
    if (*part) return run_partition(gl, input, method, beta, couplings);
    if (*dimer) return run_dimer(gl, input, method);
    if (*kast) return run_kasteleyn(gl, action, input, weights);
    if (*dirac) return run_dirac(gl, input, spin);
    if (*fz) return run_verify_fz(gl, input, max_len);
    if (*fermi) return run_fermi(gl, trials, seed);
    if (*fixtures) return run_fixtures_list(gl);
    if (*cmp) return run_compare(gl, file_a, file_b);
  } catch (const Failure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
