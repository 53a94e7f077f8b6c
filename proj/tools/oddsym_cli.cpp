// Command-line front end: every subcommand validates its inputs, runs one
// library operation, and emits a single JSON document (stdout or --out).
// Human-readable tables derived from the same JSON go to stderr.
//
// Exit codes: 0 success, 1 validation error, 2 resource budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oddsym/burau.hpp"
#include "oddsym/complexes.hpp"
#include "oddsym/homology.hpp"
#include "oddsym/json_io.hpp"
#include "oddsym/lattice.hpp"
#include "oddsym/orbits.hpp"
#include "oddsym/weights.hpp"

namespace {

using namespace oddsym;

std::vector<IntVec> parse_vector_list(const std::string& s) {
  std::vector<IntVec> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) out.push_back(parse_int_vec(tok));
  return out;
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = dump_json(j);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << text;
  }
}

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return static_cast<std::size_t>(std::stoull(v));
}

struct CommonOut {
  std::string out_path;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the integral Burau congruence groupoid, its destabilisation complexes, and symplectic coefficient systems"};
  app.require_subcommand(1);

  // burau
  std::size_t burau_n = 0;
  std::string burau_word, burau_out;
  bool burau_reduced = false;
  auto* cmd_burau = app.add_subcommand("burau", "Burau matrix of a braid word, with classification");
  cmd_burau->add_option("--n", burau_n, "number of strands")->required();
  cmd_burau->add_option("--word", burau_word, "comma-separated signed generator indices, e.g. 1,2,-1");
  cmd_burau->add_flag("--reduced", burau_reduced, "also report the action on ker(phi)");
  cmd_burau->add_option("--out", burau_out, "output file (default: stdout)");

  // braiding
  std::size_t braid_n = 0, braid_m = 0;
  std::string braid_conv = "eq31", braid_out;
  auto* cmd_braiding = app.add_subcommand("braiding", "matrix of the crossing Z^n (+) Z^m -> Z^m (+) Z^n");
  cmd_braiding->add_option("--n", braid_n, "left rank")->required();
  cmd_braiding->add_option("--m", braid_m, "right rank")->required();
  cmd_braiding->add_option("--convention", braid_conv, "eq31 or eq32 (default eq31)");
  cmd_braiding->add_option("--out", braid_out, "output file (default: stdout)");

  // complex
  std::string cx_family = "X", cx_relative, cx_out;
  std::size_t cx_n = 0;
  int cx_box = 1;
  long cx_max_dim = -1;
  std::size_t cx_max_vertices = env_or("ODDSYM_MAX_VERTICES", 200000);
  std::size_t cx_max_simplices = env_or("ODDSYM_MAX_SIMPLICES", 2000000);
  long cx_time_budget = static_cast<long>(env_or("ODDSYM_TIME_BUDGET_MS", 0));
  auto* cmd_complex = app.add_subcommand("complex", "build a box-truncated complex and write it as JSON");
  cmd_complex->add_option("--family", cx_family, "Z, Y, IX, X, or WQ (default X)");
  cmd_complex->add_option("--n", cx_n, "ambient rank")->required();
  cmd_complex->add_option("--box", cx_box, "coefficient bound b, entries in [-b, b] (default 1)");
  cmd_complex->add_option("--relative", cx_relative, "relative simplex sigma: vectors 'a,b,c;d,e,f'");
  cmd_complex->add_option("--max-dim", cx_max_dim, "cap the simplex dimension");
  cmd_complex->add_option("--max-vertices", cx_max_vertices, "vertex budget");
  cmd_complex->add_option("--max-simplices", cx_max_simplices, "simplex budget");
  cmd_complex->add_option("--time-budget-ms", cx_time_budget, "time budget in milliseconds (0 = unlimited)");
  cmd_complex->add_option("--out", cx_out, "output file (default: stdout)");

  // homology
  std::string ho_in, ho_coeffs = "Q", ho_out;
  bool ho_unreduced = false;
  auto* cmd_homology = app.add_subcommand("homology", "homology of a complex file");
  cmd_homology->add_option("--in", ho_in, "complex JSON file")->required();
  cmd_homology->add_option("--coefficients", ho_coeffs, "Q, F2, or Z (default Q; Z adds torsion)");
  cmd_homology->add_flag("--unreduced", ho_unreduced, "report unreduced homology");
  cmd_homology->add_option("--out", ho_out, "output file (default: stdout)");

  // kostant
  std::string ko_lambda = "0", ko_out;
  std::size_t ko_n = 0;
  auto* cmd_kostant = app.add_subcommand("kostant", "degree / coset representative / Levi weight table");
  cmd_kostant->add_option("--lambda", ko_lambda, "partition, e.g. 3,1 (0 for the trivial weight)");
  cmd_kostant->add_option("--n", ko_n, "rank n")->required();
  cmd_kostant->add_option("--out", ko_out, "output file (default: stdout)");

  // pieri
  std::string pi_lambda = "0", pi_out;
  bool pi_twice = false;
  auto* cmd_pieri = app.add_subcommand("pieri", "horizontal-strip removals of a partition");
  cmd_pieri->add_option("--lambda", pi_lambda, "partition");
  cmd_pieri->add_flag("--twice", pi_twice, "apply the rule twice (rank-2 restriction)");
  cmd_pieri->add_option("--out", pi_out, "output file (default: stdout)");

  // multiplicity
  std::string mu_lambda = "0", mu_out;
  std::size_t mu_g = 0, mu_r = 1;
  std::size_t mu_max_support = env_or("ODDSYM_MAX_SUPPORT", 2000000);
  auto* cmd_mult = app.add_subcommand("multiplicity", "multiplicity of V_lambda in (wedge V)^{(x) r} for Sp_2g");
  cmd_mult->add_option("--lambda", mu_lambda, "partition");
  cmd_mult->add_option("--g", mu_g, "rank g")->required();
  cmd_mult->add_option("--r", mu_r, "tensor power (default 1)");
  cmd_mult->add_option("--max-support", mu_max_support, "character support budget");
  cmd_mult->add_option("--out", mu_out, "output file (default: stdout)");

  // polyfit
  std::string pf_points, pf_out;
  long pf_max_degree = -1;
  auto* cmd_polyfit = app.add_subcommand("polyfit", "exact minimal-degree rational interpolation");
  cmd_polyfit->add_option("--points", pf_points, "pairs x:y, e.g. 3:4,5:6,7:8")->required();
  cmd_polyfit->add_option("--max-degree", pf_max_degree, "verify the data fits this degree");
  cmd_polyfit->add_option("--out", pf_out, "output file (default: stdout)");

  // orbit-necessity
  std::string on_kind = "X", on_out;
  std::size_t on_n = 0, on_size = 1, on_trials = 1000;
  std::uint64_t on_seed = 0, on_mean = 8;
  auto* cmd_necessity = app.add_subcommand("orbit-necessity", "random-word invariance of the orbit conditions");
  cmd_necessity->add_option("--kind", on_kind, "X or IX (default X)");
  cmd_necessity->add_option("--n", on_n, "ambient rank")->required();
  cmd_necessity->add_option("--size", on_size, "tuple size (default 1)");
  cmd_necessity->add_option("--trials", on_trials, "number of trials (default 1000)");
  cmd_necessity->add_option("--seed", on_seed, "RNG seed (default 0)");
  cmd_necessity->add_option("--mean-length", on_mean, "geometric mean word length (default 8)");
  cmd_necessity->add_option("--out", on_out, "output file (default: stdout)");

  // orbit-search
  std::string os_target, os_out;
  std::size_t os_n = 0, os_depth = 4;
  std::size_t os_max_states = env_or("ODDSYM_MAX_STATES", 5000000);
  auto* cmd_search = app.add_subcommand("orbit-search", "bounded BFS for a word mapping the standard tuple to a target");
  cmd_search->add_option("--n", os_n, "ambient rank")->required();
  cmd_search->add_option("--target", os_target, "target tuple: vectors 'a,b,c;d,e,f'")->required();
  cmd_search->add_option("--max-depth", os_depth, "maximum word length (default 4)");
  cmd_search->add_option("--max-states", os_max_states, "visited-state budget");
  cmd_search->add_option("--out", os_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_burau->parsed()) {
      BraidWord word = BraidWord::parse(burau_n, burau_word);
      BurauImage image = burau(word);
      Json j;
      j["n"] = burau_n;
      j["word"] = word.to_csv();
      j["matrix"] = to_json(image.element.matrix());
      j["classification"] = to_string(image.element.level());
      auto perm = underlying_permutation(word);
      j["permutation"] = perm;
      IntVec v = distinguished_vector(burau_n);
      j["fixes_distinguished_vector"] = image.element.matrix().apply(v) == v;
      if (burau_reduced) j["reduced"] = to_json(reduced_burau(word));
      emit(j, burau_out);
    } else if (cmd_braiding->parsed()) {
      GroupElement b = braiding(braid_n, braid_m, parse_convention(braid_conv));
      Json j;
      j["n"] = braid_n;
      j["m"] = braid_m;
      j["convention"] = braid_conv;
      j["matrix"] = to_json(b.matrix());
      j["classification"] = to_string(b.level());
      emit(j, braid_out);
    } else if (cmd_complex->parsed()) {
      ComplexSpec spec;
      spec.family = parse_family(cx_family);
      spec.n = cx_n;
      spec.box = cx_box;
      spec.relative_to = parse_vector_list(cx_relative);
      BuildLimits limits;
      limits.max_vertices = cx_max_vertices;
      limits.max_simplices = cx_max_simplices;
      limits.max_dim = cx_max_dim;
      if (cx_time_budget > 0) limits.time_budget = std::chrono::milliseconds(cx_time_budget);
      FiniteComplex fc = build_complex(spec, limits);
      emit(to_json(fc), cx_out);
      std::cerr << "family " << fc.family << ", n=" << fc.n << ", box=" << fc.box << ": "
                << fc.vertices.size() << " vertices, " << fc.simplices.size()
                << " simplices, top dimension " << fc.dim() << "\n";
    } else if (cmd_homology->parsed()) {
      std::ifstream f(ho_in);
      if (!f) throw std::invalid_argument("cannot open complex file '" + ho_in + "'");
      Json in = Json::parse(f);
      FiniteComplex fc = complex_from_json(in);
      HomologyReport report = homology(chain_complex(fc), parse_coefficients(ho_coeffs), !ho_unreduced);
      emit(to_json(report), ho_out);
      std::cerr << (report.reduced ? "reduced" : "unreduced") << " homology over " << ho_coeffs
                << "\n";
      for (const auto& d : report.degrees) {
        std::cerr << "  H_" << d.degree << ": betti_q=" << d.betti_q;
        if (d.betti_f2) std::cerr << " betti_f2=" << *d.betti_f2;
        if (!d.torsion.empty()) {
          std::cerr << " torsion=";
          for (std::size_t i = 0; i < d.torsion.size(); ++i)
            std::cerr << (i ? "," : "") << "Z/" << d.torsion[i].str();
        }
        std::cerr << "\n";
      }
      std::cerr << "  connectivity estimate: " << report.connectivity << "\n";
    } else if (cmd_kostant->parsed()) {
      Partition lambda = Partition::parse(ko_lambda);
      auto rows = kostant_rows(lambda, ko_n);
      emit(to_json(rows, lambda, ko_n), ko_out);
      std::cerr << "degree  w (window)          levi weight\n";
      for (const auto& row : rows) {
        std::ostringstream w, l;
        for (std::size_t i = 0; i < row.w.window.size(); ++i) w << (i ? "," : "") << row.w.window[i];
        for (std::size_t i = 0; i < row.levi.size(); ++i) l << (i ? "," : "") << row.levi[i];
        std::cerr << "  " << row.degree << "\t[" << w.str() << "]\t(" << l.str() << ")\n";
      }
    } else if (cmd_pieri->parsed()) {
      Partition lambda = Partition::parse(pi_lambda);
      PartitionMultiset ms = pi_twice ? sp_shift(lambda) : pieri_shift(lambda);
      Json j;
      j["lambda"] = lambda.to_csv();
      j["twice"] = pi_twice;
      j["terms"] = to_json(ms);
      emit(j, pi_out);
    } else if (cmd_mult->parsed()) {
      Partition lambda = Partition::parse(mu_lambda);
      Int m = exterior_multiplicity(lambda, mu_g, mu_r, mu_max_support);
      Json j;
      j["lambda"] = lambda.to_csv();
      j["g"] = mu_g;
      j["r"] = mu_r;
      j["multiplicity"] = m.str();
      emit(j, mu_out);
    } else if (cmd_polyfit->parsed()) {
      std::vector<std::pair<Rat, Rat>> pts;
      std::stringstream ss(pf_points);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("point '" + tok + "' is not of the form x:y");
        pts.emplace_back(Rat(tok.substr(0, colon)), Rat(tok.substr(colon + 1)));
      }
      std::optional<std::size_t> bound;
      if (pf_max_degree >= 0) bound = static_cast<std::size_t>(pf_max_degree);
      Polynomial poly = fit_polynomial(pts, bound);
      emit(to_json(poly), pf_out);
    } else if (cmd_necessity->parsed()) {
      OrbitKind kind = on_kind == "IX" ? OrbitKind::IX : OrbitKind::X;
      if (on_kind != "X" && on_kind != "IX")
        throw std::invalid_argument("kind must be X or IX");
      NecessityReport report =
          necessity_experiment(kind, on_n, on_size, on_trials, on_seed, on_mean);
      emit(to_json(report), on_out);
    } else if (cmd_search->parsed()) {
      ReachabilityResult result =
          reachability_search(parse_vector_list(os_target), os_n, os_depth, os_max_states);
      emit(to_json(result), os_out);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
