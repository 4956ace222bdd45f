// gcls command-line front end.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "gcls/gcls.hpp"

using namespace gcls;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitUsage = 2;
constexpr int kExitRefusal = 3;
constexpr std::uint64_t kAutoBruteLimit = 1000000;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_file(out, text);
}

MultiClauseSet load(const std::string& path) {
  try {
    return parse_gcls(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

std::string assignment_text(const PartialAssignment& phi) {
  std::string s;
  for (const auto& [v, e] : phi.bindings()) s += ' ' + std::to_string(v) + ':' + std::to_string(e);
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& file, bool hermitian) {
  MultiClauseSet f = load(file);
  Measures m = measures(f);
  HittingInfo h = classify_hitting(f);
  std::ostringstream out;
  out << "n " << m.n << '\n'
      << "c " << m.c << '\n'
      << "l " << m.ell << '\n'
      << "rd " << m.rd << '\n'
      << "delta " << m.delta << '\n'
      << "delta_star " << max_deficiency(f) << '\n'
      << "surplus " << surplus(f) << '\n'
      << "matching_lean " << yes_no(is_matching_lean(f)) << '\n'
      << "hitting " << yes_no(h.hitting) << '\n'
      << "regular_hitting " << (h.regular ? std::to_string(*h.regular) : std::string("no")) << '\n'
      << "multihitting " << (h.multihitting ? std::to_string(h.blocks.size()) : std::string("no")) << '\n';
  if (hermitian) {
    Inertia in = hermitian_rank(conflict_matrix(f));
    out << "n_plus " << in.n_plus << '\n'
        << "n_minus " << in.n_minus << '\n'
        << "h " << in.h << '\n'
        << "hdef " << in.hdef << '\n';
  }
  std::cout << out.str();
  return 0;
}

int cmd_translate(const std::string& file, const std::string& scheme, bool by_occ, const std::string& out) {
  static const std::map<std::string, Scheme> schemes{{"direct", Scheme::DirectWeak},
                                                     {"direct-strong", Scheme::DirectStrong},
                                                     {"nested", Scheme::Nested},
                                                     {"reduced", Scheme::Reduced},
                                                     {"log", Scheme::Log}};
  MultiClauseSet f = load(file);
  emit(out, emit_dimacs(translate(f, schemes.at(scheme), by_occ)));
  return 0;
}

int cmd_solve(const std::string& file, std::string method) {
  MultiClauseSet f = load(file);
  if (method == "auto") method = assignment_space(f) <= kAutoBruteLimit ? "brute" : "fpt";
  SatResult r;
  if (method == "brute") {
    auto w = brute_force_sat(f);
    r.satisfiable = w.has_value();
    if (w) r.witness = *w;
  } else if (method == "bounded") {
    r = sat_bounded_deficiency(f);
  } else {
    r = sat_fpt(f);
    std::cout << "c nodes " << r.nodes << '\n';
  }
  if (!r.satisfiable) {
    std::cout << "s UNSATISFIABLE\n";
    return kExitUnsat;
  }
  for (const auto& [c, k] : f.clauses())
    if (!r.witness.satisfies(c)) throw std::logic_error("solver witness does not satisfy the input");
  std::cout << "s SATISFIABLE\n" << 'v' << assignment_text(r.witness) << '\n';
  return kExitSat;
}

int cmd_autarky(const std::string& file) {
  auto a = find_nontrivial_autarky_bounded(load(file));
  if (a) std::cout << "AUTARKY" << assignment_text(*a) << '\n';
  else std::cout << "LEAN\n";
  return 0;
}

int cmd_lean_kernel(const std::string& file, const std::string& system, const std::string& out) {
  MultiClauseSet f = load(file);
  emit(out, emit_gcls(system == "matching" ? matching_lean_kernel(f) : lean_kernel_bounded(f)));
  return 0;
}

int cmd_mu1(const std::string& file) {
  MultiClauseSet f = load(file);
  if (recognize_mu1(f).verdict != Mu1Verdict::Mu1) {
    std::cout << "NOT-MU1\n";
    return 0;
  }
  Mu1Classification cl = classify_mu1(f);
  std::cout << "MU1 " << mu1_class_name(cl.cls) << '\n';
  if (cl.tree) std::cout << serialize_tree(*cl.tree) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised clause-set toolkit"};
  app.require_subcommand(1);

  std::string file, out, scheme = "direct", method = "auto", system = "matching", hypfile;
  bool hermitian = false, by_occ = false;
  std::uint32_t m = 0, k = 0, n = 0;

  auto* analyze = app.add_subcommand("analyze", "Report measures of a clause-set");
  analyze->add_flag("--hermitian", hermitian, "Include the inertia of the conflict matrix");
  analyze->add_option("FILE", file)->required();

  auto* tr = app.add_subcommand("translate", "Boolean translation to DIMACS");
  tr->add_option("--scheme", scheme)->check(CLI::IsMember({"direct", "direct-strong", "nested", "reduced", "log"}));
  tr->add_flag("--order-by-occurrences", by_occ, "Order domains by descending occurrence count");
  tr->add_option("FILE", file)->required();
  tr->add_option("-o", out, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Decide satisfiability");
  solve->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "bounded", "fpt"}));
  solve->add_option("FILE", file)->required();

  auto* autarky = app.add_subcommand("autarky", "Find a non-trivial autarky");
  autarky->add_option("FILE", file)->required();

  auto* lk = app.add_subcommand("lean-kernel", "Compute a lean kernel");
  lk->add_option("--system", system)->check(CLI::IsMember({"matching", "general"}));
  lk->add_option("FILE", file)->required();
  lk->add_option("-o", out, "Output file (default stdout)");

  auto* mu1 = app.add_subcommand("mu1", "Recognise and classify MU of deficiency 1");
  mu1->add_option("FILE", file)->required();

  auto* enc = app.add_subcommand("encode", "Generate instances");
  enc->require_subcommand(1);
  auto* vdw = enc->add_subcommand("vdw", "van der Waerden instance");
  vdw->add_option("M", m)->required();
  vdw->add_option("K", k)->required()->check(CLI::PositiveNumber);
  vdw->add_option("N", n)->required();
  vdw->add_option("-o", out, "Output file (default stdout)");
  auto* col = enc->add_subcommand("coloring", "Weak hypergraph colouring");
  col->add_option("HYPFILE", hypfile)->required();
  col->add_option("K", k)->required()->check(CLI::PositiveNumber);
  col->add_option("-o", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(file, hermitian);
    if (*tr) return cmd_translate(file, scheme, by_occ, out);
    if (*solve) return cmd_solve(file, method);
    if (*autarky) return cmd_autarky(file);
    if (*lk) return cmd_lean_kernel(file, system, out);
    if (*mu1) return cmd_mu1(file);
    if (*vdw) {
      if (m == 0) throw CLI::ValidationError("M", "at least one colour is required");
      emit(out, emit_gcls(vdw_instance(m, k, n)));
      return 0;
    }
    if (*col) {
      emit(out, emit_gcls(hypergraph_coloring(parse_hypergraph(read_file(hypfile)), k)));
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefusal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
